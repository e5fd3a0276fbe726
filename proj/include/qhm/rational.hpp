#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qhm/errors.hpp"

namespace qhm {

// Arbitrary-precision rational, always kept canonical: reduced, denominator > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(mpz_class(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw DomainError("Rational: zero denominator");
        v_ = mpq_class(mpz_class(num), mpz_class(den));
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) {
        if (v_.get_den() == 0) throw DomainError("Rational: zero denominator");
        v_.canonicalize();
    }

    // Accepts "12", "-3", "+7/4", "-3/4". Anything else yields nullopt.
    static std::optional<Rational> parse(std::string_view s) {
        auto digits = [](std::string_view t) {
            if (t.empty()) return false;
            for (char c : t)
                if (!std::isdigit(static_cast<unsigned char>(c))) return false;
            return true;
        };
        auto signed_digits = [&](std::string_view t, std::string& out) {
            bool neg = false;
            if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
                neg = t.front() == '-';
                t.remove_prefix(1);
            }
            if (!digits(t)) return false;
            out = (neg ? "-" : "") + std::string(t);
            return true;
        };
        const auto slash = s.find('/');
        std::string num, den = "1";
        if (slash == std::string_view::npos) {
            if (!signed_digits(s, num)) return std::nullopt;
        } else {
            if (!signed_digits(s.substr(0, slash), num)) return std::nullopt;
            if (!signed_digits(s.substr(slash + 1), den)) return std::nullopt;
        }
        mpz_class n(num), d(den);
        if (d == 0) return std::nullopt;
        return Rational(mpq_class(n, d));
    }

    // Canonical text form: "p" or "p/q" with q > 1.
    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    // Exact square root when numerator and denominator are both perfect squares.
    static std::optional<Rational> exact_sqrt(const Rational& x) {
        if (x.sign() < 0) return std::nullopt;
        const mpz_class num = x.v_.get_num(), den = x.v_.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return Rational(mpq_class(rn, rd));
    }

    const mpq_class& raw() const { return v_; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    mpq_class v_;
};

} // namespace qhm
