#pragma once

#include <random>
#include <vector>

#include "qhm/matrix.hpp"

namespace qhm {

// Seeded sample source for oracles and randomized checks. Values are derived
// from raw mt19937_64 words so a given seed produces identical streams on
// every platform (no reliance on distribution implementations).
class Rng {
public:
    explicit Rng(unsigned long long seed) : g_(seed) {}

    // Uniform in [-1, 1).
    double uniform_pm1() {
        const unsigned long long u = g_() >> 11; // 53 random bits
        return static_cast<double>(u) * 0x1p-52 - 1.0;
    }

    double uniform(double lo, double hi) {
        const unsigned long long u = g_() >> 11;
        return lo + (hi - lo) * (static_cast<double>(u) * 0x1p-53);
    }

    long long integer(long long lo, long long hi) { // inclusive bounds
        const unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1;
        return lo + static_cast<long long>(g_() % span);
    }

    std::vector<double> vector_pm1(int n) {
        std::vector<double> v(static_cast<size_t>(n));
        for (double& x : v) x = uniform_pm1();
        return v;
    }

    // Random rational in [-1, 1] with the given denominator.
    Rational rational_pm1(long den = 16) {
        return Rational(static_cast<long>(integer(-den, den)), den);
    }

    std::vector<Rational> rational_vector(int n, long den = 16) {
        std::vector<Rational> v;
        v.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v.push_back(rational_pm1(den));
        return v;
    }

    Mat<double> matrix_pm1(int rows, int cols) {
        Mat<double> a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a(i, j) = uniform_pm1();
        return a;
    }

    Mat<double> symmetric_pm1(int n) {
        Mat<double> a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                a(i, j) = uniform_pm1();
                a(j, i) = a(i, j);
            }
        return a;
    }

    // Haar-ish random orthogonal matrix via Gram-Schmidt on random columns.
    Mat<double> orthogonal(int n) {
        Mat<double> q(n, n);
        for (int col = 0; col < n; ++col) {
            while (true) {
                std::vector<double> v(static_cast<size_t>(n));
                for (double& x : v) x = uniform_pm1();
                for (int prev = 0; prev < col; ++prev) {
                    double proj = 0.0;
                    for (int i = 0; i < n; ++i) proj += q(i, prev) * v[static_cast<size_t>(i)];
                    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] -= proj * q(i, prev);
                }
                double norm2 = 0.0;
                for (double x : v) norm2 += x * x;
                if (norm2 > 1e-12) {
                    const double inv = 1.0 / std::sqrt(norm2);
                    for (int i = 0; i < n; ++i) q(i, col) = v[static_cast<size_t>(i)] * inv;
                    break;
                }
            }
        }
        return q;
    }

private:
    std::mt19937_64 g_;
};

} // namespace qhm
