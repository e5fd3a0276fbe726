#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "qhm/errors.hpp"
#include "qhm/rational.hpp"

namespace qhm {

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.to_double(); }
inline bool exactly_zero(double x) { return x == 0.0; }
inline bool exactly_zero(const Rational& x) { return x.is_zero(); }

// Dense row-major matrix over double or Rational. Sizes here are tiny
// (m <= a few dozen), so everything is plain O(n^3) textbook code.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw DimensionError("Mat: negative size");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        if (!is_square()) throw DimensionError("trace: matrix not square");
        T s{};
        for (int i = 0; i < rows_; ++i) s += (*this)(i, i);
        return s;
    }

    double max_abs() const {
        double m = 0.0;
        for (const T& v : a_) m = std::max(m, std::abs(to_double(v)));
        return m;
    }

    bool operator==(const Mat& o) const = default;

    friend Mat operator+(const Mat& a, const Mat& b) {
        same_shape(a, b, "+");
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        same_shape(a, b, "-");
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_)
            throw DimensionError("matrix product: inner dimensions differ (" +
                                 std::to_string(a.cols_) + " vs " + std::to_string(b.rows_) + ")");
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (exactly_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend Mat operator*(const T& s, const Mat& a) {
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = s * a.a_[i];
        return r;
    }
    Mat operator-() const { return T(-1) * (*this); }

private:
    static void same_shape(const Mat& a, const Mat& b, const char* op) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionError(std::string("matrix ") + op + ": shapes differ");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

template <class T>
std::vector<T> mat_vec(const Mat<T>& a, const std::vector<T>& x) {
    if (a.cols() != static_cast<int>(x.size()))
        throw DimensionError("mat_vec: size mismatch");
    std::vector<T> r(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        T s{};
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        r[i] = s;
    }
    return r;
}

template <class T>
T dot(const std::vector<T>& x, const std::vector<T>& y) {
    if (x.size() != y.size()) throw DimensionError("dot: size mismatch");
    T s{};
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

template <class T>
double max_abs_diff(const Mat<T>& a, const Mat<T>& b) {
    return (a - b).max_abs();
}

template <class T>
bool is_symmetric_exact(const Mat<T>& a) {
    if (!a.is_square()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            if (!(a(i, j) == a(j, i))) return false;
    return true;
}

template <class T>
Mat<T> kron(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (exactly_zero(a(i, j))) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    r(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return r;
}

// Places the blocks down the diagonal, zero elsewhere.
template <class T>
Mat<T> block_diag(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> r(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

inline Mat<double> as_fp(const Mat<Rational>& a) {
    Mat<double> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).to_double();
    return r;
}
inline const Mat<double>& as_fp(const Mat<double>& a) { return a; }

} // namespace qhm
