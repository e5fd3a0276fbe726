#pragma once

#include <vector>

#include "qhm/core.hpp"

namespace qhm {

// Bilinear norm-multiplicative product f: R^n x R^n -> R^n given by its
// structure tensor: f(x, y)_k = sum_ij coeff(i,j,k) x_i y_j. Basis element 0
// is the algebra unit, so f(e_0, y) = y.
struct OrthogonalMultiplication {
    int n = 0;
    std::vector<int> c; // n^3 entries, index (i*n + j)*n + k

    int coeff(int i, int j, int k) const {
        return c[static_cast<size_t>((i * n + j) * n + k)];
    }

    template <class T>
    std::vector<T> multiply(const std::vector<T>& x, const std::vector<T>& y) const {
        if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
            throw DimensionError("OrthogonalMultiplication: operand size mismatch");
        std::vector<T> out(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            if (exactly_zero(x[static_cast<size_t>(i)])) continue;
            for (int j = 0; j < n; ++j) {
                if (exactly_zero(y[static_cast<size_t>(j)])) continue;
                for (int k = 0; k < n; ++k) {
                    const int s = coeff(i, j, k);
                    if (s == 0) continue;
                    out[static_cast<size_t>(k)] +=
                        T(s) * x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
                }
            }
        }
        return out;
    }

    // Matrix of y -> f(e_i, y) in the standard basis.
    Mat<Rational> left_mult(int i) const {
        Mat<Rational> l(n, n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) l(k, j) = Rational(coeff(i, j, k));
        return l;
    }
};

// The real, complex, quaternion and octonion products via iterated
// Cayley-Dickson doubling (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
// Only n in {1, 2, 4, 8} exists; anything else is rejected.
OrthogonalMultiplication orth_mult(int n);

// F(x, y) = (|x|^2 - |y|^2, 2 f(x, y)): R^{2n} -> R^{n+1}, exact mode.
QuadraticMap hopf_construction(int n);

// Doubles the domain: each A_i becomes [[0, A_i], [A_i, 0]]. Requires a
// harmonic morphism; the lift is again one, with the same codomain.
QuadraticMap complete_lift(const QuadraticMap& map, const Tol& tol = {});

} // namespace qhm
