#include "qhm/constructions.hpp"

#include "qhm/verify.hpp"

namespace qhm {
namespace {

// Cayley-Dickson double of a table whose conjugation is e_0 -> e_0,
// e_i -> -e_i. With E_i = (e_i, 0), E_{n+i} = (0, e_i):
//   E_i E_j         = (e_i e_j, 0)
//   E_i E_{n+j}     = (0, e_j e_i)
//   E_{n+i} E_j     = (0, e_i conj(e_j)) = conj_sign(j) (0, e_i e_j)
//   E_{n+i} E_{n+j} = (-conj(e_j) e_i, 0) = -conj_sign(j) (e_j e_i, 0)
OrthogonalMultiplication cayley_dickson(const OrthogonalMultiplication& base) {
    const int n = base.n;
    OrthogonalMultiplication out;
    out.n = 2 * n;
    out.c.assign(static_cast<size_t>(8 * n * n * n), 0);
    auto set = [&](int i, int j, int k, int v) {
        out.c[static_cast<size_t>((i * out.n + j) * out.n + k)] = v;
    };
    auto conj_sign = [](int j) { return j == 0 ? 1 : -1; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const int v = base.coeff(i, j, k);
                if (v == 0) continue;
                set(i, j, k, v);
                set(j, n + i, n + k, v);                 // e_j e_i lands here with (i,j) swapped
                set(n + i, j, n + k, conj_sign(j) * v);
                set(n + j, n + i, k, -conj_sign(i) * v); // -conj_sign(i) e_i e_j, swapped roles
            }
    return out;
}

} // namespace

OrthogonalMultiplication orth_mult(int n) {
    if (n != 1 && n != 2 && n != 4 && n != 8)
        throw DomainError("orth_mult: normed multiplications exist only for n = 1, 2, 4, 8");
    OrthogonalMultiplication t;
    t.n = 1;
    t.c = {1};
    while (t.n < n) t = cayley_dickson(t);
    return t;
}

QuadraticMap hopf_construction(int n) {
    const OrthogonalMultiplication mult = orth_mult(n);
    std::vector<Mat<Rational>> comps;
    comps.reserve(static_cast<size_t>(n) + 1);
    Mat<Rational> a1(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        a1(i, i) = Rational(1);
        a1(n + i, n + i) = Rational(-1);
    }
    comps.push_back(std::move(a1));
    // Component 1+k reads 2 f(x, y)_k off the bilinear form x^T [[0,C],[C^T,0]] x
    // with C_ij = coeff(i, j, k).
    for (int k = 0; k < n; ++k) {
        Mat<Rational> a(2 * n, 2 * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int v = mult.coeff(i, j, k);
                if (v == 0) continue;
                a(i, n + j) = Rational(v);
                a(n + j, i) = Rational(v);
            }
        comps.push_back(std::move(a));
    }
    return QuadraticMap::from_exact(std::move(comps));
}

QuadraticMap complete_lift(const QuadraticMap& map, const Tol& tol) {
    if (!check_harmonic_morphism(map, tol).is_harmonic_morphism)
        throw DomainError("complete_lift: input is not a harmonic morphism");
    const int m = map.m();
    if (map.mode() == Mode::exact) {
        std::vector<Mat<Rational>> lifted;
        lifted.reserve(static_cast<size_t>(map.n()));
        for (const Mat<Rational>& a : map.components_exact()) {
            Mat<Rational> l(2 * m, 2 * m);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    l(i, m + j) = a(i, j);
                    l(m + i, j) = a(j, i);
                }
            lifted.push_back(std::move(l));
        }
        return QuadraticMap::from_exact(std::move(lifted));
    }
    std::vector<Mat<double>> lifted;
    lifted.reserve(static_cast<size_t>(map.n()));
    for (const Mat<double>& a : map.components_fp()) {
        Mat<double> l(2 * m, 2 * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                l(i, m + j) = a(i, j);
                l(m + i, j) = a(j, i);
            }
        lifted.push_back(std::move(l));
    }
    return QuadraticMap::from_fp(std::move(lifted));
}

} // namespace qhm
