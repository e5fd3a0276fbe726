#include "qhm/classify43.hpp"

#include <cmath>

#include "qhm/sampling.hpp"
#include "qhm/spectral.hpp"
#include "qhm/verify.hpp"

namespace qhm {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

template <class T>
std::vector<Mat<T>> phi_t_components(const T& lambda, const T& c, const T& s) {
    // A1 = lambda diag(1, 1, -1, -1); A2, A3 carry the rotation blocks.
    Mat<T> a1(4, 4);
    a1(0, 0) = lambda;
    a1(1, 1) = lambda;
    a1(2, 2) = -lambda;
    a1(3, 3) = -lambda;
    Mat<T> b1(2, 2), b2(2, 2);
    b1(0, 0) = c;  b1(0, 1) = s;
    b1(1, 0) = -s; b1(1, 1) = c;
    b2(0, 0) = s;  b2(0, 1) = -c;
    b2(1, 0) = c;  b2(1, 1) = s;
    auto embed = [&](const Mat<T>& b) {
        Mat<T> a(4, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                a(i, 2 + j) = lambda * b(i, j);
                a(2 + j, i) = lambda * b(i, j);
            }
        return a;
    };
    return {a1, embed(b1), embed(b2)};
}

} // namespace

QuadraticMap phi_t(double lambda, double t) {
    if (!(lambda > 0.0))
        throw DomainError("phi_t: lambda must be positive");
    return QuadraticMap::from_fp(phi_t_components(lambda, std::cos(t), std::sin(t)));
}

QuadraticMap phi_t_exact(const Rational& lambda, const Rational& cos_t, const Rational& sin_t) {
    if (!(lambda > Rational(0)))
        throw DomainError("phi_t: lambda must be positive");
    if (!(cos_t * cos_t + sin_t * sin_t == Rational(1)))
        throw DomainError("phi_t: cos_t^2 + sin_t^2 must equal 1 exactly");
    return QuadraticMap::from_exact(phi_t_components(lambda, cos_t, sin_t));
}

QuadraticMap hopf_standard(double lambda) { return phi_t(lambda, 0.0); }

QuadraticMap hopf_standard_exact(const Rational& lambda) {
    return phi_t_exact(lambda, Rational(1), Rational(0));
}

Mat<double> rotation_g(double t) {
    Mat<double> g = Mat<double>::identity(3);
    g(1, 1) = std::cos(t);
    g(1, 2) = std::sin(t);
    g(2, 1) = -std::sin(t);
    g(2, 2) = std::cos(t);
    return g;
}

Mat<Rational> rotation_g_exact(const Rational& cos_t, const Rational& sin_t) {
    if (!(cos_t * cos_t + sin_t * sin_t == Rational(1)))
        throw DomainError("rotation_g: cos_t^2 + sin_t^2 must equal 1 exactly");
    Mat<Rational> g = Mat<Rational>::identity(3);
    g(1, 1) = cos_t;
    g(1, 2) = sin_t;
    g(2, 1) = -sin_t;
    g(2, 2) = cos_t;
    return g;
}

Classification43 classify(const QuadraticMap& map, const Tol& tol) {
    if (map.m() != 4 || map.n() != 3)
        throw DimensionError("classify: expected a map R^4 -> R^3");
    if (!check_harmonic_morphism(map, tol).is_harmonic_morphism)
        throw DomainError("classify: input is not a harmonic morphism");

    const NormalFormT<double> nf = normal_form(map, tol).as_fp();
    if (nf.k != 2 || nf.r != 0)
        throw InternalError("classify: morphism R^4 -> R^3 is not Q-nonsingular, "
                            "contradicting the classification");
    if (std::abs(nf.D[0] - nf.D[1]) > 1e-6 * std::max(1.0, nf.D[0]))
        throw InternalError("classify: morphism R^4 -> R^3 is not umbilical, "
                            "contradicting the classification");
    const double lambda = 0.5 * (nf.D[0] + nf.D[1]);

    Mat<double> p = nf.P;
    Mat<double> b1(2, 2), b2(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            b1(i, j) = nf.blocks[0](i, j) / lambda;
            b2(i, j) = nf.blocks[1](i, j) / lambda;
        }

    // B1 must land in SO(2); if the eigenbasis gave the mirrored orientation,
    // swap the two negative-eigenvalue coordinates (columns 3, 4 of P).
    const double det1 = b1(0, 0) * b1(1, 1) - b1(0, 1) * b1(1, 0);
    if (det1 < 0.0) {
        for (int i = 0; i < 2; ++i) std::swap(b1(i, 0), b1(i, 1));
        for (int i = 0; i < 2; ++i) std::swap(b2(i, 0), b2(i, 1));
        for (int i = 0; i < 4; ++i) std::swap(p(i, 2), p(i, 3));
    }

    double t = std::atan2(b1(0, 1), b1(0, 0));
    if (t < 0.0) t += kTwoPi;

    // The second block is forced up to sign: +/- [[sin t, -cos t], [cos t, sin t]].
    const double c = b1(0, 0), s = b1(0, 1);
    Mat<double> expected(2, 2);
    expected(0, 0) = s;  expected(0, 1) = -c;
    expected(1, 0) = c;  expected(1, 1) = s;
    const double match_tol = 1e-6;
    bool flipped;
    if (max_abs_diff(b2, expected) <= match_tol)
        flipped = false;
    else if (max_abs_diff(b2, -expected) <= match_tol)
        flipped = true;
    else
        throw InternalError("classify: second block is not a rotation of the first "
                            "by a quarter turn, contradicting the classification");

    Classification43 out;
    out.lambda = lambda;
    out.t = t;
    out.P = p.transpose(); // map already sits in the basis P; witness undoes it
    out.G = rotation_g(t);
    out.orientation_flipped = flipped;
    if (flipped) {
        // Fold the codomain reflection fixing the first axis into G.
        for (int i = 0; i < 3; ++i) out.G(i, 2) = -out.G(i, 2);
    }

    // Residual of input(x) = G^{-1} lambda phi_0 (P x) at fixed sample points.
    const QuadraticMap model = hopf_standard(lambda);
    const Mat<double> g_inv = out.G.transpose();
    Rng rng(20240811);
    double residual = 0.0;
    for (int sample = 0; sample < 50; ++sample) {
        const std::vector<double> x = rng.vector_pm1(4);
        const std::vector<double> lhs = evaluate(map, x);
        const std::vector<double> rhs = mat_vec(g_inv, evaluate(model, mat_vec(out.P, x)));
        for (int i = 0; i < 3; ++i)
            residual = std::max(residual, std::abs(lhs[static_cast<size_t>(i)] -
                                                   rhs[static_cast<size_t>(i)]));
    }
    out.residual = residual;
    return out;
}

bool sphere_restriction_check(const QuadraticMap& map, const Tol& tol) {
    if (map.m() != 4 || map.n() != 3)
        throw DimensionError("sphere_restriction_check: expected a map R^4 -> R^3");
    if (!check_harmonic_morphism(map, tol).is_harmonic_morphism)
        throw DomainError("sphere_restriction_check: input is not a harmonic morphism");
    const NormalFormT<double> nf = normal_form(map, tol).as_fp();
    const double lambda = 0.5 * (nf.D[0] + nf.D[1]);
    Rng rng(20240812);
    for (int sample = 0; sample < 100; ++sample) {
        std::vector<double> x = rng.vector_pm1(4);
        double norm2 = 0.0;
        for (double v : x) norm2 += v * v;
        if (norm2 < 1e-6) continue;
        const double inv = 1.0 / std::sqrt(norm2);
        for (double& v : x) v *= inv;
        const std::vector<double> y = evaluate(map, x);
        const double len = std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
        if (std::abs(len - lambda) > tol.rel * (1.0 + lambda) + tol.abs_floor) return false;
    }
    return true;
}

} // namespace qhm
