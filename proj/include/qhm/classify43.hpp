#pragma once

#include "qhm/core.hpp"

namespace qhm {

// The one-parameter family of quadratic harmonic morphisms R^4 -> R^3
// (up to dilation lambda > 0 and the choices classified below):
//   component 1: lambda (x1^2 + x2^2 - x3^2 - x4^2)
//   component 2: 2 lambda (cos t (x1 x3 + x2 x4) + sin t (x1 x4 - x2 x3))
//   component 3: 2 lambda (sin t (x1 x3 + x2 x4) - cos t (x1 x4 - x2 x3))
//     ... written with blocks B1 = [[c, s], [-s, c]], B2 = [[s, -c], [c, s]].
QuadraticMap phi_t(double lambda, double t);
// Exact variant; (cos_t, sin_t) must satisfy cos^2 + sin^2 = 1 exactly.
QuadraticMap phi_t_exact(const Rational& lambda, const Rational& cos_t, const Rational& sin_t);

// phi_0 scaled: lambda (x1^2 + x2^2 - x3^2 - x4^2,
//                       2 x1 x3 + 2 x2 x4, -2 x1 x4 + 2 x2 x3).
QuadraticMap hopf_standard(double lambda);
QuadraticMap hopf_standard_exact(const Rational& lambda);

// G(t) = [[1, 0, 0], [0, cos t, sin t], [0, -sin t, cos t]]; satisfies
// G(t) phi_t = lambda phi_0 pointwise.
Mat<double> rotation_g(double t);
Mat<Rational> rotation_g_exact(const Rational& cos_t, const Rational& sin_t);

// Witness data putting a morphism R^4 -> R^3 into the family: the input
// equals G^{-1} ( lambda phi_0 ( P x ) ), with an extra reflection folded
// into G when the second block has the mirrored orientation.
struct Classification43 {
    double lambda = 0.0;
    double t = 0.0; // in [0, 2 pi)
    Mat<double> P;  // 4 x 4 orthogonal
    Mat<double> G;  // 3 x 3 orthogonal
    bool orientation_flipped = false;
    double residual = 0.0; // max |input - reconstruction| over sample points
};

// Classifies any quadratic harmonic morphism R^4 -> R^3. Wrong dimensions
// raise DimensionError, non-morphisms DomainError. Every such morphism is
// Q-nonsingular and umbilical; violations of that theorem raise InternalError.
Classification43 classify(const QuadraticMap& map, const Tol& tol = {});

// Samples the unit sphere S^3 and checks |phi(x)| = lambda there (so phi
// restricts to a sphere map S^3 -> S^2(lambda)). Requires a morphism.
bool sphere_restriction_check(const QuadraticMap& map, const Tol& tol = {});

} // namespace qhm
