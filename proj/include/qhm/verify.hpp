#pragma once

#include <vector>

#include "qhm/core.hpp"

namespace qhm {

// Violation records carry 1-based component indices and the offending
// magnitude (largest |entry| of the residual, as a double).
struct IndexViolation {
    int index = 0;
    double magnitude = 0.0;
};

struct PairViolation {
    int i = 0, j = 0;
    double magnitude = 0.0;
};

struct HarmonicCheck {
    bool ok = false;
    std::vector<IndexViolation> violations; // components with nonzero trace
};

struct HwcCheck {
    bool ok = false;
    std::vector<PairViolation> anticommute; // pairs with A_i A_j + A_j A_i != 0
    std::vector<PairViolation> squares;     // pairs with A_i^2 != A_j^2
};

struct HMReport {
    bool is_harmonic = false;
    bool is_hwc = false;
    bool is_harmonic_morphism = false;
    bool is_constant = false;
    std::vector<IndexViolation> trace_violations;
    std::vector<PairViolation> anticommute_violations;
    std::vector<PairViolation> square_violations;
};

// Harmonicity: every component matrix is trace-free.
HarmonicCheck check_harmonic(const QuadraticMap& map, const Tol& tol = {});

// Horizontal weak conformality: components pairwise anticommute and share
// a common square.
HwcCheck check_hwc(const QuadraticMap& map, const Tol& tol = {});

// Both of the above plus non-constancy.
HMReport check_harmonic_morphism(const QuadraticMap& map, const Tol& tol = {});

// Independent numerical route: sample random points and test that the
// gradient Gram matrix is a scalar multiple of the identity at each one.
// Deviations are compared against tol.rel * (1 + lambda^2).
bool conformality_oracle(const QuadraticMap& map, int sample_count,
                         unsigned long long seed, const Tol& tol = {});

// Square dilation lambda^2(x) = 4 x^T A_1^2 x. Requires a horizontally
// weakly conformal map.
double dilation(const QuadraticMap& map, const std::vector<double>& x, const Tol& tol = {});
Rational dilation_exact(const QuadraticMap& map, const std::vector<Rational>& x);

} // namespace qhm
