#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "qhm/core.hpp"

namespace qhm {

// Eigendecomposition A = V diag(values) V^T of a symmetric matrix; column j
// of V is the eigenvector for values[j]. Values come out in diagonal order,
// not sorted.
struct EigenDecomposition {
    std::vector<double> values;
    Mat<double> vectors;
};

// Cyclic Jacobi. Converges when the off-diagonal Frobenius norm drops below
// conv_rel * ||A||_F; throws EigenError after max_sweeps sweeps. Exactly-zero
// pivots are never rotated, so diagonal input returns V = I exactly.
EigenDecomposition eigen_symmetric(const Mat<double>& a, double conv_rel = 1e-12,
                                   int max_sweeps = 100);

// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recursion,
// exact over rationals. Coefficients ascending: c[0] + c[1] x + ... + x^m.
std::vector<Rational> char_poly(const Mat<Rational>& a);

// The following read off spectral facts of a symmetric (hence diagonalizable)
// matrix from its characteristic polynomial, exactly.
int rank_from_char_poly(const std::vector<Rational>& c);
bool plus_minus_paired_from_char_poly(const std::vector<Rational>& c);
// If the nonzero spectrum is {±sqrt(mu)} with one positive value mu of even
// multiplicity, returns mu; otherwise nullopt.
std::optional<Rational> umbilical_mu_from_char_poly(const std::vector<Rational>& c);

struct SpectrumReport {
    std::vector<std::vector<double>> spectra; // per component, sorted descending
    int common_rank = 0;                      // rank shared by all components
    bool rank_is_even = false;
    bool spectra_equal = false;     // all components have the same spectrum
    bool plus_minus_paired = false; // every spectrum is symmetric about 0
};

// Rank of the component matrices of a harmonic morphism (they all agree).
// Rejects non-morphisms.
int q_rank(const QuadraticMap& map, const Tol& tol = {});

// Spectral data of the components of any quadratic map (no morphism
// precondition). In exact mode the flags and rank are certified via
// characteristic polynomials; displayed eigenvalues are doubles either way.
SpectrumReport spectrum_report(const QuadraticMap& map, const Tol& tol = {});

// Canonical orthogonal normal form of a harmonic morphism:
//   P^T A_1 P = diag(D, -D, 0_r),
//   P^T A_{i+1} P = [[0, B_i, 0], [B_i^T, 0, 0], [0, 0, 0_r]],
// with D positive descending (k values) and k x k blocks B_i satisfying
//   D B_i = B_i D,  B_i^T B_i = D^2,  B_i^T B_j = -B_j^T B_i (i != j).
template <class T>
struct NormalFormT {
    Mat<T> P;                  // m x m orthogonal change of coordinates
    int k = 0;                 // half the common rank
    int r = 0;                 // kernel dimension, m = 2k + r
    std::vector<T> D;          // k positive diagonal values, descending
    std::vector<Mat<T>> blocks; // n-1 matrices B_1..B_{n-1}
};

class NormalForm {
public:
    explicit NormalForm(NormalFormT<Rational> nf) : v_(std::move(nf)) {}
    explicit NormalForm(NormalFormT<double> nf) : v_(std::move(nf)) {}

    Mode mode() const {
        return std::holds_alternative<NormalFormT<Rational>>(v_) ? Mode::exact
                                                                 : Mode::floating;
    }
    const NormalFormT<Rational>& exact() const { return std::get<NormalFormT<Rational>>(v_); }
    const NormalFormT<double>& fp() const { return std::get<NormalFormT<double>>(v_); }

    int k() const { return mode() == Mode::exact ? exact().k : fp().k; }
    int r() const { return mode() == Mode::exact ? exact().r : fp().r; }
    int dim() const { return 2 * k() + r(); }
    int block_count() const {
        return mode() == Mode::exact ? static_cast<int>(exact().blocks.size())
                                     : static_cast<int>(fp().blocks.size());
    }
    NormalFormT<double> as_fp() const;

private:
    std::variant<NormalFormT<Rational>, NormalFormT<double>> v_;
};

// Computes the normal form of a harmonic morphism. Exact-mode maps whose A_1
// is already diagonal stay exact (P is a signed permutation of coordinates);
// everything else goes through the float eigensolver. Rejects non-morphisms.
NormalForm normal_form(const QuadraticMap& map, const Tol& tol = {});

// Rebuilds the map P * canonical_i * P^T from a normal form. The optional
// codomain dimension must match blocks.size() + 1 when given.
QuadraticMap reconstruct(const NormalForm& nf, int n = -1);

// Orthogonal projection onto (ker A_1)^perp together with the Q-nonsingular
// core map: evaluate(map, x) == evaluate(core, projection * x).
struct SingularSplit {
    Mat<double> projection;                    // 2k x m
    std::optional<Mat<Rational>> projection_exact; // present on the exact path
    QuadraticMap core;                         // R^{2k} -> R^n, Q-nonsingular
};
SingularSplit split_singular(const QuadraticMap& map, const Tol& tol = {});

// Whether all positive eigenvalues of A_1 coincide (single value lambda);
// second member is the positive spectrum, descending. Rejects non-morphisms.
std::pair<bool, std::vector<double>> is_umbilical(const QuadraticMap& map, const Tol& tol = {});

} // namespace qhm
