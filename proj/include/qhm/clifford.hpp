#pragma once

#include <optional>
#include <vector>

#include "qhm/core.hpp"
#include "qhm/spectral.hpp"

namespace qhm {

// True iff the symmetric matrices satisfy P_i P_j + P_j P_i = 2 delta_ij I.
// Dimensions must agree and be even; matrices must be symmetric (exactly,
// or within tolerance for floats).
bool check_clifford(const std::vector<Mat<Rational>>& members);
bool check_clifford(const std::vector<Mat<double>>& members, const Tol& tol = {});

// A verified Clifford system: symmetric members P_0..P_n on R^{2m} obeying
// the relations above. Construction validates; one arithmetic mode per system.
class CliffordSystem {
public:
    explicit CliffordSystem(const std::vector<SymMatrix>& members, const Tol& tol = {});
    static CliffordSystem from_exact(std::vector<Mat<Rational>> members);
    static CliffordSystem from_fp(std::vector<Mat<double>> members, const Tol& tol = {});

    int count() const { return static_cast<int>(n_members_); } // n + 1
    int dim() const { return dim_; }                           // 2m
    Mode mode() const { return mode_; }

    const std::vector<Mat<Rational>>& members_exact() const;
    const std::vector<Mat<double>>& members_fp() const;
    std::vector<Mat<double>> members_as_fp() const;

private:
    CliffordSystem() = default;
    size_t n_members_ = 0;
    int dim_ = 0;
    Mode mode_ = Mode::floating;
    std::vector<Mat<Rational>> exact_;
    std::vector<Mat<double>> fp_;
};

// Member-wise block-diagonal sum; both systems need the same member count.
CliffordSystem direct_sum(const CliffordSystem& a, const CliffordSystem& b);

// Smallest m such that a Clifford system with n+1 members exists on R^{2m}:
// 1, 2, 4, 4, 8, 8, 8, 8 for n = 1..8, then delta(n+8) = 16 delta(n).
int delta(int n);

// An irreducible representative with n+1 members on R^{2 delta(n)}, integer
// entries, exact mode.
CliffordSystem irreducible(int n);

// The quadratic map whose components are the system members themselves.
// Needs at least two members (a lone P_0 has trace != 0).
QuadraticMap qhm_from_clifford(const CliffordSystem& system);

// Umbilical Q-nonsingular morphisms correspond to Clifford systems after
// dividing out the single eigenvalue: in normal-form coordinates
// S_1 = diag(I, -I), S_{i+1} = [[0, B_i/lambda], [B_i^T/lambda, 0]].
struct UmbilicalClifford {
    CliffordSystem system;
    NormalForm frame; // normal form used; frame.P conjugates, D[0] = lambda
    double scale = 0.0;
    std::optional<Rational> scale_exact; // present when computed exactly
};
UmbilicalClifford clifford_from_umbilical(const QuadraticMap& map, const Tol& tol = {});

// True iff a is orthogonal and a P_i a^T = Q_i for every member.
bool equivalence_witness_check(const CliffordSystem& p, const CliffordSystem& q,
                               const Mat<double>& a, const Tol& tol = {});

// Invariants separating algebraic equivalence classes: (dim, count,
// multiplicity = dim / (2 delta(n)), trace of the ordered member product).
// The product trace is nonzero only when n is divisible by 4, where its sign
// splits the two classes.
struct CliffordInvariants {
    int dim = 0;
    int count = 0;
    int multiplicity = 0;
    double product_trace = 0.0;
};
CliffordInvariants equivalence_invariants(const CliffordSystem& system);

// Necessary-condition comparison of invariant tuples (heuristic: equal
// invariants do not prove equivalence in general, differing ones refute it).
bool invariants_compatible(const CliffordInvariants& a, const CliffordInvariants& b,
                           const Tol& tol = {});

// Detects block-reducibility visible in the given coordinates: true iff the
// union of member supports splits into two or more connected components.
// A sufficient (not necessary) certificate of reducibility.
bool splits_into_coordinate_blocks(const CliffordSystem& system, const Tol& tol = {});

} // namespace qhm
