#include "qhm/clifford.hpp"

#include <numeric>

#include "qhm/constructions.hpp"
#include "qhm/verify.hpp"

namespace qhm {
namespace {

template <class T>
void require_clifford_shape(const std::vector<Mat<T>>& members) {
    if (members.empty())
        throw DimensionError("check_clifford: at least one member required");
    const int d = members[0].rows();
    if (d % 2 != 0)
        throw DimensionError("check_clifford: dimension must be even");
    for (const Mat<T>& p : members) {
        if (!p.is_square() || p.rows() != d)
            throw DimensionError("check_clifford: members must be square of one dimension");
    }
}

// Hurwitz-Radon family: kk pairwise anticommuting skew matrices J on R^d
// with J^2 = -I, d as small as the classical bound allows (d = delta(kk+1)).
// Built from complex/quaternion/octonion left multiplications; sizes beyond
// eight members come from the dimension-16 periodicity step.
std::pair<int, std::vector<Mat<Rational>>> hr_family(int kk) {
    if (kk == 0) return {1, {}};
    if (kk == 1) {
        Mat<Rational> j(2, 2);
        j(0, 1) = Rational(-1);
        j(1, 0) = Rational(1);
        return {2, {j}};
    }
    if (kk <= 3) {
        const OrthogonalMultiplication q = orth_mult(4);
        std::vector<Mat<Rational>> js;
        for (int i = 1; i <= kk; ++i) js.push_back(q.left_mult(i));
        return {4, std::move(js)};
    }
    if (kk <= 7) {
        const OrthogonalMultiplication o = orth_mult(8);
        std::vector<Mat<Rational>> js;
        for (int i = 1; i <= kk; ++i) js.push_back(o.left_mult(i));
        return {8, std::move(js)};
    }
    // kk >= 8: eight anticommuting skew square-roots of -I on R^16
    // (g_i = [[0, L_i], [L_i, 0]] for the octonion imaginary units, plus
    // g_8 = [[0, -I], [I, 0]]), extended by kron with a smaller family
    // through N = diag(I, -I), which anticommutes with every g_i.
    auto [d, js] = hr_family(kk - 8);
    const OrthogonalMultiplication o = orth_mult(8);
    const Mat<Rational> i8 = Mat<Rational>::identity(8);
    std::vector<Mat<Rational>> g;
    for (int i = 1; i <= 7; ++i) {
        const Mat<Rational> l = o.left_mult(i);
        Mat<Rational> m(16, 16);
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                m(a, 8 + b) = l(a, b);
                m(8 + a, b) = l(a, b);
            }
        g.push_back(std::move(m));
    }
    {
        Mat<Rational> m(16, 16);
        for (int a = 0; a < 8; ++a) {
            m(a, 8 + a) = Rational(-1);
            m(8 + a, a) = Rational(1);
        }
        g.push_back(std::move(m));
    }
    Mat<Rational> n16(16, 16);
    for (int a = 0; a < 8; ++a) {
        n16(a, a) = Rational(1);
        n16(8 + a, 8 + a) = Rational(-1);
    }
    const Mat<Rational> id = Mat<Rational>::identity(d);
    std::vector<Mat<Rational>> out;
    for (const Mat<Rational>& gi : g) out.push_back(kron(gi, id));
    for (const Mat<Rational>& ji : js) out.push_back(kron(n16, ji));
    return {16 * d, std::move(out)};
}

} // namespace

bool check_clifford(const std::vector<Mat<Rational>>& members) {
    require_clifford_shape(members);
    for (const Mat<Rational>& p : members)
        if (!is_symmetric_exact(p))
            throw DomainError("check_clifford: members must be symmetric");
    const int d = members[0].rows();
    const Mat<Rational> two_id = Rational(2) * Mat<Rational>::identity(d);
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i; j < members.size(); ++j) {
            const Mat<Rational> s = members[i] * members[j] + members[j] * members[i];
            if (i == j) {
                if (!(s == two_id)) return false;
            } else if (!(s == Mat<Rational>::zero(d, d))) {
                return false;
            }
        }
    return true;
}

bool check_clifford(const std::vector<Mat<double>>& members, const Tol& tol) {
    require_clifford_shape(members);
    const int d = members[0].rows();
    for (const Mat<double>& p : members) {
        const double scale = p.max_abs();
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (!tol.zero(p(i, j) - p(j, i), scale))
                    throw DomainError("check_clifford: members must be symmetric");
    }
    const Mat<double> two_id = 2.0 * Mat<double>::identity(d);
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i; j < members.size(); ++j) {
            const double scale =
                std::max(1.0, d * members[i].max_abs() * members[j].max_abs());
            const Mat<double> s = members[i] * members[j] + members[j] * members[i];
            const double dev = i == j ? max_abs_diff(s, two_id) : s.max_abs();
            if (!tol.zero(dev, scale)) return false;
        }
    return true;
}

CliffordSystem::CliffordSystem(const std::vector<SymMatrix>& members, const Tol& tol) {
    if (members.empty())
        throw DimensionError("CliffordSystem: at least one member required");
    dim_ = members[0].dim();
    mode_ = members[0].mode();
    n_members_ = members.size();
    for (const SymMatrix& p : members) {
        if (p.dim() != dim_)
            throw DimensionError("CliffordSystem: members have differing dimensions");
        if (p.mode() != mode_)
            throw DomainError("CliffordSystem: members mix arithmetic modes");
    }
    if (mode_ == Mode::exact) {
        for (const SymMatrix& p : members) exact_.push_back(p.exact_mat());
        if (!check_clifford(exact_))
            throw DomainError("CliffordSystem: members violate the Clifford relations");
    } else {
        for (const SymMatrix& p : members) fp_.push_back(p.fp_mat());
        if (!check_clifford(fp_, tol))
            throw DomainError("CliffordSystem: members violate the Clifford relations");
    }
}

CliffordSystem CliffordSystem::from_exact(std::vector<Mat<Rational>> members) {
    std::vector<SymMatrix> syms;
    syms.reserve(members.size());
    for (Mat<Rational>& p : members) syms.push_back(SymMatrix::exact(std::move(p)));
    return CliffordSystem(syms);
}

CliffordSystem CliffordSystem::from_fp(std::vector<Mat<double>> members, const Tol& tol) {
    std::vector<SymMatrix> syms;
    syms.reserve(members.size());
    for (Mat<double>& p : members) syms.push_back(SymMatrix::floating(std::move(p), tol));
    return CliffordSystem(syms, tol);
}

const std::vector<Mat<Rational>>& CliffordSystem::members_exact() const {
    if (mode_ != Mode::exact)
        throw DomainError("CliffordSystem: exact members requested from a float system");
    return exact_;
}

const std::vector<Mat<double>>& CliffordSystem::members_fp() const {
    if (mode_ != Mode::floating)
        throw DomainError("CliffordSystem: float members requested from an exact system");
    return fp_;
}

std::vector<Mat<double>> CliffordSystem::members_as_fp() const {
    std::vector<Mat<double>> out;
    out.reserve(n_members_);
    if (mode_ == Mode::exact)
        for (const auto& p : exact_) out.push_back(as_fp(p));
    else
        out = fp_;
    return out;
}

CliffordSystem direct_sum(const CliffordSystem& a, const CliffordSystem& b) {
    if (a.count() != b.count())
        throw DimensionError("direct_sum: systems have differing member counts");
    if (a.mode() != b.mode())
        throw DomainError("direct_sum: systems mix arithmetic modes");
    if (a.mode() == Mode::exact) {
        std::vector<Mat<Rational>> members;
        for (int i = 0; i < a.count(); ++i)
            members.push_back(block_diag(a.members_exact()[static_cast<size_t>(i)],
                                         b.members_exact()[static_cast<size_t>(i)]));
        return CliffordSystem::from_exact(std::move(members));
    }
    std::vector<Mat<double>> members;
    for (int i = 0; i < a.count(); ++i)
        members.push_back(block_diag(a.members_fp()[static_cast<size_t>(i)],
                                     b.members_fp()[static_cast<size_t>(i)]));
    return CliffordSystem::from_fp(std::move(members));
}

int delta(int n) {
    if (n < 1) throw DomainError("delta: defined for n >= 1");
    static const int small[8] = {1, 2, 4, 4, 8, 8, 8, 8};
    int factor = 1;
    while (n > 8) {
        factor *= 16;
        n -= 8;
    }
    return factor * small[n - 1];
}

CliffordSystem irreducible(int n) {
    if (n < 1) throw DomainError("irreducible: defined for n >= 1");
    auto [d, js] = hr_family(n - 1);
    const int m = 2 * d;
    std::vector<Mat<Rational>> members;
    members.reserve(static_cast<size_t>(n) + 1);
    Mat<Rational> p0(m, m);
    for (int i = 0; i < d; ++i) {
        p0(i, i) = Rational(1);
        p0(d + i, d + i) = Rational(-1);
    }
    members.push_back(std::move(p0));
    Mat<Rational> p1(m, m);
    for (int i = 0; i < d; ++i) {
        p1(i, d + i) = Rational(1);
        p1(d + i, i) = Rational(1);
    }
    members.push_back(std::move(p1));
    for (const Mat<Rational>& j : js) {
        Mat<Rational> p(m, m);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                p(a, d + b) = j(a, b);
                p(d + a, b) = -j(a, b); // (J^T)_{ab} = -J_{ab}, J is skew
            }
        members.push_back(std::move(p));
    }
    if (m != 2 * delta(n))
        throw InternalError("irreducible: assembled dimension differs from 2 delta(n)");
    return CliffordSystem::from_exact(std::move(members));
}

QuadraticMap qhm_from_clifford(const CliffordSystem& system) {
    if (system.count() < 2)
        throw DomainError("qhm_from_clifford: at least two members required "
                          "(a single member has nonzero trace)");
    if (system.mode() == Mode::exact)
        return QuadraticMap::from_exact(system.members_exact());
    return QuadraticMap::from_fp(system.members_fp());
}

UmbilicalClifford clifford_from_umbilical(const QuadraticMap& map, const Tol& tol) {
    const auto [umb, positives] = is_umbilical(map, tol); // also rejects non-morphisms
    if (!umb)
        throw DomainError("clifford_from_umbilical: map is not umbilical");
    NormalForm nf = normal_form(map, tol);
    if (nf.r() != 0)
        throw DomainError("clifford_from_umbilical: map is not Q-nonsingular");
    if (map.n() < 2)
        throw DomainError("clifford_from_umbilical: codomain dimension must be at least 2");

    if (nf.mode() == Mode::exact) {
        const NormalFormT<Rational>& e = nf.exact();
        const Rational lambda = e.D[0];
        const int k = e.k;
        std::vector<Mat<Rational>> members;
        Mat<Rational> s1(2 * k, 2 * k);
        for (int i = 0; i < k; ++i) {
            s1(i, i) = Rational(1);
            s1(k + i, k + i) = Rational(-1);
        }
        members.push_back(std::move(s1));
        for (const Mat<Rational>& b : e.blocks) {
            Mat<Rational> s(2 * k, 2 * k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    const Rational v = b(i, j) / lambda;
                    s(i, k + j) = v;
                    s(k + j, i) = v;
                }
            members.push_back(std::move(s));
        }
        UmbilicalClifford out{CliffordSystem::from_exact(std::move(members)), std::move(nf),
                              lambda.to_double(), lambda};
        return out;
    }

    const NormalFormT<double>& f = nf.fp();
    const double lambda = f.D[0];
    const int k = f.k;
    std::vector<Mat<double>> members;
    Mat<double> s1(2 * k, 2 * k);
    for (int i = 0; i < k; ++i) {
        s1(i, i) = 1.0;
        s1(k + i, k + i) = -1.0;
    }
    members.push_back(std::move(s1));
    for (const Mat<double>& b : f.blocks) {
        Mat<double> s(2 * k, 2 * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                const double v = b(i, j) / lambda;
                s(i, k + j) = v;
                s(k + j, i) = v;
            }
        members.push_back(std::move(s));
    }
    return {CliffordSystem::from_fp(std::move(members), tol), std::move(nf), lambda,
            std::nullopt};
}

bool equivalence_witness_check(const CliffordSystem& p, const CliffordSystem& q,
                               const Mat<double>& a, const Tol& tol) {
    if (p.count() != q.count())
        throw DimensionError("equivalence_witness_check: member counts differ");
    if (p.dim() != q.dim())
        throw DimensionError("equivalence_witness_check: dimensions differ");
    if (a.rows() != p.dim() || a.cols() != p.dim())
        throw DimensionError("equivalence_witness_check: witness size mismatch");
    const Mat<double> at = a.transpose();
    if (max_abs_diff(a * at, Mat<double>::identity(a.rows())) >
        std::max(tol.abs_floor, tol.rel * std::max(1.0, a.max_abs() * a.max_abs() * a.rows())))
        return false;
    const std::vector<Mat<double>> pm = p.members_as_fp();
    const std::vector<Mat<double>> qm = q.members_as_fp();
    for (size_t i = 0; i < pm.size(); ++i) {
        const double scale = std::max(1.0, pm[i].max_abs() * a.rows());
        if (!tol.zero(max_abs_diff(a * pm[i] * at, qm[i]), scale)) return false;
    }
    return true;
}

CliffordInvariants equivalence_invariants(const CliffordSystem& system) {
    const int n = system.count() - 1;
    if (n < 1)
        throw DomainError("equivalence_invariants: need at least two members");
    CliffordInvariants inv;
    inv.dim = system.dim();
    inv.count = system.count();
    const int unit = 2 * delta(n);
    if (inv.dim % unit != 0)
        throw DomainError("equivalence_invariants: dimension is not a multiple of 2 delta(n)");
    inv.multiplicity = inv.dim / unit;
    if (system.mode() == Mode::exact) {
        Mat<Rational> prod = Mat<Rational>::identity(system.dim());
        for (const Mat<Rational>& m : system.members_exact()) prod = prod * m;
        inv.product_trace = prod.trace().to_double();
    } else {
        Mat<double> prod = Mat<double>::identity(system.dim());
        for (const Mat<double>& m : system.members_fp()) prod = prod * m;
        inv.product_trace = prod.trace();
    }
    return inv;
}

bool invariants_compatible(const CliffordInvariants& a, const CliffordInvariants& b,
                           const Tol& tol) {
    if (a.dim != b.dim || a.count != b.count || a.multiplicity != b.multiplicity)
        return false;
    const int n = a.count - 1;
    if (n % 4 == 0) {
        const double scale = std::max(1.0, static_cast<double>(a.dim));
        if (!tol.zero(a.product_trace - b.product_trace, scale)) return false;
    }
    return true;
}

bool splits_into_coordinate_blocks(const CliffordSystem& system, const Tol& tol) {
    const int d = system.dim();
    std::vector<int> parent(static_cast<size_t>(d));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int x, int y) { parent[static_cast<size_t>(find(x))] = find(y); };
    for (const Mat<double>& p : system.members_as_fp()) {
        const double scale = p.max_abs();
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (!tol.zero(p(i, j), scale)) unite(i, j);
    }
    for (int i = 1; i < d; ++i)
        if (find(i) != find(0)) return true;
    return false;
}

} // namespace qhm
