#include "qhm/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "qhm/verify.hpp"

namespace qhm {
namespace {

// Entries of P^T A_i P outside the canonical block pattern must vanish; for
// float data they are allowed this much, relative to the component scale.
// Well above eigensolver noise, well below any honest violation.
constexpr double kStructRel = 1e-6;

double frobenius(const Mat<double>& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

double off_diag_frobenius(const Mat<double>& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

bool is_diagonal_exact(const Mat<Rational>& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j && !a(i, j).is_zero()) return false;
    return true;
}

// Indices of eigenvalues sorted for the normal form: positives by value
// descending, negatives by magnitude descending, zeros last; ties keep the
// original position order so results are reproducible.
template <class T, class Classify>
void order_indices(const std::vector<T>& values, Classify cls,
                   std::vector<int>& pos, std::vector<int>& neg, std::vector<int>& zero) {
    for (int i = 0; i < static_cast<int>(values.size()); ++i) {
        const int c = cls(values[static_cast<size_t>(i)]);
        (c > 0 ? pos : c < 0 ? neg : zero).push_back(i);
    }
    std::stable_sort(pos.begin(), pos.end(), [&](int a, int b) {
        return values[static_cast<size_t>(b)] < values[static_cast<size_t>(a)];
    });
    std::stable_sort(neg.begin(), neg.end(), [&](int a, int b) {
        return values[static_cast<size_t>(a)] < values[static_cast<size_t>(b)];
    });
}

template <class T>
void check_normal_form_shape(const NormalFormT<T>& nf) {
    if (nf.k < 0 || nf.r < 0) throw DimensionError("normal form: negative dimensions");
    if (static_cast<int>(nf.D.size()) != nf.k)
        throw DimensionError("normal form: D length differs from k");
    for (int i = 0; i < nf.k; ++i) {
        if (!(T(0) < nf.D[static_cast<size_t>(i)]))
            throw DomainError("normal form: D entries must be positive");
        if (i > 0 && nf.D[static_cast<size_t>(i - 1)] < nf.D[static_cast<size_t>(i)])
            throw DomainError("normal form: D must be descending");
    }
    for (const Mat<T>& b : nf.blocks)
        if (b.rows() != nf.k || b.cols() != nf.k)
            throw DimensionError("normal form: block size differs from k");
    const int m = 2 * nf.k + nf.r;
    if (nf.P.rows() != m || nf.P.cols() != m)
        throw DimensionError("normal form: P size differs from 2k + r");
}

template <class T>
std::vector<Mat<T>> canonical_components(const std::vector<T>& d, const std::vector<Mat<T>>& blocks,
                                         int r) {
    const int k = static_cast<int>(d.size());
    const int m = 2 * k + r;
    std::vector<Mat<T>> comps;
    comps.reserve(blocks.size() + 1);
    Mat<T> c1(m, m);
    for (int i = 0; i < k; ++i) {
        c1(i, i) = d[static_cast<size_t>(i)];
        c1(k + i, k + i) = -d[static_cast<size_t>(i)];
    }
    comps.push_back(std::move(c1));
    for (const Mat<T>& b : blocks) {
        Mat<T> c(m, m);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                c(i, k + j) = b(i, j);
                c(k + j, i) = b(i, j);
            }
        comps.push_back(std::move(c));
    }
    return comps;
}

// Verifies the block relations D B_i = B_i D, B_i^T B_i = D^2 and
// B_i^T B_j = -B_j^T B_i. Exact data must satisfy them exactly.
template <class T>
bool blocks_satisfy_relations(const std::vector<T>& d, const std::vector<Mat<T>>& blocks,
                              double leak_tol) {
    const int k = static_cast<int>(d.size());
    Mat<T> dm(k, k), d2(k, k);
    for (int i = 0; i < k; ++i) {
        dm(i, i) = d[static_cast<size_t>(i)];
        d2(i, i) = d[static_cast<size_t>(i)] * d[static_cast<size_t>(i)];
    }
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (max_abs_diff(dm * blocks[i], blocks[i] * dm) > leak_tol) return false;
        if (max_abs_diff(blocks[i].transpose() * blocks[i], d2) > leak_tol) return false;
        for (size_t j = i + 1; j < blocks.size(); ++j) {
            const Mat<T> s = blocks[i].transpose() * blocks[j] + blocks[j].transpose() * blocks[i];
            if (s.max_abs() > leak_tol) return false;
        }
    }
    return true;
}

// Extracts B from the conjugated component and checks that everything
// outside the two off-diagonal k x k blocks vanishes (to leak_tol).
template <class T>
Mat<T> extract_block(const Mat<T>& conjugated, int k, int r, double leak_tol) {
    const int m = 2 * k + r;
    double leak = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const bool upper = i < k && j >= k && j < 2 * k;
            const bool lower = j < k && i >= k && i < 2 * k;
            if (!upper && !lower) leak = std::max(leak, std::abs(to_double(conjugated(i, j))));
        }
    if (leak > leak_tol)
        throw DomainError("normal_form: component deviates from the block pattern; "
                          "input is not a harmonic morphism to working precision");
    Mat<T> b(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) b(i, j) = conjugated(i, k + j);
    return b;
}

NormalFormT<Rational> normal_form_exact_diag(const std::vector<Mat<Rational>>& comps) {
    const Mat<Rational>& a1 = comps[0];
    const int m = a1.rows();
    std::vector<Rational> diag(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) diag[static_cast<size_t>(i)] = a1(i, i);

    std::vector<int> pos, neg, zero;
    order_indices(diag, [](const Rational& v) { return v.sign(); }, pos, neg, zero);
    if (pos.size() != neg.size())
        throw InternalError("normal_form: eigenvalue pairing failed on exact input");
    const int k = static_cast<int>(pos.size());
    const int r = static_cast<int>(zero.size());

    NormalFormT<Rational> nf;
    nf.k = k;
    nf.r = r;
    nf.D.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        const Rational& p = diag[static_cast<size_t>(pos[static_cast<size_t>(i)])];
        const Rational& q = diag[static_cast<size_t>(neg[static_cast<size_t>(i)])];
        if (!(p == -q))
            throw InternalError("normal_form: positive and negative spectra do not mirror");
        nf.D.push_back(p);
    }

    std::vector<int> order;
    order.insert(order.end(), pos.begin(), pos.end());
    order.insert(order.end(), neg.begin(), neg.end());
    order.insert(order.end(), zero.begin(), zero.end());
    Mat<Rational> p(m, m);
    for (int j = 0; j < m; ++j) p(order[static_cast<size_t>(j)], j) = Rational(1);
    nf.P = p;

    const Mat<Rational> pt = p.transpose();
    for (size_t i = 1; i < comps.size(); ++i)
        nf.blocks.push_back(extract_block(pt * comps[i] * p, k, r, 0.0));
    if (!blocks_satisfy_relations(nf.D, nf.blocks, 0.0))
        throw InternalError("normal_form: block relations failed on exact input");
    return nf;
}

NormalFormT<double> normal_form_fp(const std::vector<Mat<double>>& comps, const Tol& tol) {
    const Mat<double>& a1 = comps[0];
    const EigenDecomposition eig = eigen_symmetric(a1);
    double max_abs_ev = 0.0;
    for (double v : eig.values) max_abs_ev = std::max(max_abs_ev, std::abs(v));
    const double zero_thr = tol.rank_rel * max_abs_ev;

    std::vector<int> pos, neg, zero;
    order_indices(eig.values,
                  [&](double v) { return v > zero_thr ? 1 : v < -zero_thr ? -1 : 0; },
                  pos, neg, zero);
    if (pos.size() != neg.size())
        throw DomainError("normal_form: positive and negative eigenvalue counts differ; "
                          "input is not a harmonic morphism to working precision");
    const int k = static_cast<int>(pos.size());
    const int r = static_cast<int>(zero.size());
    const int m = a1.rows();

    NormalFormT<double> nf;
    nf.k = k;
    nf.r = r;
    for (int i = 0; i < k; ++i) {
        const double p = eig.values[static_cast<size_t>(pos[static_cast<size_t>(i)])];
        const double q = eig.values[static_cast<size_t>(neg[static_cast<size_t>(i)])];
        if (std::abs(p + q) > kStructRel * std::max(1.0, max_abs_ev))
            throw DomainError("normal_form: positive and negative spectra do not mirror; "
                              "input is not a harmonic morphism to working precision");
        nf.D.push_back(0.5 * (p - q));
    }

    std::vector<int> order;
    order.insert(order.end(), pos.begin(), pos.end());
    order.insert(order.end(), neg.begin(), neg.end());
    order.insert(order.end(), zero.begin(), zero.end());
    Mat<double> p(m, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) p(i, j) = eig.vectors(i, order[static_cast<size_t>(j)]);
    nf.P = p;

    const Mat<double> pt = p.transpose();
    for (size_t i = 1; i < comps.size(); ++i) {
        const double leak_tol = kStructRel * std::max(1.0, comps[i].max_abs());
        nf.blocks.push_back(extract_block(pt * comps[i] * p, k, r, leak_tol));
    }
    const double leak_tol = kStructRel * std::max(1.0, max_abs_ev * max_abs_ev);
    if (!blocks_satisfy_relations(nf.D, nf.blocks, leak_tol))
        throw DomainError("normal_form: block relations fail; "
                          "input is not a harmonic morphism to working precision");
    return nf;
}

// Positive eigenvalues of A_1, descending, for reporting.
std::vector<double> positive_spectrum(const QuadraticMap& map, const Tol& tol) {
    std::vector<double> values;
    if (map.mode() == Mode::exact && is_diagonal_exact(map.components_exact()[0])) {
        const Mat<Rational>& a1 = map.components_exact()[0];
        for (int i = 0; i < a1.rows(); ++i)
            if (a1(i, i).sign() > 0) values.push_back(a1(i, i).to_double());
    } else {
        const Mat<double> a1 = fp_components(map)[0];
        const EigenDecomposition eig = eigen_symmetric(a1);
        double max_abs_ev = 0.0;
        for (double v : eig.values) max_abs_ev = std::max(max_abs_ev, std::abs(v));
        for (double v : eig.values)
            if (v > tol.rank_rel * max_abs_ev) values.push_back(v);
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

void require_morphism(const QuadraticMap& map, const Tol& tol, const char* who) {
    if (!check_harmonic_morphism(map, tol).is_harmonic_morphism)
        throw DomainError(std::string(who) + ": input is not a harmonic morphism");
}

} // namespace

EigenDecomposition eigen_symmetric(const Mat<double>& a, double conv_rel, int max_sweeps) {
    if (!a.is_square()) throw DimensionError("eigen_symmetric: matrix not square");
    const int n = a.rows();
    Mat<double> w = a;
    Mat<double> v = Mat<double>::identity(n);
    const double norm = frobenius(a);
    if (norm == 0.0) {
        return {std::vector<double>(static_cast<size_t>(n), 0.0), v};
    }
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diag_frobenius(w) < conv_rel * norm) {
            std::vector<double> values(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) values[static_cast<size_t>(i)] = w(i, i);
            return {std::move(values), std::move(v)};
        }
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = w(p, q);
                if (apq == 0.0) continue;
                const double tau = (w(q, q) - w(p, p)) / (2.0 * apq);
                const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                            : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double app = w(p, p), aqq = w(q, q);
                w(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                w(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                w(p, q) = 0.0;
                w(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = w(r, p), arq = w(r, q);
                    w(r, p) = c * arp - s * arq;
                    w(p, r) = w(r, p);
                    w(r, q) = s * arp + c * arq;
                    w(q, r) = w(r, q);
                }
                for (int r = 0; r < n; ++r) {
                    const double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = c * vrp - s * vrq;
                    v(r, q) = s * vrp + c * vrq;
                }
            }
    }
    throw EigenError("eigen_symmetric: Jacobi iteration did not converge");
}

std::vector<Rational> char_poly(const Mat<Rational>& a) {
    if (!a.is_square()) throw DimensionError("char_poly: matrix not square");
    const int m = a.rows();
    std::vector<Rational> coeffs(static_cast<size_t>(m) + 1);
    coeffs[static_cast<size_t>(m)] = Rational(1);
    Mat<Rational> work = Mat<Rational>::identity(m);
    for (int kk = 1; kk <= m; ++kk) {
        work = a * work;
        const Rational ck = work.trace() / Rational(kk);
        coeffs[static_cast<size_t>(m - kk)] = -ck;
        for (int i = 0; i < m; ++i) work(i, i) -= ck;
    }
    return coeffs;
}

int rank_from_char_poly(const std::vector<Rational>& c) {
    const int m = static_cast<int>(c.size()) - 1;
    int zero_mult = 0;
    while (zero_mult < m && c[static_cast<size_t>(zero_mult)].is_zero()) ++zero_mult;
    return m - zero_mult;
}

bool plus_minus_paired_from_char_poly(const std::vector<Rational>& c) {
    const int m = static_cast<int>(c.size()) - 1;
    int zero_mult = 0;
    while (zero_mult < m && c[static_cast<size_t>(zero_mult)].is_zero()) ++zero_mult;
    const int dq = m - zero_mult;
    if (dq % 2 != 0) return false;
    for (int i = 1; i < dq; i += 2)
        if (!c[static_cast<size_t>(zero_mult + i)].is_zero()) return false;
    return true;
}

std::optional<Rational> umbilical_mu_from_char_poly(const std::vector<Rational>& c) {
    const int m = static_cast<int>(c.size()) - 1;
    int zero_mult = 0;
    while (zero_mult < m && c[static_cast<size_t>(zero_mult)].is_zero()) ++zero_mult;
    const int dq = m - zero_mult;
    if (dq == 0 || dq % 2 != 0) return std::nullopt;
    if (!plus_minus_paired_from_char_poly(c)) return std::nullopt;
    const int kk = dq / 2;
    // w(y) = sum_j c[zero_mult + 2j] y^j must equal (y - mu)^kk.
    const Rational mu = -c[static_cast<size_t>(zero_mult + 2 * (kk - 1))] / Rational(kk);
    if (!(mu > Rational(0))) return std::nullopt;
    Rational binom(1), power(1); // C(kk, j) and (-mu)^(kk - j), built incrementally
    for (int j = kk; j >= 0; --j) {
        const Rational expected = binom * power;
        if (!(c[static_cast<size_t>(zero_mult + 2 * j)] == expected)) return std::nullopt;
        if (j > 0) {
            binom = binom * Rational(j) / Rational(kk - j + 1);
            power *= -mu;
        }
    }
    return mu;
}

int q_rank(const QuadraticMap& map, const Tol& tol) {
    require_morphism(map, tol, "q_rank");
    if (map.mode() == Mode::exact)
        return rank_from_char_poly(char_poly(map.components_exact()[0]));
    const EigenDecomposition eig = eigen_symmetric(map.components_fp()[0]);
    double max_abs_ev = 0.0;
    for (double v : eig.values) max_abs_ev = std::max(max_abs_ev, std::abs(v));
    int rank = 0;
    for (double v : eig.values)
        if (std::abs(v) > tol.rank_rel * max_abs_ev) ++rank;
    return rank;
}

SpectrumReport spectrum_report(const QuadraticMap& map, const Tol& tol) {
    SpectrumReport rep;
    const int n = map.n();
    rep.spectra.resize(static_cast<size_t>(n));

    std::vector<std::vector<double>> fp_spectra(static_cast<size_t>(n));
    double overall = 0.0;
    for (int i = 0; i < n; ++i) {
        const SymMatrix comp = map.component(i);
        if (map.mode() == Mode::exact && is_diagonal_exact(comp.exact_mat())) {
            const Mat<Rational>& a = comp.exact_mat();
            for (int d = 0; d < a.rows(); ++d)
                fp_spectra[static_cast<size_t>(i)].push_back(a(d, d).to_double());
        } else {
            fp_spectra[static_cast<size_t>(i)] = eigen_symmetric(comp.as_fp_mat()).values;
        }
        for (double v : fp_spectra[static_cast<size_t>(i)]) overall = std::max(overall, std::abs(v));
        std::sort(fp_spectra[static_cast<size_t>(i)].begin(), fp_spectra[static_cast<size_t>(i)].end(),
                  std::greater<>());
        rep.spectra[static_cast<size_t>(i)] = fp_spectra[static_cast<size_t>(i)];
    }

    if (map.mode() == Mode::exact) {
        std::vector<std::vector<Rational>> polys;
        polys.reserve(static_cast<size_t>(n));
        for (const auto& a : map.components_exact()) polys.push_back(char_poly(a));
        rep.common_rank = rank_from_char_poly(polys[0]);
        rep.rank_is_even = rep.common_rank % 2 == 0;
        rep.spectra_equal = true;
        rep.plus_minus_paired = true;
        for (int i = 0; i < n; ++i) {
            if (!(polys[static_cast<size_t>(i)] == polys[0])) rep.spectra_equal = false;
            if (!plus_minus_paired_from_char_poly(polys[static_cast<size_t>(i)]))
                rep.plus_minus_paired = false;
        }
        return rep;
    }

    const double zero_thr = tol.rank_rel * overall;
    auto rank_of = [&](const std::vector<double>& sp) {
        int r = 0;
        for (double v : sp)
            if (std::abs(v) > zero_thr) ++r;
        return r;
    };
    rep.common_rank = rank_of(fp_spectra[0]);
    rep.rank_is_even = rep.common_rank % 2 == 0;
    rep.spectra_equal = true;
    rep.plus_minus_paired = true;
    for (int i = 0; i < n; ++i) {
        const auto& sp = fp_spectra[static_cast<size_t>(i)];
        for (size_t d = 0; d < sp.size(); ++d)
            if (!tol.zero(sp[d] - fp_spectra[0][d], std::max(1.0, overall)))
                rep.spectra_equal = false;
        std::vector<double> pos, neg;
        for (double v : sp) {
            if (v > zero_thr) pos.push_back(v);
            else if (v < -zero_thr) neg.push_back(-v);
        }
        std::sort(pos.begin(), pos.end(), std::greater<>());
        std::sort(neg.begin(), neg.end(), std::greater<>());
        if (pos.size() != neg.size()) {
            rep.plus_minus_paired = false;
        } else {
            for (size_t d = 0; d < pos.size(); ++d)
                if (!tol.zero(pos[d] - neg[d], std::max(1.0, overall)))
                    rep.plus_minus_paired = false;
        }
    }
    return rep;
}

NormalFormT<double> NormalForm::as_fp() const {
    if (mode() == Mode::floating) return fp();
    const NormalFormT<Rational>& e = exact();
    NormalFormT<double> out;
    out.k = e.k;
    out.r = e.r;
    out.P = qhm::as_fp(e.P);
    for (const Rational& d : e.D) out.D.push_back(d.to_double());
    for (const Mat<Rational>& b : e.blocks) out.blocks.push_back(qhm::as_fp(b));
    return out;
}

NormalForm normal_form(const QuadraticMap& map, const Tol& tol) {
    require_morphism(map, tol, "normal_form");
    if (map.mode() == Mode::exact && is_diagonal_exact(map.components_exact()[0]))
        return NormalForm(normal_form_exact_diag(map.components_exact()));
    return NormalForm(normal_form_fp(fp_components(map), tol));
}

QuadraticMap reconstruct(const NormalForm& nf, int n) {
    if (n >= 0 && n != nf.block_count() + 1)
        throw DimensionError("reconstruct: codomain dimension differs from block count + 1");
    if (nf.mode() == Mode::exact) {
        const NormalFormT<Rational>& e = nf.exact();
        check_normal_form_shape(e);
        std::vector<Mat<Rational>> comps = canonical_components(e.D, e.blocks, e.r);
        const Mat<Rational> pt = e.P.transpose();
        for (Mat<Rational>& c : comps) c = e.P * c * pt;
        return QuadraticMap::from_exact(std::move(comps));
    }
    const NormalFormT<double>& f = nf.fp();
    check_normal_form_shape(f);
    std::vector<Mat<double>> comps = canonical_components(f.D, f.blocks, f.r);
    const Mat<double> pt = f.P.transpose();
    for (Mat<double>& c : comps) c = f.P * c * pt;
    return QuadraticMap::from_fp(std::move(comps));
}

SingularSplit split_singular(const QuadraticMap& map, const Tol& tol) {
    const NormalForm nf = normal_form(map, tol);
    if (nf.mode() == Mode::exact) {
        const NormalFormT<Rational>& e = nf.exact();
        Mat<Rational> proj(2 * e.k, 2 * e.k + e.r);
        for (int i = 0; i < 2 * e.k; ++i)
            for (int j = 0; j < 2 * e.k + e.r; ++j) proj(i, j) = e.P(j, i);
        QuadraticMap core = QuadraticMap::from_exact(canonical_components(e.D, e.blocks, 0));
        return {qhm::as_fp(proj), proj, std::move(core)};
    }
    const NormalFormT<double>& f = nf.fp();
    Mat<double> proj(2 * f.k, 2 * f.k + f.r);
    for (int i = 0; i < 2 * f.k; ++i)
        for (int j = 0; j < 2 * f.k + f.r; ++j) proj(i, j) = f.P(j, i);
    QuadraticMap core = QuadraticMap::from_fp(canonical_components(f.D, f.blocks, 0));
    return {std::move(proj), std::nullopt, std::move(core)};
}

std::pair<bool, std::vector<double>> is_umbilical(const QuadraticMap& map, const Tol& tol) {
    require_morphism(map, tol, "is_umbilical");
    std::vector<double> pos = positive_spectrum(map, tol);
    bool flag;
    if (map.mode() == Mode::exact) {
        flag = umbilical_mu_from_char_poly(char_poly(map.components_exact()[0])).has_value();
    } else {
        flag = !pos.empty() &&
               pos.front() - pos.back() <= std::max(tol.abs_floor, tol.rel * pos.front());
    }
    return {flag, std::move(pos)};
}

} // namespace qhm
