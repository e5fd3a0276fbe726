#include "qhm/verify.hpp"

#include "qhm/sampling.hpp"

namespace qhm {
namespace {

bool scalar_is_zero(const Rational& v, double, const Tol&) { return v.is_zero(); }
bool scalar_is_zero(double v, double scale, const Tol& tol) { return tol.zero(v, scale); }

bool matrix_is_zero(const Mat<Rational>& a, double, const Tol&) {
    return a == Mat<Rational>::zero(a.rows(), a.cols());
}
bool matrix_is_zero(const Mat<double>& a, double scale, const Tol& tol) {
    return tol.zero(a.max_abs(), scale);
}

template <class T>
HarmonicCheck harmonic_impl(const std::vector<Mat<T>>& comps, const Tol& tol) {
    HarmonicCheck r;
    for (size_t i = 0; i < comps.size(); ++i) {
        const T tr = comps[i].trace();
        const double scale = comps[i].rows() * comps[i].max_abs();
        if (!scalar_is_zero(tr, scale, tol))
            r.violations.push_back({static_cast<int>(i) + 1, std::abs(to_double(tr))});
    }
    r.ok = r.violations.empty();
    return r;
}

template <class T>
HwcCheck hwc_impl(const std::vector<Mat<T>>& comps, const Tol& tol) {
    HwcCheck r;
    const int n = static_cast<int>(comps.size());
    const int m = n > 0 ? comps[0].rows() : 0;
    std::vector<Mat<T>> squares;
    squares.reserve(comps.size());
    for (const auto& a : comps) squares.push_back(a * a);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double scale = m * comps[i].max_abs() * comps[j].max_abs();
            const Mat<T> anti = comps[i] * comps[j] + comps[j] * comps[i];
            if (!matrix_is_zero(anti, scale, tol))
                r.anticommute.push_back({i + 1, j + 1, anti.max_abs()});
            const Mat<T> diff = squares[i] - squares[j];
            const double sq_scale =
                m * std::max(comps[i].max_abs(), comps[j].max_abs()) *
                std::max(comps[i].max_abs(), comps[j].max_abs());
            if (!matrix_is_zero(diff, sq_scale, tol))
                r.squares.push_back({i + 1, j + 1, diff.max_abs()});
        }
    r.ok = r.anticommute.empty() && r.squares.empty();
    return r;
}

} // namespace

HarmonicCheck check_harmonic(const QuadraticMap& map, const Tol& tol) {
    return map.mode() == Mode::exact ? harmonic_impl(map.components_exact(), tol)
                                     : harmonic_impl(map.components_fp(), tol);
}

HwcCheck check_hwc(const QuadraticMap& map, const Tol& tol) {
    return map.mode() == Mode::exact ? hwc_impl(map.components_exact(), tol)
                                     : hwc_impl(map.components_fp(), tol);
}

HMReport check_harmonic_morphism(const QuadraticMap& map, const Tol& tol) {
    HMReport rep;
    HarmonicCheck h = check_harmonic(map, tol);
    HwcCheck c = check_hwc(map, tol);
    rep.is_harmonic = h.ok;
    rep.is_hwc = c.ok;
    rep.is_constant = map.is_zero_map();
    rep.trace_violations = std::move(h.violations);
    rep.anticommute_violations = std::move(c.anticommute);
    rep.square_violations = std::move(c.squares);
    rep.is_harmonic_morphism = rep.is_harmonic && rep.is_hwc && !rep.is_constant;
    return rep;
}

bool conformality_oracle(const QuadraticMap& map, int sample_count,
                         unsigned long long seed, const Tol& tol) {
    if (sample_count < 1)
        throw DomainError("conformality_oracle: sample_count must be at least 1");
    const std::vector<Mat<double>> comps = fp_components(map);
    const int m = map.m(), n = map.n();
    Rng rng(seed);
    for (int s = 0; s < sample_count; ++s) {
        const std::vector<double> x = rng.vector_pm1(m);
        std::vector<std::vector<double>> u(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) u[static_cast<size_t>(i)] = mat_vec(comps[static_cast<size_t>(i)], x);
        Mat<double> g(n, n);
        double lambda2 = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                g(i, j) = 4.0 * dot(u[static_cast<size_t>(i)], u[static_cast<size_t>(j)]);
                g(j, i) = g(i, j);
            }
        for (int i = 0; i < n; ++i) lambda2 += g(i, i);
        lambda2 /= n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double expected = i == j ? lambda2 : 0.0;
                if (std::abs(g(i, j) - expected) > tol.rel * (1.0 + lambda2)) return false;
            }
    }
    return true;
}

double dilation(const QuadraticMap& map, const std::vector<double>& x, const Tol& tol) {
    if (!check_hwc(map, tol).ok)
        throw DomainError("dilation: map is not horizontally weakly conformal");
    const std::vector<double> u = mat_vec(fp_components(map)[0], x);
    return 4.0 * dot(u, u);
}

Rational dilation_exact(const QuadraticMap& map, const std::vector<Rational>& x) {
    if (!check_hwc(map).ok)
        throw DomainError("dilation: map is not horizontally weakly conformal");
    const std::vector<Rational> u = mat_vec(map.components_exact()[0], x);
    return Rational(4) * dot(u, u);
}

} // namespace qhm
