#include "qhm/core.hpp"

namespace qhm {
namespace {

template <class T>
std::vector<T> evaluate_impl(const std::vector<Mat<T>>& comps, const std::vector<T>& x) {
    if (comps.empty() || comps[0].rows() != static_cast<int>(x.size()))
        throw DimensionError("evaluate: point dimension does not match the map");
    std::vector<T> y(comps.size());
    for (size_t i = 0; i < comps.size(); ++i) y[i] = dot(x, mat_vec(comps[i], x));
    return y;
}

template <class T>
Mat<T> jacobian_impl(const std::vector<Mat<T>>& comps, const std::vector<T>& x) {
    if (comps.empty() || comps[0].rows() != static_cast<int>(x.size()))
        throw DimensionError("jacobian: point dimension does not match the map");
    const int m = comps[0].rows();
    Mat<T> j(static_cast<int>(comps.size()), m);
    for (size_t i = 0; i < comps.size(); ++i) {
        const std::vector<T> row = mat_vec(comps[i], x);
        for (int k = 0; k < m; ++k) j(static_cast<int>(i), k) = T(2) * row[k];
    }
    return j;
}

template <class T>
Mat<T> gram_impl(const std::vector<Mat<T>>& comps, const std::vector<T>& x) {
    if (comps.empty() || comps[0].rows() != static_cast<int>(x.size()))
        throw DimensionError("gram_gradients: point dimension does not match the map");
    const int n = static_cast<int>(comps.size());
    std::vector<std::vector<T>> u(n);
    for (int i = 0; i < n; ++i) u[i] = mat_vec(comps[i], x);
    Mat<T> g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            g(i, j) = T(4) * dot(u[i], u[j]);
            g(j, i) = g(i, j);
        }
    return g;
}

} // namespace

QuadraticMap::QuadraticMap(const std::vector<SymMatrix>& components) {
    if (components.empty())
        throw DimensionError("QuadraticMap: at least one component required");
    m_ = components[0].dim();
    n_ = static_cast<int>(components.size());
    mode_ = components[0].mode();
    for (const SymMatrix& c : components) {
        if (c.dim() != m_)
            throw DimensionError("QuadraticMap: components have differing dimensions");
        if (c.mode() != mode_)
            throw DomainError("QuadraticMap: components mix arithmetic modes");
    }
    if (mode_ == Mode::exact) {
        exact_.reserve(components.size());
        for (const SymMatrix& c : components) exact_.push_back(c.exact_mat());
    } else {
        fp_.reserve(components.size());
        for (const SymMatrix& c : components) fp_.push_back(c.fp_mat());
    }
}

QuadraticMap QuadraticMap::from_exact(std::vector<Mat<Rational>> components) {
    std::vector<SymMatrix> syms;
    syms.reserve(components.size());
    for (Mat<Rational>& c : components) syms.push_back(SymMatrix::exact(std::move(c)));
    return QuadraticMap(syms);
}

QuadraticMap QuadraticMap::from_fp(std::vector<Mat<double>> components, const Tol& tol) {
    std::vector<SymMatrix> syms;
    syms.reserve(components.size());
    for (Mat<double>& c : components) syms.push_back(SymMatrix::floating(std::move(c), tol));
    return QuadraticMap(syms);
}

const std::vector<Mat<Rational>>& QuadraticMap::components_exact() const {
    if (mode_ != Mode::exact)
        throw DomainError("QuadraticMap: exact components requested from a float map");
    return exact_;
}

const std::vector<Mat<double>>& QuadraticMap::components_fp() const {
    if (mode_ != Mode::floating)
        throw DomainError("QuadraticMap: float components requested from an exact map");
    return fp_;
}

SymMatrix QuadraticMap::component(int i) const {
    if (i < 0 || i >= n_) throw DimensionError("QuadraticMap: component index out of range");
    return mode_ == Mode::exact ? SymMatrix::exact(exact_[i])
                                : SymMatrix::floating(fp_[i]);
}

QuadraticMap QuadraticMap::as_fp(const Tol& tol) const {
    if (mode_ == Mode::floating) return *this;
    return from_fp(fp_components(*this), tol);
}

bool QuadraticMap::is_zero_map() const {
    if (mode_ == Mode::exact) {
        for (const auto& a : exact_)
            if (!(a == Mat<Rational>::zero(m_, m_))) return false;
        return true;
    }
    for (const auto& a : fp_)
        if (a.max_abs() != 0.0) return false;
    return true;
}

std::vector<Mat<double>> fp_components(const QuadraticMap& map) {
    std::vector<Mat<double>> out;
    out.reserve(static_cast<size_t>(map.n()));
    if (map.mode() == Mode::exact)
        for (const auto& a : map.components_exact()) out.push_back(as_fp(a));
    else
        out = map.components_fp();
    return out;
}

std::vector<double> evaluate(const QuadraticMap& map, const std::vector<double>& x) {
    return evaluate_impl(fp_components(map), x);
}

std::vector<Rational> evaluate_exact(const QuadraticMap& map, const std::vector<Rational>& x) {
    return evaluate_impl(map.components_exact(), x);
}

Mat<double> jacobian(const QuadraticMap& map, const std::vector<double>& x) {
    return jacobian_impl(fp_components(map), x);
}

Mat<Rational> jacobian_exact(const QuadraticMap& map, const std::vector<Rational>& x) {
    return jacobian_impl(map.components_exact(), x);
}

Mat<double> gram_gradients(const QuadraticMap& map, const std::vector<double>& x) {
    return gram_impl(fp_components(map), x);
}

Mat<Rational> gram_gradients_exact(const QuadraticMap& map, const std::vector<Rational>& x) {
    return gram_impl(map.components_exact(), x);
}

} // namespace qhm
