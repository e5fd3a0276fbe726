#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qhm/matrix.hpp"

namespace qhm {

// Arithmetic mode of a map or matrix: exact rationals or IEEE doubles.
// A container never mixes modes.
enum class Mode { exact, floating };

inline const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

// Float comparison policy. A quantity counts as zero when
// |value| <= max(abs_floor, rel * scale), where scale is a magnitude
// natural to the check (product of operand norms, etc.).
struct Tol {
    double rel = 1e-9;
    double abs_floor = 1e-12;
    // Eigenvalues below rank_rel * max|eigenvalue| count as zero for rank purposes.
    double rank_rel = 1e-8;

    bool zero(double value, double scale) const {
        return std::abs(value) <= std::max(abs_floor, rel * scale);
    }
};

// Symmetric square matrix in one arithmetic mode. Exact input must be
// exactly symmetric; float input may deviate by eps_sym = 1e-9 * max|entry|
// and is replaced by (A + A^T)/2.
class SymMatrix {
public:
    static SymMatrix exact(Mat<Rational> a) {
        require_square(a.rows(), a.cols());
        if (!is_symmetric_exact(a))
            throw DomainError("SymMatrix: exact matrix is not symmetric");
        SymMatrix s;
        s.mode_ = Mode::exact;
        s.a_ = std::move(a);
        return s;
    }

    static SymMatrix floating(Mat<double> a, const Tol& tol = {}) {
        require_square(a.rows(), a.cols());
        const double scale = a.max_abs();
        if (!std::isfinite(scale))
            throw DomainError("SymMatrix: non-finite entry");
        for (int i = 0; i < a.rows(); ++i)
            for (int j = i + 1; j < a.cols(); ++j)
                if (!tol.zero(a(i, j) - a(j, i), scale))
                    throw DomainError("SymMatrix: matrix is not symmetric within tolerance");
        for (int i = 0; i < a.rows(); ++i)
            for (int j = i + 1; j < a.cols(); ++j) {
                const double v = 0.5 * (a(i, j) + a(j, i));
                a(i, j) = v;
                a(j, i) = v;
            }
        SymMatrix s;
        s.mode_ = Mode::floating;
        s.a_ = std::move(a);
        return s;
    }

    int dim() const {
        return mode_ == Mode::exact ? std::get<Mat<Rational>>(a_).rows()
                                    : std::get<Mat<double>>(a_).rows();
    }
    Mode mode() const { return mode_; }

    const Mat<Rational>& exact_mat() const { return std::get<Mat<Rational>>(a_); }
    const Mat<double>& fp_mat() const { return std::get<Mat<double>>(a_); }
    Mat<double> as_fp_mat() const {
        return mode_ == Mode::exact ? as_fp(exact_mat()) : fp_mat();
    }

private:
    SymMatrix() = default;
    static void require_square(int r, int c) {
        if (r != c) throw DimensionError("SymMatrix: matrix not square");
        if (r < 1) throw DimensionError("SymMatrix: dimension must be at least 1");
    }

    Mode mode_ = Mode::floating;
    std::variant<Mat<Rational>, Mat<double>> a_;
};

// Quadratic map R^m -> R^n, component i given by x^T A_i x with A_i symmetric.
// All components share one dimension and one arithmetic mode.
class QuadraticMap {
public:
    explicit QuadraticMap(const std::vector<SymMatrix>& components);
    static QuadraticMap from_exact(std::vector<Mat<Rational>> components);
    static QuadraticMap from_fp(std::vector<Mat<double>> components, const Tol& tol = {});

    int m() const { return m_; }
    int n() const { return n_; }
    Mode mode() const { return mode_; }

    const std::vector<Mat<Rational>>& components_exact() const;
    const std::vector<Mat<double>>& components_fp() const;
    SymMatrix component(int i) const; // zero-based

    QuadraticMap as_fp(const Tol& tol = {}) const;
    bool is_zero_map() const;

private:
    QuadraticMap() = default;
    int m_ = 0, n_ = 0;
    Mode mode_ = Mode::floating;
    std::vector<Mat<Rational>> exact_;
    std::vector<Mat<double>> fp_;
};

// Copies of the component matrices as doubles, whatever the map's mode.
std::vector<Mat<double>> fp_components(const QuadraticMap& map);

// phi(x), row i of the Jacobian is 2 x^T A_i, and the gradient Gram matrix
// G_ij = <grad phi_i, grad phi_j> = 4 x^T A_i A_j x.
std::vector<double> evaluate(const QuadraticMap& map, const std::vector<double>& x);
std::vector<Rational> evaluate_exact(const QuadraticMap& map, const std::vector<Rational>& x);
Mat<double> jacobian(const QuadraticMap& map, const std::vector<double>& x);
Mat<Rational> jacobian_exact(const QuadraticMap& map, const std::vector<Rational>& x);
Mat<double> gram_gradients(const QuadraticMap& map, const std::vector<double>& x);
Mat<Rational> gram_gradients_exact(const QuadraticMap& map, const std::vector<Rational>& x);

} // namespace qhm
