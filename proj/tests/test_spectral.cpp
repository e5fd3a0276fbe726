#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "qhm/classify43.hpp"
#include "qhm/constructions.hpp"
#include "qhm/spectral.hpp"

using namespace qhm;
using namespace qhm_test;

namespace {

double ortho_residual(const Mat<double>& p) {
    return max_abs_diff(p.transpose() * p, Mat<double>::identity(p.cols()));
}

// max violation of D B_i = B_i D, B_i^T B_i = D^2, B_i^T B_j = -B_j^T B_i
double block_relation_residual(const NormalFormT<double>& nf) {
    Mat<double> d(nf.k, nf.k);
    for (int i = 0; i < nf.k; ++i) d(i, i) = nf.D[static_cast<size_t>(i)];
    const Mat<double> d2 = d * d;
    double worst = 0.0;
    for (size_t i = 0; i < nf.blocks.size(); ++i) {
        const Mat<double>& b = nf.blocks[i];
        worst = std::max(worst, max_abs_diff(d * b, b * d));
        worst = std::max(worst, max_abs_diff(b.transpose() * b, d2));
        for (size_t j = i + 1; j < nf.blocks.size(); ++j) {
            const Mat<double>& bj = nf.blocks[j];
            worst = std::max(worst,
                             (b.transpose() * bj + bj.transpose() * b).max_abs());
        }
    }
    return worst;
}

double reconstruction_error(const QuadraticMap& map, const Tol& tol = {}) {
    const NormalForm nf = normal_form(map, tol);
    const QuadraticMap back = reconstruct(nf, map.n());
    const auto a = fp_components(map);
    const auto b = fp_components(back);
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, max_abs_diff(a[i], b[i]));
    return worst;
}

QuadraticMap zero_padded_hopf() {
    const QuadraticMap hopf = hopf_standard_exact(Rational(1));
    std::vector<Mat<Rational>> comps;
    for (const Mat<Rational>& a : hopf.components_exact())
        comps.push_back(block_diag(a, Mat<Rational>(2, 2)));
    return QuadraticMap::from_exact(std::move(comps));
}

} // namespace

TEST_CASE("Jacobi eigendecomposition of symmetric matrices") {
    SUBCASE("diagonal input returns the identity basis exactly") {
        const EigenDecomposition eig = eigen_symmetric(fp_mat({{3, 0}, {0, -5}}));
        CHECK(eig.vectors == Mat<double>::identity(2));
        CHECK(eig.values == std::vector<double>{3, -5});
    }
    SUBCASE("2x2 reflector") {
        const EigenDecomposition eig = eigen_symmetric(fp_mat({{0, 1}, {1, 0}}));
        std::vector<double> v = eig.values;
        std::sort(v.begin(), v.end());
        CHECK(v[0] == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(v[1] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(ortho_residual(eig.vectors) < 1e-14);
    }
    SUBCASE("random matrices are reconstructed") {
        Rng rng(101);
        for (int rep = 0; rep < 20; ++rep) {
            const Mat<double> a = rng.symmetric_pm1(8);
            const EigenDecomposition eig = eigen_symmetric(a);
            Mat<double> lam(8, 8);
            for (int i = 0; i < 8; ++i) lam(i, i) = eig.values[static_cast<size_t>(i)];
            const Mat<double> back = eig.vectors * lam * eig.vectors.transpose();
            CHECK(max_abs_diff(a, back) < 1e-11 * std::max(1.0, a.max_abs()));
            CHECK(ortho_residual(eig.vectors) < 1e-12);
        }
    }
}

TEST_CASE("characteristic polynomials over rationals") {
    CHECK(char_poly(rat_diag({2, 3})) ==
          std::vector<Rational>{Rational(6), Rational(-5), Rational(1)});
    CHECK(char_poly(rat_mat({{0, 1}, {1, 0}})) ==
          std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});

    SUBCASE("rank = matrix size minus the zero-root multiplicity") {
        CHECK(rank_from_char_poly(char_poly(rat_diag({2, 0, -2}))) == 2);
        CHECK(rank_from_char_poly(char_poly(rat_diag({0, 0, 0}))) == 0);
        CHECK(rank_from_char_poly(char_poly(rat_diag({1, 2, 3}))) == 3);
    }
    SUBCASE("plus/minus pairing is evenness of the deflated polynomial") {
        CHECK(plus_minus_paired_from_char_poly(char_poly(rat_diag({2, -2, 3, -3}))));
        CHECK(plus_minus_paired_from_char_poly(char_poly(rat_diag({2, -2, 0}))));
        CHECK(!plus_minus_paired_from_char_poly(char_poly(rat_diag({1, -1, 2}))));
        CHECK(!plus_minus_paired_from_char_poly(char_poly(rat_diag({1, 1, -1}))));
    }
    SUBCASE("umbilical detection from the deflated polynomial") {
        CHECK(*umbilical_mu_from_char_poly(char_poly(rat_diag({3, 3, -3, -3}))) == Rational(9));
        CHECK(*umbilical_mu_from_char_poly(char_poly(rat_diag({3, 0, -3, 0}))) == Rational(9));
        CHECK(!umbilical_mu_from_char_poly(char_poly(rat_diag({2, 3, -2, -3}))));
    }
    SUBCASE("rank(A^2) = rank(A) for symmetric A") {
        Rng rng(102);
        for (int rep = 0; rep < 20; ++rep) {
            Mat<Rational> a(5, 5);
            for (int i = 0; i < 5; ++i)
                for (int j = i; j < 5; ++j) {
                    a(i, j) = rng.rational_pm1(4);
                    a(j, i) = a(i, j);
                }
            // make singularity common: zero out a row/column pair half the time
            if (rep % 2 == 0)
                for (int i = 0; i < 5; ++i) {
                    a(i, 2) = Rational(0);
                    a(2, i) = Rational(0);
                }
            CHECK(rank_from_char_poly(char_poly(a * a)) == rank_from_char_poly(char_poly(a)));
        }
    }
}

TEST_CASE("q_rank of harmonic morphisms") {
    CHECK(q_rank(hopf_construction(2)) == 4);
    CHECK(q_rank(two_eigenvalue_morphism()) == 8);
    CHECK(q_rank(zero_padded_hopf()) == 4);
    CHECK_THROWS_AS(q_rank(QuadraticMap::from_exact({rat_diag({1, 1})})), DomainError);
}

TEST_CASE("spectrum_report certifies the shared-spectrum facts") {
    SUBCASE("two-eigenvalue fixture") {
        const SpectrumReport rep = spectrum_report(two_eigenvalue_morphism());
        CHECK(rep.common_rank == 8);
        CHECK(rep.rank_is_even);
        CHECK(rep.spectra_equal);
        CHECK(rep.plus_minus_paired);
        REQUIRE(rep.spectra.size() == 3);
        const std::vector<double> want = {3, 3, 2, 2, -2, -2, -3, -3};
        for (const std::vector<double>& s : rep.spectra) {
            REQUIRE(s.size() == 8);
            for (size_t i = 0; i < 8; ++i)
                CHECK(s[i] == doctest::Approx(want[i]).epsilon(1e-10));
        }
    }
    SUBCASE("standard Hopf map") {
        const SpectrumReport rep = spectrum_report(hopf_standard_exact(Rational(1)));
        const std::vector<double> want = {1, 1, -1, -1};
        for (const std::vector<double>& s : rep.spectra) {
            REQUIRE(s.size() == 4);
            for (size_t i = 0; i < 4; ++i)
                CHECK(s[i] == doctest::Approx(want[i]).epsilon(1e-10));
        }
        CHECK(rep.common_rank == 4);
    }
    SUBCASE("non-morphisms are reported, not rejected") {
        const SpectrumReport rep = spectrum_report(
            QuadraticMap::from_exact({rat_diag({1, -1}), rat_diag({2, -2})}));
        CHECK(!rep.spectra_equal);
        CHECK(rep.plus_minus_paired);
        CHECK(rep.rank_is_even);
    }
}

TEST_CASE("normal form on exact diagonal-leading maps") {
    SUBCASE("standard Hopf map") {
        const NormalForm nf = normal_form(hopf_standard_exact(Rational(1)));
        CHECK(nf.mode() == Mode::exact);
        CHECK(nf.k() == 2);
        CHECK(nf.r() == 0);
        CHECK(nf.exact().D == std::vector<Rational>{Rational(1), Rational(1)});
        CHECK(nf.exact().P * nf.exact().P.transpose() == Mat<Rational>::identity(4));
        // round-trip is exact on the exact path
        const QuadraticMap back = reconstruct(nf, 3);
        CHECK(back.components_exact() == hopf_standard_exact(Rational(1)).components_exact());
    }
    SUBCASE("umbilical fixture") {
        const NormalForm nf = normal_form(umbilical_scale3_morphism());
        CHECK(nf.k() == 4);
        CHECK(nf.r() == 0);
        CHECK(nf.exact().D == std::vector<Rational>(4, Rational(3)));
        const QuadraticMap back = reconstruct(nf, 5);
        CHECK(back.components_exact() == umbilical_scale3_morphism().components_exact());
    }
    SUBCASE("two-eigenvalue fixture sorts D descending") {
        const NormalForm nf = normal_form(two_eigenvalue_morphism());
        CHECK(nf.k() == 4);
        CHECK(nf.exact().D == std::vector<Rational>{Rational(3), Rational(3), Rational(2),
                                                    Rational(2)});
        const QuadraticMap back = reconstruct(nf, 3);
        CHECK(back.components_exact() == two_eigenvalue_morphism().components_exact());
    }
    SUBCASE("zero padding only grows the kernel") {
        const NormalForm nf = normal_form(zero_padded_hopf());
        CHECK(nf.k() == 2);
        CHECK(nf.r() == 2);
    }
}

TEST_CASE("normal form on float maps in general position") {
    Rng rng(103);
    const QuadraticMap base = hopf_standard(2.5);
    for (int rep = 0; rep < 5; ++rep) {
        const QuadraticMap map = conjugated_copy(base, rng);
        const NormalForm nf = normal_form(map);
        CHECK(nf.mode() == Mode::floating);
        CHECK(nf.k() == 2);
        CHECK(nf.r() == 0);
        CHECK(ortho_residual(nf.fp().P) < 1e-9);
        CHECK(block_relation_residual(nf.fp()) < 1e-8);
        CHECK(reconstruction_error(map) < 1e-8);
    }

    SUBCASE("round trips across the golden set under random conjugation") {
        const QuadraticMap goldens[] = {hopf_construction(1).as_fp(), hopf_standard(1.0),
                                        two_eigenvalue_morphism().as_fp(),
                                        umbilical_scale3_morphism().as_fp()};
        int count = 0;
        for (const QuadraticMap& g : goldens)
            for (int rep = 0; rep < 5; ++rep) {
                const QuadraticMap map = conjugated_copy(g, rng);
                CHECK(reconstruction_error(map) < 1e-8);
                ++count;
            }
        CHECK(count == 20);
    }
    SUBCASE("rejects non-morphisms") {
        CHECK_THROWS_AS(normal_form(QuadraticMap::from_fp({fp_mat({{1, 0}, {0, -1}}),
                                                           fp_mat({{1, 0}, {0, -1}})})),
                        DomainError);
    }
    SUBCASE("reconstruct validates the codomain dimension") {
        const NormalForm nf = normal_form(hopf_standard(1.0));
        CHECK_THROWS_AS(reconstruct(nf, 7), DimensionError);
        CHECK(reconstruct(nf).n() == 3);
    }
}

TEST_CASE("split_singular factors through the kernel complement") {
    SUBCASE("already Q-nonsingular input") {
        const SingularSplit s = split_singular(hopf_standard_exact(Rational(1)));
        CHECK(s.projection.rows() == 4);
        CHECK(s.projection.cols() == 4);
        CHECK(q_rank(s.core) == 4);
    }
    SUBCASE("zero-padded Hopf map") {
        const QuadraticMap padded = zero_padded_hopf();
        const SingularSplit s = split_singular(padded);
        CHECK(s.projection.rows() == 4);
        CHECK(s.projection.cols() == 6);
        CHECK(s.projection_exact.has_value());
        CHECK(s.core.m() == 4);
        CHECK(q_rank(s.core) == 4);
        // orthonormal rows
        CHECK(max_abs_diff(s.projection * s.projection.transpose(),
                           Mat<double>::identity(4)) < 1e-12);
        // pointwise factorization phi = core(projection x)
        Rng rng(104);
        for (int rep = 0; rep < 100; ++rep) {
            const std::vector<double> x = rng.vector_pm1(6);
            const std::vector<double> px = mat_vec(s.projection, x);
            const std::vector<double> lhs = evaluate(padded, x);
            const std::vector<double> rhs = evaluate(s.core, px);
            for (size_t i = 0; i < lhs.size(); ++i)
                CHECK(std::abs(lhs[i] - rhs[i]) < 1e-9);
        }
    }
    SUBCASE("float route") {
        Rng rng(105);
        const QuadraticMap map = conjugated_copy(zero_padded_hopf().as_fp(), rng);
        const SingularSplit s = split_singular(map);
        CHECK(s.projection.rows() == 4);
        for (int rep = 0; rep < 50; ++rep) {
            const std::vector<double> x = rng.vector_pm1(6);
            const std::vector<double> lhs = evaluate(map, x);
            const std::vector<double> rhs = evaluate(s.core, mat_vec(s.projection, x));
            for (size_t i = 0; i < lhs.size(); ++i)
                CHECK(std::abs(lhs[i] - rhs[i]) < 1e-9);
        }
    }
}

TEST_CASE("umbilical test reads the positive spectrum") {
    const auto [u1, ev1] = is_umbilical(umbilical_scale3_morphism());
    CHECK(u1);
    REQUIRE(ev1.size() == 4);
    for (double v : ev1) CHECK(v == doctest::Approx(3.0).epsilon(1e-12));

    const auto [u2, ev2] = is_umbilical(two_eigenvalue_morphism());
    CHECK(!u2);
    REQUIRE(ev2.size() == 4);
    CHECK(ev2[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(ev2[3] == doctest::Approx(2.0).epsilon(1e-12));

    const auto [u3, ev3] = is_umbilical(hopf_standard(1.0));
    CHECK(u3);
    CHECK(ev3.size() == 2);

    CHECK_THROWS_AS(is_umbilical(QuadraticMap::from_exact({rat_diag({1, 1})})), DomainError);
}
