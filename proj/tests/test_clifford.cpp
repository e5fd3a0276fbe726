#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "qhm/classify43.hpp"
#include "qhm/clifford.hpp"
#include "qhm/verify.hpp"

using namespace qhm;
using namespace qhm_test;

namespace {

// P_0 = sigma_z, P_1 = sigma_x: the smallest Clifford system (n = 1).
std::vector<Mat<Rational>> pauli_pair() {
    return {rat_diag({1, -1}), rat_mat({{0, 1}, {1, 0}})};
}

Mat<double> rotation2(double theta) {
    return fp_mat({{std::cos(theta), std::sin(theta)},
                   {-std::sin(theta), std::cos(theta)}});
}

} // namespace

TEST_CASE("check_clifford validates the anticommutation relations") {
    CHECK(check_clifford(pauli_pair()));
    CHECK(check_clifford({rat_diag({1, -1})}));

    SUBCASE("failing squares or commutators") {
        CHECK(!check_clifford({rat_diag({1, -1}), rat_diag({1, -1})}));
        CHECK(!check_clifford({rat_diag({2, -2}), rat_mat({{0, 1}, {1, 0}})}));
        CHECK(!check_clifford({Mat<Rational>::identity(2), rat_mat({{0, 1}, {1, 0}})}));
    }
    SUBCASE("float members use the tolerance") {
        std::vector<Mat<double>> members = {fp_mat({{1, 0}, {0, -1}}),
                                            fp_mat({{0, 1}, {1, 0}})};
        CHECK(check_clifford(members));
        members[1](0, 1) += 1e-6;
        members[1](1, 0) += 1e-6;
        CHECK(!check_clifford(members));
        Tol loose;
        loose.rel = 1e-4;
        CHECK(check_clifford(members, loose));
    }
    SUBCASE("structural errors throw") {
        CHECK_THROWS_AS(check_clifford(std::vector<Mat<Rational>>{}), DimensionError);
        CHECK_THROWS_AS(check_clifford({rat_diag({1, -1, 1})}), DimensionError);
        CHECK_THROWS_AS(check_clifford({rat_diag({1, -1}), rat_diag({1, -1, 1, -1})}),
                        DimensionError);
        CHECK_THROWS_AS(check_clifford({rat_mat({{1, 2}, {0, -1}})}), DomainError);
    }
}

TEST_CASE("CliffordSystem construction verifies and records the mode") {
    const CliffordSystem sys = CliffordSystem::from_exact(pauli_pair());
    CHECK(sys.count() == 2);
    CHECK(sys.dim() == 2);
    CHECK(sys.mode() == Mode::exact);
    CHECK(sys.members_exact() == pauli_pair());
    CHECK_THROWS_AS(sys.members_fp(), DomainError);
    CHECK(sys.members_as_fp().size() == 2);

    CHECK_THROWS_AS(CliffordSystem::from_exact({rat_diag({1, -1}), rat_diag({1, -1})}),
                    DomainError);

    const CliffordSystem fsys =
        CliffordSystem::from_fp({fp_mat({{1, 0}, {0, -1}}), fp_mat({{0, 1}, {1, 0}})});
    CHECK(fsys.mode() == Mode::floating);
    CHECK_THROWS_AS(fsys.members_exact(), DomainError);
}

TEST_CASE("direct sums of Clifford systems") {
    const CliffordSystem sys = CliffordSystem::from_exact(pauli_pair());
    const CliffordSystem sum = direct_sum(sys, sys);
    CHECK(sum.count() == 2);
    CHECK(sum.dim() == 4);
    CHECK(sum.members_exact()[0] == rat_diag({1, -1, 1, -1}));
    CHECK(splits_into_coordinate_blocks(sum));
    CHECK(!splits_into_coordinate_blocks(sys));

    CHECK_THROWS_AS(direct_sum(sys, irreducible(2)), DimensionError);
}

TEST_CASE("delta follows the 1,2,4,4,8,8,8,8 pattern with period-8 doubling") {
    const int want[] = {1, 2, 4, 4, 8, 8, 8, 8};
    for (int n = 1; n <= 8; ++n) CHECK(delta(n) == want[n - 1]);
    for (int n = 1; n <= 8; ++n) CHECK(delta(n + 8) == 16 * want[n - 1]);
    CHECK(delta(17) == 256);
    CHECK_THROWS_AS(delta(0), DomainError);
    CHECK_THROWS_AS(delta(-3), DomainError);
}

TEST_CASE("irreducible systems have minimal dimension and integer entries") {
    for (int n = 1; n <= 9; ++n) {
        CAPTURE(n);
        const CliffordSystem sys = irreducible(n);
        CHECK(sys.count() == n + 1);
        CHECK(sys.dim() == 2 * delta(n));
        CHECK(sys.mode() == Mode::exact);
        for (const Mat<Rational>& p : sys.members_exact())
            for (int i = 0; i < p.rows(); ++i)
                for (int j = 0; j < p.cols(); ++j) {
                    const Rational& x = p(i, j);
                    CHECK((x == Rational(0) || x == Rational(1) || x == Rational(-1)));
                }
    }
    CHECK_THROWS_AS(irreducible(0), DomainError);
}

TEST_CASE("the quadratic map of a Clifford system is a harmonic morphism") {
    for (int n : {1, 2, 4}) {
        CAPTURE(n);
        const QuadraticMap map = qhm_from_clifford(irreducible(n));
        CHECK(map.m() == 2 * delta(n));
        CHECK(map.n() == n + 1);
        const HMReport rep = check_harmonic_morphism(map);
        CHECK(rep.is_harmonic_morphism);
        // gram matrix is |X|^2-conformal with factor 4|X|^2
        Rng rng(301);
        for (int rep2 = 0; rep2 < 5; ++rep2) {
            const std::vector<double> x = rng.vector_pm1(map.m());
            double x2 = 0.0;
            for (double v : x) x2 += v * v;
            const Mat<double> g = gram_gradients(map, x);
            for (int i = 0; i < g.rows(); ++i)
                for (int j = 0; j < g.cols(); ++j)
                    CHECK(g(i, j) == doctest::Approx(i == j ? 4.0 * x2 : 0.0).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(qhm_from_clifford(CliffordSystem::from_exact({rat_diag({1, -1})})),
                    DomainError);
}

TEST_CASE("umbilical morphisms yield Clifford systems") {
    SUBCASE("scale-3 umbilical fixture") {
        const UmbilicalClifford uc = clifford_from_umbilical(umbilical_scale3_morphism());
        CHECK(uc.system.count() == 5);
        CHECK(uc.system.dim() == 8);
        CHECK(uc.scale == doctest::Approx(3.0).epsilon(1e-12));
        REQUIRE(uc.scale_exact.has_value());
        CHECK(*uc.scale_exact == Rational(3));
        CHECK(uc.system.members_exact()[0] == rat_diag({1, 1, 1, 1, -1, -1, -1, -1}));
    }
    SUBCASE("the standard Hopf map gives the n = 2 system at scale 1") {
        const UmbilicalClifford uc = clifford_from_umbilical(hopf_standard_exact(Rational(1)));
        CHECK(uc.system.count() == 3);
        CHECK(uc.system.dim() == 4);
        CHECK(*uc.scale_exact == Rational(1));
        // members reproduce the map: map components are scale * P_i pulled
        // back through the frame
        const Mat<Rational>& p = uc.frame.exact().P;
        const auto comps = hopf_standard_exact(Rational(1)).components_exact();
        const auto members = uc.system.members_exact();
        for (size_t i = 0; i < members.size(); ++i)
            CHECK(p * members[i] * p.transpose() == comps[i]);
    }
    SUBCASE("float route agrees") {
        Rng rng(302);
        const QuadraticMap map = conjugated_copy(hopf_standard(1.0), rng);
        const UmbilicalClifford uc = clifford_from_umbilical(map);
        CHECK(uc.system.count() == 3);
        CHECK(uc.scale == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(!uc.scale_exact.has_value());
    }
    SUBCASE("non-umbilical input is rejected") {
        CHECK_THROWS_AS(clifford_from_umbilical(two_eigenvalue_morphism()), DomainError);
    }
    SUBCASE("Q-singular input is rejected") {
        const QuadraticMap hopf = hopf_standard_exact(Rational(1));
        std::vector<Mat<Rational>> comps;
        for (const Mat<Rational>& a : hopf.components_exact())
            comps.push_back(block_diag(a, Mat<Rational>(2, 2)));
        CHECK_THROWS_AS(clifford_from_umbilical(QuadraticMap::from_exact(std::move(comps))),
                        DomainError);
    }
}

TEST_CASE("equivalence witnesses are orthogonal conjugations") {
    const CliffordSystem sys = irreducible(2);
    CHECK(equivalence_witness_check(sys, sys, Mat<double>::identity(4)));

    SUBCASE("conjugating by a rotation gives an equivalent system") {
        Rng rng(303);
        const Mat<double> a = rng.orthogonal(4);
        std::vector<Mat<double>> rotated;
        for (const Mat<double>& p : sys.members_as_fp())
            rotated.push_back(a * p * a.transpose());
        const CliffordSystem q = CliffordSystem::from_fp(rotated);
        CHECK(equivalence_witness_check(sys, q, a));
        CHECK(!equivalence_witness_check(sys, q, Mat<double>::identity(4)));
    }
    SUBCASE("non-orthogonal witnesses are rejected outright") {
        Mat<double> a = Mat<double>::identity(4);
        a(0, 0) = 2.0;
        CHECK(!equivalence_witness_check(sys, sys, a));
    }
    SUBCASE("dimension mismatches throw") {
        CHECK_THROWS_AS(
            equivalence_witness_check(sys, irreducible(1), Mat<double>::identity(4)),
            DimensionError);
        CHECK_THROWS_AS(equivalence_witness_check(sys, sys, Mat<double>::identity(3)),
                        DimensionError);
    }
}

TEST_CASE("equivalence invariants and the two classes at n = 4") {
    const CliffordInvariants inv1 = equivalence_invariants(irreducible(1));
    CHECK(inv1.dim == 2);
    CHECK(inv1.count == 2);
    CHECK(inv1.multiplicity == 1);
    CHECK(inv1.product_trace == doctest::Approx(0.0).epsilon(1e-12));

    SUBCASE("product trace separates the n = 4 classes") {
        const CliffordSystem plus = irreducible(4);
        std::vector<Mat<Rational>> flipped = plus.members_exact();
        flipped.back() = -flipped.back();
        const CliffordSystem minus = CliffordSystem::from_exact(std::move(flipped));

        const CliffordInvariants ip = equivalence_invariants(plus);
        const CliffordInvariants im = equivalence_invariants(minus);
        CHECK(std::abs(ip.product_trace) == doctest::Approx(8.0).epsilon(1e-12));
        CHECK(im.product_trace == doctest::Approx(-ip.product_trace).epsilon(1e-12));
        CHECK(!invariants_compatible(ip, im));
        CHECK(invariants_compatible(ip, ip));
    }
    SUBCASE("the product trace is invariant under orthogonal conjugation") {
        Rng rng(304);
        const CliffordSystem plus = irreducible(4);
        const CliffordInvariants ip = equivalence_invariants(plus);
        const Mat<double> a = rng.orthogonal(plus.dim());
        std::vector<Mat<double>> rotated;
        for (const Mat<double>& p : plus.members_as_fp())
            rotated.push_back(a * p * a.transpose());
        const CliffordInvariants ir =
            equivalence_invariants(CliffordSystem::from_fp(rotated));
        CHECK(ir.product_trace == doctest::Approx(ip.product_trace).epsilon(1e-9));
        CHECK(invariants_compatible(ip, ir));
    }
    SUBCASE("count below two is rejected") {
        CHECK_THROWS_AS(equivalence_invariants(CliffordSystem::from_exact({rat_diag({1, -1})})),
                        DomainError);
    }
}
