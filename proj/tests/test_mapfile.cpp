#include "doctest.h"

#include <cmath>
#include <sstream>

#include "helpers.hpp"
#include "qhm/classify43.hpp"
#include "qhm/constructions.hpp"
#include "qhm/mapfile.hpp"

using namespace qhm;
using namespace qhm_test;

TEST_CASE("exact maps round-trip bit-exactly") {
    const QuadraticMap maps[] = {hopf_construction(2), two_eigenvalue_morphism(),
                                 umbilical_scale3_morphism(),
                                 phi_t_exact(Rational(7, 3), Rational(3, 5), Rational(4, 5))};
    for (const QuadraticMap& map : maps) {
        const std::string text = format_map(map);
        const QuadraticMap back = parse_map(text);
        CHECK(back.mode() == Mode::exact);
        CHECK(back.m() == map.m());
        CHECK(back.n() == map.n());
        CHECK(back.components_exact() == map.components_exact());
        // a second pass produces the same bytes
        CHECK(format_map(back) == text);
    }
}

TEST_CASE("float maps round-trip through 17 significant digits") {
    Rng rng(501);
    QuadraticMap map = conjugated_copy(phi_t(1.0 / 3.0, 0.12345678901234567), rng);
    const QuadraticMap back = parse_map(format_map(map));
    CHECK(back.mode() == Mode::floating);
    const auto a = map.components_fp();
    const auto b = back.components_fp();
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]); // bitwise

    SUBCASE("negative zero and exponents survive") {
        QuadraticMap tiny = QuadraticMap::from_fp({fp_mat({{1e-300, 2.5}, {2.5, -1e300}})});
        CHECK(parse_map(format_map(tiny)).components_fp() == tiny.components_fp());
    }
}

TEST_CASE("entry spellings decide the arithmetic mode") {
    SUBCASE("integers and rationals give an exact map") {
        const QuadraticMap map = parse_map("qhm 2 1\n0 1/2\n1/2 -3\n");
        CHECK(map.mode() == Mode::exact);
        CHECK(map.components_exact()[0](0, 1) == Rational(1, 2));
    }
    SUBCASE("a single decimal entry makes the map float") {
        const QuadraticMap map = parse_map("qhm 2 1\n0 0.5\n1/2 -3\n");
        CHECK(map.mode() == Mode::floating);
        CHECK(map.components_fp()[0](1, 0) == 0.5);
        CHECK(map.components_fp()[0](1, 1) == -3.0);
    }
    SUBCASE("scientific notation is float") {
        const QuadraticMap map = parse_map("qhm 1 1\n2e3\n");
        CHECK(map.mode() == Mode::floating);
        CHECK(map.components_fp()[0](0, 0) == 2000.0);
    }
}

TEST_CASE("comments, blank lines and loose whitespace are accepted") {
    const std::string text = "# a map\n\nqhm 2 2\n# first component\n  1   0\n0\t-1\n"
                             "\n0 2\n2 0 # trailing comment\n";
    const QuadraticMap map = parse_map(text);
    CHECK(map.m() == 2);
    CHECK(map.n() == 2);
    CHECK(map.components_exact()[1](0, 1) == Rational(2));

    SUBCASE("entries may be split across lines arbitrarily") {
        const QuadraticMap loose = parse_map("qhm 2 1\n1 0 0\n-1\n");
        CHECK(loose.components_exact()[0] == rat_diag({1, -1}));
    }
}

TEST_CASE("format problems raise ParseError") {
    const char* bad[] = {
        "",                                  // empty
        "qhm\n",                             // missing dimensions
        "map 2 1\n1 0\n0 -1\n",              // wrong magic
        "qhm 0 1\n",                         // m must be positive
        "qhm 2 0\n",                         // n must be positive
        "qhm -2 1\n1 0\n0 -1\n",             // negative dimension
        "qhm 2 x\n1 0\n0 -1\n",              // non-numeric dimension
        "qhm 2 1\n1 0 0\n",                  // too few entries
        "qhm 2 1\n1 0 0 -1 5\n",             // trailing entry
        "qhm 2 2\n1 0 0 -1\n",               // missing second block
        "qhm 2 1\n1 0/0\n0 -1\n",            // zero denominator
        "qhm 2 1\n1 abc\n0 -1\n",            // junk token
        "qhm 2 1\n1 2\n3 4\n",               // asymmetric block
        "qhm 2 1\n1 nan\nnan -1\n",          // non-finite float
        "qhm 2 1\n1 inf\ninf -1\n",          // non-finite float
    };
    for (const char* text : bad) {
        CAPTURE(text);
        CHECK_THROWS_AS(parse_map(text), ParseError);
    }
}

TEST_CASE("stream and file entry points agree") {
    const QuadraticMap map = hopf_construction(1);
    std::stringstream buf;
    write_map(buf, map);
    CHECK(buf.str() == format_map(map));
    const QuadraticMap back = read_map(buf);
    CHECK(back.components_exact() == map.components_exact());

    const std::string path = temp_path("mapfile", ".qhm");
    write_file(path, format_map(map));
    CHECK(read_map_file(path).components_exact() == map.components_exact());
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_map_file("/nonexistent/path/x.qhm"), ParseError);
}

TEST_CASE("float formatting uses plain decimal-or-exponent spellings") {
    const QuadraticMap map = QuadraticMap::from_fp({fp_mat({{0.1, 0.0}, {0.0, -2.0}})});
    const std::string text = format_map(map);
    CHECK(text.find("0.1000000000000000055511151231257827") == std::string::npos);
    CHECK(parse_map(text).components_fp()[0](0, 0) == 0.1);
}
