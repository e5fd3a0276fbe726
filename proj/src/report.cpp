#include "qhm/report.hpp"

#include <ostream>

namespace qhm {
namespace {

using nlohmann::ordered_json;

ordered_json matrix_json(const Mat<double>& a) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < a.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json index_violations_json(const std::vector<IndexViolation>& vs) {
    ordered_json arr = ordered_json::array();
    for (const IndexViolation& v : vs) arr.push_back({v.index, v.magnitude});
    return arr;
}

ordered_json pair_violations_json(const std::vector<PairViolation>& vs) {
    ordered_json arr = ordered_json::array();
    for (const PairViolation& v : vs) arr.push_back({v.i, v.j, v.magnitude});
    return arr;
}

void print_matrix(std::ostream& out, const Mat<double>& a, const char* indent) {
    char buf[40];
    for (int i = 0; i < a.rows(); ++i) {
        out << indent;
        for (int j = 0; j < a.cols(); ++j) {
            if (j) out << ' ';
            std::snprintf(buf, sizeof buf, "%.12g", a(i, j));
            out << buf;
        }
        out << '\n';
    }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

VerifyReport make_verify_report(const QuadraticMap& map, const Tol& tol,
                                std::optional<int> oracle_samples,
                                unsigned long long oracle_seed) {
    VerifyReport rep;
    rep.m = map.m();
    rep.n = map.n();
    rep.mode = map.mode();
    rep.hm = check_harmonic_morphism(map, tol);
    if (oracle_samples) {
        rep.oracle_samples = oracle_samples;
        rep.oracle_seed = oracle_seed;
        rep.oracle_agrees = conformality_oracle(map, *oracle_samples, oracle_seed, tol);
    }
    return rep;
}

NormalFormReport make_normal_form_report(const QuadraticMap& map, const Tol& tol) {
    NormalFormReport rep{0, 0, map.mode(), 0, false, {}, spectrum_report(map, tol),
                         normal_form(map, tol)};
    rep.m = map.m();
    rep.n = map.n();
    rep.map_mode = map.mode();
    rep.rank = q_rank(map, tol);
    auto [umb, pos] = is_umbilical(map, tol);
    rep.umbilical = umb;
    rep.positive_eigenvalues = std::move(pos);
    return rep;
}

ClassifyReport make_classify_report(const QuadraticMap& map, const Tol& tol) {
    return {map.m(), map.n(), map.mode(), classify(map, tol)};
}

void print_report(std::ostream& out, const VerifyReport& rep) {
    out << "map: R^" << rep.m << " -> R^" << rep.n << " (" << mode_name(rep.mode) << ")\n";
    out << "harmonic: " << yes_no(rep.hm.is_harmonic) << '\n';
    for (const IndexViolation& v : rep.hm.trace_violations)
        out << "  trace violation: component " << v.index << " (|trace| = " << v.magnitude
            << ")\n";
    out << "horizontally weakly conformal: " << yes_no(rep.hm.is_hwc) << '\n';
    for (const PairViolation& v : rep.hm.anticommute_violations)
        out << "  anticommutator violation: components (" << v.i << ", " << v.j
            << ") max |entry| = " << v.magnitude << '\n';
    for (const PairViolation& v : rep.hm.square_violations)
        out << "  square mismatch: components (" << v.i << ", " << v.j
            << ") max |entry| = " << v.magnitude << '\n';
    out << "constant: " << yes_no(rep.hm.is_constant) << '\n';
    if (rep.oracle_agrees)
        out << "conformality oracle (" << *rep.oracle_samples << " samples, seed "
            << *rep.oracle_seed << "): " << (*rep.oracle_agrees ? "agrees" : "fails") << '\n';
    out << "harmonic morphism: " << yes_no(rep.hm.is_harmonic_morphism) << '\n';
}

void print_report(std::ostream& out, const NormalFormReport& rep) {
    out << "map: R^" << rep.m << " -> R^" << rep.n << " (" << mode_name(rep.map_mode) << ")\n";
    const NormalFormT<double> nf = rep.nf.as_fp();
    out << "Q-rank: " << rep.rank << " (k = " << nf.k << ", kernel dimension r = " << nf.r
        << ")\n";
    out << "rank even: " << yes_no(rep.spectrum.rank_is_even)
        << ", spectra equal: " << yes_no(rep.spectrum.spectra_equal)
        << ", eigenvalues paired: " << yes_no(rep.spectrum.plus_minus_paired) << '\n';
    out << "umbilical: " << yes_no(rep.umbilical) << '\n';
    char buf[40];
    out << "positive eigenvalues:";
    for (double v : rep.positive_eigenvalues) {
        std::snprintf(buf, sizeof buf, "%.12g", v);
        out << ' ' << buf;
    }
    out << '\n';
    out << "normal form (" << mode_name(rep.nf.mode()) << " basis):\n";
    out << "D:";
    for (double v : nf.D) {
        std::snprintf(buf, sizeof buf, "%.12g", v);
        out << ' ' << buf;
    }
    out << '\n';
    out << "P:\n";
    print_matrix(out, nf.P, "  ");
    for (size_t i = 0; i < nf.blocks.size(); ++i) {
        out << "B" << i + 1 << ":\n";
        print_matrix(out, nf.blocks[i], "  ");
    }
}

void print_report(std::ostream& out, const ClassifyReport& rep) {
    char buf[40];
    out << "map: R^" << rep.m << " -> R^" << rep.n << " (" << mode_name(rep.mode) << ")\n";
    std::snprintf(buf, sizeof buf, "%.17g", rep.result.lambda);
    out << "dilation scale lambda: " << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.17g", rep.result.t);
    out << "rotation parameter t: " << buf << '\n';
    out << "orientation flipped: " << yes_no(rep.result.orientation_flipped) << '\n';
    out << "witness P (domain):\n";
    print_matrix(out, rep.result.P, "  ");
    out << "witness G (codomain):\n";
    print_matrix(out, rep.result.G, "  ");
    std::snprintf(buf, sizeof buf, "%.6g", rep.result.residual);
    out << "max reconstruction residual: " << buf << '\n';
}

nlohmann::ordered_json to_json(const VerifyReport& rep) {
    ordered_json j;
    j["command"] = "verify";
    j["m"] = rep.m;
    j["n"] = rep.n;
    j["mode"] = mode_name(rep.mode);
    j["is_harmonic"] = rep.hm.is_harmonic;
    j["is_hwc"] = rep.hm.is_hwc;
    j["is_constant"] = rep.hm.is_constant;
    j["is_harmonic_morphism"] = rep.hm.is_harmonic_morphism;
    j["trace_violations"] = index_violations_json(rep.hm.trace_violations);
    j["anticommute_violations"] = pair_violations_json(rep.hm.anticommute_violations);
    j["square_violations"] = pair_violations_json(rep.hm.square_violations);
    if (rep.oracle_agrees) {
        j["oracle_samples"] = *rep.oracle_samples;
        j["oracle_seed"] = *rep.oracle_seed;
        j["oracle_agrees"] = *rep.oracle_agrees;
    }
    return j;
}

nlohmann::ordered_json to_json(const NormalFormReport& rep) {
    const NormalFormT<double> nf = rep.nf.as_fp();
    ordered_json j;
    j["command"] = "normal_form";
    j["m"] = rep.m;
    j["n"] = rep.n;
    j["mode"] = mode_name(rep.map_mode);
    j["basis_mode"] = mode_name(rep.nf.mode());
    j["q_rank"] = rep.rank;
    j["k"] = nf.k;
    j["r"] = nf.r;
    j["rank_is_even"] = rep.spectrum.rank_is_even;
    j["spectra_equal"] = rep.spectrum.spectra_equal;
    j["plus_minus_paired"] = rep.spectrum.plus_minus_paired;
    j["umbilical"] = rep.umbilical;
    j["positive_eigenvalues"] = rep.positive_eigenvalues;
    j["spectra"] = rep.spectrum.spectra;
    j["D"] = nf.D;
    j["P"] = matrix_json(nf.P);
    ordered_json blocks = ordered_json::array();
    for (const Mat<double>& b : nf.blocks) blocks.push_back(matrix_json(b));
    j["blocks"] = std::move(blocks);
    return j;
}

nlohmann::ordered_json to_json(const ClassifyReport& rep) {
    ordered_json j;
    j["command"] = "classify";
    j["m"] = rep.m;
    j["n"] = rep.n;
    j["mode"] = mode_name(rep.mode);
    j["lambda"] = rep.result.lambda;
    j["t"] = rep.result.t;
    j["orientation_flipped"] = rep.result.orientation_flipped;
    j["P"] = matrix_json(rep.result.P);
    j["G"] = matrix_json(rep.result.G);
    j["residual"] = rep.result.residual;
    return j;
}

} // namespace qhm
