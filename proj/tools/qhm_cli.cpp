#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qhm/classify43.hpp"
#include "qhm/clifford.hpp"
#include "qhm/constructions.hpp"
#include "qhm/mapfile.hpp"
#include "qhm/report.hpp"

namespace {

// Exit codes: 0 success (for verify: the map is a harmonic morphism),
// 1 verification/domain failure, 2 usage or parse errors.
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

qhm::QuadraticMap load_map(const std::string& path) {
    if (path == "-") return qhm::read_map(std::cin);
    return qhm::read_map_file(path);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw qhm::Error("cannot open output file '" + out_path + "'");
    out << text;
}

struct Options {
    std::string file = "-";
    std::string out_path;
    bool json = false;
    double tol_rel = 1e-9;
    int oracle_samples = 0;
    unsigned long long seed = 1;
    std::vector<std::string> generate_args;
};

qhm::Tol make_tol(const Options& opt) {
    qhm::Tol tol;
    tol.rel = opt.tol_rel;
    return tol;
}

int run_verify(const Options& opt) {
    const qhm::QuadraticMap map = load_map(opt.file);
    std::optional<int> oracle;
    if (opt.oracle_samples > 0) oracle = opt.oracle_samples;
    const qhm::VerifyReport rep =
        qhm::make_verify_report(map, make_tol(opt), oracle, opt.seed);
    std::ostringstream text;
    if (opt.json)
        text << qhm::to_json(rep).dump(2) << '\n';
    else
        qhm::print_report(text, rep);
    emit(text.str(), opt.out_path);
    return rep.hm.is_harmonic_morphism ? kOk : kFail;
}

int run_normal_form(const Options& opt) {
    const qhm::QuadraticMap map = load_map(opt.file);
    const qhm::NormalFormReport rep = qhm::make_normal_form_report(map, make_tol(opt));
    std::ostringstream text;
    if (opt.json)
        text << qhm::to_json(rep).dump(2) << '\n';
    else
        qhm::print_report(text, rep);
    emit(text.str(), opt.out_path);
    return kOk;
}

int run_classify(const Options& opt) {
    const qhm::QuadraticMap map = load_map(opt.file);
    const qhm::ClassifyReport rep = qhm::make_classify_report(map, make_tol(opt));
    std::ostringstream text;
    if (opt.json)
        text << qhm::to_json(rep).dump(2) << '\n';
    else
        qhm::print_report(text, rep);
    emit(text.str(), opt.out_path);
    return kOk;
}

int parse_int_arg(const std::string& s, const char* what) {
    try {
        size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw qhm::ParseError(std::string("generate: invalid ") + what + " '" + s + "'");
    }
}

double parse_float_arg(const std::string& s, const char* what) {
    try {
        size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw qhm::ParseError(std::string("generate: invalid ") + what + " '" + s + "'");
    }
}

int run_generate(const Options& opt) {
    const auto& args = opt.generate_args;
    if (args.empty())
        throw qhm::ParseError("generate: expected a kind "
                              "(hopf <n> | clifford <n> | phi-t <lambda> <t> | lift <file>)");
    const std::string& kind = args[0];
    // Bad construction parameters are usage errors, same exit code as bad flags.
    try {
        const qhm::QuadraticMap map = [&]() -> qhm::QuadraticMap {
            if (kind == "hopf") {
                if (args.size() != 2)
                    throw qhm::ParseError("generate hopf: expected one argument <n>");
                return qhm::hopf_construction(parse_int_arg(args[1], "size"));
            }
            if (kind == "clifford") {
                if (args.size() != 2)
                    throw qhm::ParseError("generate clifford: expected one argument <n>");
                return qhm::qhm_from_clifford(qhm::irreducible(parse_int_arg(args[1], "size")));
            }
            if (kind == "phi-t") {
                if (args.size() != 3)
                    throw qhm::ParseError("generate phi-t: expected two arguments <lambda> <t>");
                return qhm::phi_t(parse_float_arg(args[1], "lambda"),
                                  parse_float_arg(args[2], "t"));
            }
            if (kind == "lift") {
                if (args.size() != 2)
                    throw qhm::ParseError("generate lift: expected one argument <file>");
                return qhm::complete_lift(load_map(args[1]));
            }
            throw qhm::ParseError("generate: unknown kind '" + kind + "'");
        }();
        emit(qhm::format_map(map), opt.out_path);
    } catch (const qhm::DomainError& e) {
        throw qhm::ParseError(e.what());
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verify, normalize, construct and classify quadratic harmonic morphisms "
                 "between Euclidean spaces"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env_tol = std::getenv("QHM_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env_tol, &end);
        if (end != env_tol && *end == '\0' && v > 0.0) opt.tol_rel = v;
    }

    auto add_common = [&](CLI::App* sub, bool reads_map) {
        if (reads_map)
            sub->add_option("file", opt.file, "map file to read, or '-' for stdin");
        sub->add_flag("--json", opt.json, "emit a machine-readable JSON report");
        sub->add_option("--tol", opt.tol_rel, "relative verification tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", opt.out_path, "write output to a file instead of stdout");
    };

    CLI::App* verify = app.add_subcommand("verify", "check the harmonic morphism conditions");
    add_common(verify, true);
    verify->add_option("--oracle", opt.oracle_samples,
                       "also run the sampling conformality oracle with this many points")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", opt.seed, "seed for the sampling oracle");

    CLI::App* normal_form =
        app.add_subcommand("normal-form", "orthogonal normal form and spectral data");
    add_common(normal_form, true);

    CLI::App* classify =
        app.add_subcommand("classify", "locate a morphism R^4 -> R^3 in the standard family");
    add_common(classify, true);

    CLI::App* generate = app.add_subcommand(
        "generate", "construct a map: hopf <n> | clifford <n> | phi-t <lambda> <t> | lift <file>");
    add_common(generate, false);
    generate->add_option("args", opt.generate_args, "construction kind and parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (app.got_subcommand(verify)) return run_verify(opt);
        if (app.got_subcommand(normal_form)) return run_normal_form(opt);
        if (app.got_subcommand(classify)) return run_classify(opt);
        if (app.got_subcommand(generate)) return run_generate(opt);
        std::cerr << "error: no subcommand selected\n";
        return kUsage;
    } catch (const qhm::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const qhm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kFail;
    }
}
