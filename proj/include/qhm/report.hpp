#pragma once

#include <iosfwd>
#include <optional>

#include "json.hpp"

#include "qhm/classify43.hpp"
#include "qhm/spectral.hpp"
#include "qhm/verify.hpp"

namespace qhm {

// Renderable results of the three analysis commands. JSON schemas are flat
// key/value objects; matrices are arrays of row arrays, violation lists are
// arrays of [index..., magnitude] arrays. See the README for the exact keys.

struct VerifyReport {
    int m = 0, n = 0;
    Mode mode = Mode::floating;
    HMReport hm;
    std::optional<int> oracle_samples;
    std::optional<unsigned long long> oracle_seed;
    std::optional<bool> oracle_agrees;
};

struct NormalFormReport {
    int m = 0, n = 0;
    Mode map_mode = Mode::floating;
    int rank = 0;
    bool umbilical = false;
    std::vector<double> positive_eigenvalues;
    SpectrumReport spectrum;
    NormalForm nf;
};

struct ClassifyReport {
    int m = 0, n = 0;
    Mode mode = Mode::floating;
    Classification43 result;
};

VerifyReport make_verify_report(const QuadraticMap& map, const Tol& tol = {},
                                std::optional<int> oracle_samples = std::nullopt,
                                unsigned long long oracle_seed = 0);
NormalFormReport make_normal_form_report(const QuadraticMap& map, const Tol& tol = {});
ClassifyReport make_classify_report(const QuadraticMap& map, const Tol& tol = {});

void print_report(std::ostream& out, const VerifyReport& rep);
void print_report(std::ostream& out, const NormalFormReport& rep);
void print_report(std::ostream& out, const ClassifyReport& rep);

nlohmann::ordered_json to_json(const VerifyReport& rep);
nlohmann::ordered_json to_json(const NormalFormReport& rep);
nlohmann::ordered_json to_json(const ClassifyReport& rep);

} // namespace qhm
