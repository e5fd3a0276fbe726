#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhm/classify43.hpp"
#include "qhm/clifford.hpp"
#include "qhm/constructions.hpp"
#include "qhm/mapfile.hpp"
#include "qhm/report.hpp"

namespace py = pybind11;

namespace {

using Rows = std::vector<std::vector<double>>;

qhm::Mat<double> mat_from_rows(const Rows& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
    qhm::Mat<double> a(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw qhm::DimensionError("matrix rows have differing lengths");
        for (int j = 0; j < c; ++j) a(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return a;
}

Rows mat_to_rows(const qhm::Mat<double>& a) {
    Rows rows(static_cast<size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) {
        rows[static_cast<size_t>(i)].resize(static_cast<size_t>(a.cols()));
        for (int j = 0; j < a.cols(); ++j) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = a(i, j);
    }
    return rows;
}

qhm::Mat<qhm::Rational> mat_from_strings(const std::vector<std::vector<std::string>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
    qhm::Mat<qhm::Rational> a(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw qhm::DimensionError("matrix rows have differing lengths");
        for (int j = 0; j < c; ++j) {
            const auto v = qhm::Rational::parse(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            if (!v)
                throw qhm::ParseError("invalid rational literal '" +
                                      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] + "'");
            a(i, j) = *v;
        }
    }
    return a;
}

py::object json_to_py(const nlohmann::ordered_json& j) {
    using nlohmann::ordered_json;
    switch (j.type()) {
        case ordered_json::value_t::object: {
            py::dict d;
            for (const auto& [key, value] : j.items()) d[py::str(key)] = json_to_py(value);
            return d;
        }
        case ordered_json::value_t::array: {
            py::list l;
            for (const auto& value : j) l.append(json_to_py(value));
            return l;
        }
        case ordered_json::value_t::string:
            return py::str(j.get<std::string>());
        case ordered_json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case ordered_json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case ordered_json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case ordered_json::value_t::number_float:
            return py::float_(j.get<double>());
        default:
            return py::none();
    }
}

qhm::Tol make_tol(double rel) {
    qhm::Tol tol;
    tol.rel = rel;
    return tol;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quadratic harmonic morphisms: verification, normal forms, Clifford systems, "
              "constructions and the R^4 -> R^3 classification";

    py::register_exception<qhm::Error>(m, "Error");

    py::class_<qhm::QuadraticMap>(m, "QuadraticMap")
        .def_property_readonly("m", &qhm::QuadraticMap::m)
        .def_property_readonly("n", &qhm::QuadraticMap::n)
        .def_property_readonly("mode",
                               [](const qhm::QuadraticMap& map) {
                                   return std::string(qhm::mode_name(map.mode()));
                               })
        .def("component",
             [](const qhm::QuadraticMap& map, int i) {
                 return mat_to_rows(map.component(i).as_fp_mat());
             },
             py::arg("i"))
        .def("__repr__", [](const qhm::QuadraticMap& map) {
            return "<QuadraticMap R^" + std::to_string(map.m()) + " -> R^" +
                   std::to_string(map.n()) + " (" + qhm::mode_name(map.mode()) + ")>";
        });

    py::class_<qhm::CliffordSystem>(m, "CliffordSystem")
        .def_property_readonly("count", &qhm::CliffordSystem::count)
        .def_property_readonly("dim", &qhm::CliffordSystem::dim)
        .def_property_readonly("mode",
                               [](const qhm::CliffordSystem& s) {
                                   return std::string(qhm::mode_name(s.mode()));
                               })
        .def("member",
             [](const qhm::CliffordSystem& s, int i) {
                 if (i < 0 || i >= s.count())
                     throw qhm::DimensionError("member index out of range");
                 return mat_to_rows(s.members_as_fp()[static_cast<size_t>(i)]);
             },
             py::arg("i"))
        .def("__repr__", [](const qhm::CliffordSystem& s) {
            return "<CliffordSystem " + std::to_string(s.count()) + " members on R^" +
                   std::to_string(s.dim()) + " (" + qhm::mode_name(s.mode()) + ")>";
        });

    m.def("make_map",
          [](const std::vector<Rows>& comps) {
              std::vector<qhm::Mat<double>> ms;
              ms.reserve(comps.size());
              for (const Rows& r : comps) ms.push_back(mat_from_rows(r));
              return qhm::QuadraticMap::from_fp(std::move(ms));
          },
          py::arg("components"), "Float-mode map from a list of symmetric matrices");
    m.def("make_map_exact",
          [](const std::vector<std::vector<std::vector<std::string>>>& comps) {
              std::vector<qhm::Mat<qhm::Rational>> ms;
              ms.reserve(comps.size());
              for (const auto& r : comps) ms.push_back(mat_from_strings(r));
              return qhm::QuadraticMap::from_exact(std::move(ms));
          },
          py::arg("components"),
          "Exact-mode map from matrices of rational literals like '2' or '-3/4'");

    m.def("parse_map", [](const std::string& text) { return qhm::parse_map(text); },
          py::arg("text"));
    m.def("format_map", &qhm::format_map, py::arg("map"));

    m.def("evaluate",
          [](const qhm::QuadraticMap& map, const std::vector<double>& x) {
              return qhm::evaluate(map, x);
          },
          py::arg("map"), py::arg("x"));
    m.def("jacobian",
          [](const qhm::QuadraticMap& map, const std::vector<double>& x) {
              return mat_to_rows(qhm::jacobian(map, x));
          },
          py::arg("map"), py::arg("x"));
    m.def("gram_gradients",
          [](const qhm::QuadraticMap& map, const std::vector<double>& x) {
              return mat_to_rows(qhm::gram_gradients(map, x));
          },
          py::arg("map"), py::arg("x"));

    m.def("verify",
          [](const qhm::QuadraticMap& map, double tol, int oracle_samples,
             unsigned long long seed) {
              std::optional<int> oracle;
              if (oracle_samples > 0) oracle = oracle_samples;
              return json_to_py(qhm::to_json(
                  qhm::make_verify_report(map, make_tol(tol), oracle, seed)));
          },
          py::arg("map"), py::arg("tol") = 1e-9, py::arg("oracle_samples") = 0,
          py::arg("seed") = 1,
          "Harmonic morphism report as a dict (see the README JSON schema)");
    m.def("conformality_oracle",
          [](const qhm::QuadraticMap& map, int samples, unsigned long long seed, double tol) {
              return qhm::conformality_oracle(map, samples, seed, make_tol(tol));
          },
          py::arg("map"), py::arg("samples") = 100, py::arg("seed") = 1,
          py::arg("tol") = 1e-9);
    m.def("dilation",
          [](const qhm::QuadraticMap& map, const std::vector<double>& x) {
              return qhm::dilation(map, x);
          },
          py::arg("map"), py::arg("x"));

    m.def("q_rank",
          [](const qhm::QuadraticMap& map, double tol) { return qhm::q_rank(map, make_tol(tol)); },
          py::arg("map"), py::arg("tol") = 1e-9);
    m.def("is_umbilical",
          [](const qhm::QuadraticMap& map, double tol) {
              return qhm::is_umbilical(map, make_tol(tol));
          },
          py::arg("map"), py::arg("tol") = 1e-9);
    m.def("normal_form",
          [](const qhm::QuadraticMap& map, double tol) {
              return json_to_py(qhm::to_json(qhm::make_normal_form_report(map, make_tol(tol))));
          },
          py::arg("map"), py::arg("tol") = 1e-9,
          "Normal form and spectral report as a dict");
    m.def("split_singular",
          [](const qhm::QuadraticMap& map, double tol) {
              qhm::SingularSplit s = qhm::split_singular(map, make_tol(tol));
              return py::make_tuple(mat_to_rows(s.projection), s.core);
          },
          py::arg("map"), py::arg("tol") = 1e-9,
          "(projection, core) with evaluate(map, x) == evaluate(core, projection @ x)");

    m.def("hopf_construction", &qhm::hopf_construction, py::arg("n"));
    m.def("complete_lift",
          [](const qhm::QuadraticMap& map) { return qhm::complete_lift(map); },
          py::arg("map"));

    m.def("check_clifford",
          [](const std::vector<Rows>& members, double tol) {
              std::vector<qhm::Mat<double>> ms;
              ms.reserve(members.size());
              for (const Rows& r : members) ms.push_back(mat_from_rows(r));
              return qhm::check_clifford(ms, make_tol(tol));
          },
          py::arg("members"), py::arg("tol") = 1e-9);
    m.def("delta", &qhm::delta, py::arg("n"));
    m.def("irreducible", &qhm::irreducible, py::arg("n"));
    m.def("direct_sum", &qhm::direct_sum, py::arg("a"), py::arg("b"));
    m.def("qhm_from_clifford", &qhm::qhm_from_clifford, py::arg("system"));
    m.def("clifford_from_umbilical",
          [](const qhm::QuadraticMap& map, double tol) {
              qhm::UmbilicalClifford u = qhm::clifford_from_umbilical(map, make_tol(tol));
              py::dict d;
              d["system"] = py::cast(u.system);
              d["scale"] = u.scale;
              d["basis"] = mat_to_rows(u.frame.as_fp().P);
              return d;
          },
          py::arg("map"), py::arg("tol") = 1e-9);
    m.def("equivalence_witness_check",
          [](const qhm::CliffordSystem& p, const qhm::CliffordSystem& q, const Rows& a,
             double tol) {
              return qhm::equivalence_witness_check(p, q, mat_from_rows(a), make_tol(tol));
          },
          py::arg("p"), py::arg("q"), py::arg("a"), py::arg("tol") = 1e-9);
    m.def("equivalence_invariants",
          [](const qhm::CliffordSystem& s) {
              const qhm::CliffordInvariants inv = qhm::equivalence_invariants(s);
              py::dict d;
              d["dim"] = inv.dim;
              d["count"] = inv.count;
              d["multiplicity"] = inv.multiplicity;
              d["product_trace"] = inv.product_trace;
              return d;
          },
          py::arg("system"));

    m.def("phi_t", &qhm::phi_t, py::arg("lam"), py::arg("t"));
    m.def("hopf_standard", &qhm::hopf_standard, py::arg("lam"));
    m.def("classify",
          [](const qhm::QuadraticMap& map, double tol) {
              return json_to_py(qhm::to_json(qhm::make_classify_report(map, make_tol(tol))));
          },
          py::arg("map"), py::arg("tol") = 1e-9,
          "Classification witness for a morphism R^4 -> R^3 as a dict");
    m.def("sphere_restriction_check",
          [](const qhm::QuadraticMap& map, double tol) {
              return qhm::sphere_restriction_check(map, make_tol(tol));
          },
          py::arg("map"), py::arg("tol") = 1e-9);
}
