#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubemorse/bigraph.hpp"
#include "cubemorse/cover.hpp"
#include "cubemorse/cubeworld.hpp"
#include "cubemorse/io.hpp"
#include "cubemorse/morse.hpp"

namespace py = pybind11;
using namespace cubemorse;
using io::Json;

namespace {

// All results cross the boundary as plain python dicts/lists built from the
// same JSON the CLI emits, so the two surfaces can never drift apart.
py::object to_py(const Json& j) {
    py::module json = py::module::import("json");
    return json.attr("loads")(j.dump());
}

Json from_py(const py::object& obj) {
    py::module json = py::module::import("json");
    return Json::parse(json.attr("dumps")(obj).cast<std::string>());
}

Json checks_json(const std::vector<std::pair<std::string, CheckResult>>& checks) {
    Json arr = Json::array();
    Verdict overall = Verdict::Pass;
    for (const auto& [name, c] : checks) {
        Json e;
        e["name"] = name;
        e["verdict"] = to_string(c.verdict);
        if (!c.witness.empty()) e["witness"] = c.witness;
        arr.push_back(std::move(e));
        overall = combine(overall, c.verdict);
    }
    Json out;
    out["checks"] = std::move(arr);
    out["overall"] = to_string(overall);
    return out;
}

Json sizeability_json(const bigraph::SizeabilityReport& rep) {
    std::vector<std::pair<std::string, CheckResult>> checks;
    checks.emplace_back(rep.morse_suited.name, rep.morse_suited);
    checks.emplace_back(rep.four_cycle_free.name, rep.four_cycle_free);
    for (const auto& c : rep.span_connectivity) checks.emplace_back(c.name, c);
    return checks_json(checks);
}

Json verification_json(const morse::VerificationReport& rep) {
    std::vector<std::pair<std::string, CheckResult>> checks;
    for (const auto& c : rep.checks)
        checks.emplace_back(c.vertex_type + " sigma=" + c.sigma + " " + c.direction, c.result);
    Json out = checks_json(checks);
    out["engine"] = rep.engine;
    return out;
}

morse::Character make_character(morse::Family fam, int n, const std::vector<std::string>& coords) {
    std::vector<Rational> lam;
    for (const auto& s : coords) {
        auto q = parse_rational(s);
        if (!q) throw std::invalid_argument("bad rational '" + s + "'");
        lam.push_back(*q);
    }
    return morse::Character::make(fam, n, std::move(lam));
}

morse::Family parse_family(const std::string& s) {
    if (s == "xgamma") return morse::Family::XGamma;
    if (s == "theta") return morse::Family::Theta;
    throw std::invalid_argument("unknown family '" + s + "'");
}

}  // namespace

PYBIND11_MODULE(_cubemorse, m) {
    m.doc() = "verification toolkit for sizeable-graph cube complexes";

    m.def("gen_spec", [](int n, std::optional<std::string> p) {
        std::optional<Int> pv;
        if (p) pv = Int(*p);
        return to_py(io::spec_to_json(bigraph::build_modular_spec(n, pv)));
    }, py::arg("n"), py::arg("p") = std::nullopt);

    m.def("verify_sizeable", [](const py::object& spec_obj, const std::string& backend) {
        auto spec = io::spec_from_json(from_py(spec_obj));
        bigraph::Backend b = backend == "explicit"     ? bigraph::Backend::Explicit
                             : backend == "arithmetic" ? bigraph::Backend::Arithmetic
                                                       : bigraph::Backend::Both;
        return to_py(sizeability_json(bigraph::verify_sizeable(spec, b)));
    }, py::arg("spec"), py::arg("backend") = "both");

    m.def("realize", [](const py::object& spec_obj) {
        return to_py(io::graph_to_json(bigraph::realize(io::spec_from_json(from_py(spec_obj)))));
    });

    m.def("cell_counts", [](const std::string& family, const py::object& spec_obj, int n,
                            const std::string& mode) {
        cubeworld::ProductCubeComplex X =
            parse_family(family) == morse::Family::XGamma
                ? cubeworld::build_x_gamma(bigraph::realize(io::spec_from_json(from_py(spec_obj))))
                : cubeworld::build_theta_cube(n);
        auto res = cubeworld::cell_counts(X, mode == "enum" ? cubeworld::CountMode::Enumerate
                                                            : cubeworld::CountMode::ClosedForm);
        Json j;
        j["V"] = io::int_to_json(res.counts.V);
        j["E"] = io::int_to_json(res.counts.E);
        j["F"] = io::int_to_json(res.counts.F);
        j["C"] = io::int_to_json(res.counts.C);
        j["chi"] = io::int_to_json(res.counts.chi());
        j["verdict"] = to_string(res.verdict);
        return to_py(j);
    }, py::arg("family"), py::arg("spec") = py::none(), py::arg("n") = 0, py::arg("mode") = "closed");

    m.def("chambers", [](const std::string& family, int n) {
        Json arr = Json::array();
        for (const auto& ch : morse::enumerate_chambers(parse_family(family), n)) {
            Json e;
            e["signs"] = ch.signs;
            Json rep = Json::array();
            for (const Rational& q : ch.representative.coords())
                rep.push_back(rational_to_string(q));
            e["representative"] = rep;
            arr.push_back(std::move(e));
        }
        return to_py(arr);
    });

    m.def("check_hypotheses_xgamma",
          [](const py::object& spec_obj, const std::vector<std::string>& lambda,
             const std::string& engine) {
              auto spec = io::spec_from_json(from_py(spec_obj));
              auto g = bigraph::realize(spec);
              auto cert = bigraph::verify_sizeable(spec, bigraph::Backend::Both);
              morse::HypothesisOptions opts;
              opts.engine = engine == "explicit"   ? morse::Engine::Explicit
                            : engine == "symbolic" ? morse::Engine::Symbolic
                                                   : morse::Engine::Both;
              auto chi = make_character(morse::Family::XGamma, spec.rank, lambda);
              return to_py(verification_json(
                  morse::check_theorem_hypotheses_xgamma(g, &cert, chi, 1, opts)));
          },
          py::arg("spec"), py::arg("lambda_"), py::arg("engine") = "both");

    m.def("check_hypotheses_theta", [](int n, const std::vector<std::string>& lambda) {
        auto chi = make_character(morse::Family::Theta, n, lambda);
        morse::HypothesisOptions opts;
        opts.engine = morse::Engine::Both;
        return to_py(verification_json(morse::check_theorem_hypotheses_theta(n, chi, 1, opts)));
    });

    m.def("build_voltage_cover", [](int n, const std::string& p) {
        return to_py(io::voltage_to_json(cover::build_voltage_cover(n, Int(p))));
    });

    m.def("verify_cover", [](const py::object& cover_obj) {
        auto cov = io::voltage_from_json(from_py(cover_obj));
        auto rep = cover::verify_cover_properties(cov);
        return to_py(checks_json({{rep.covering.name, rep.covering},
                                  {rep.connected.name, rep.connected},
                                  {rep.four_cycle_lifts.name, rep.four_cycle_lifts}}));
    });

    m.def("check_cover_hypotheses", [](const py::object& cover_obj,
                                       const std::vector<std::string>& lambda) {
        auto cov = io::voltage_from_json(from_py(cover_obj));
        auto chi = make_character(morse::Family::Theta, cov.n, lambda);
        Json out;
        out["type1"] = verification_json(cover::check_type1_hypotheses(cov.n, chi));
        out["type2"] = verification_json(cover::check_type2_hypotheses(cov, chi));
        return to_py(out);
    });

    m.def("euler_formula", [](const std::string& family, int n, const std::string& p) {
        Int v = parse_family(family) == morse::Family::XGamma
                    ? cubeworld::euler_formula_xgamma(n, Int(p))
                    : cubeworld::euler_formula_Y(n, Int(p));
        return to_py(io::int_to_json(v));
    });
}
