#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jlogic/decider.hpp"
#include "jlogic/io.hpp"

namespace py = pybind11;
using namespace jlogic;
using nlohmann::json;

namespace {

FinitaryModel load_model(const std::string& text) {
    FinitaryModel m = model_from_json(json::parse(text));
    const auto problems = validate_model(m);
    if (!problems.empty()) {
        std::string msg = "invalid model:";
        for (const auto& p : problems) msg += " " + p + ";";
        msg.pop_back();
        throw FormatError(msg);
    }
    return m;
}

WorldId world_of(const FinitaryModel& m, const std::string& name) {
    auto w = m.world_index(name);
    if (!w) throw FormatError("unknown world '" + name + "'");
    return *w;
}

py::dict witness(const char* verdict, const FinitaryModel& m, WorldId w) {
    py::dict d;
    d["verdict"] = verdict;
    d["world"] = m.worlds.at(w);
    d["model"] = model_to_json(m).dump();
    return d;
}

py::dict decide(const std::string& logic_name_text, const std::string& formula,
                const std::string& mode, const std::optional<std::string>& cs_text,
                std::optional<std::uint32_t> max_worlds, std::optional<std::uint32_t> max_base) {
    const LogicId logic = parse_logic(logic_name_text);
    const ConstantSpec cs = cs_text ? cs_from_json(json::parse(*cs_text), logic) : ConstantSpec{TotalCS{}};
    const Formula f = parse_formula(formula);
    SearchBounds b = SearchBounds::defaults_for(f);
    if (max_worlds) b.max_worlds = *max_worlds;
    if (max_base) b.max_base = *max_base;
    py::dict bounds;
    bounds["max_worlds"] = b.max_worlds;
    bounds["max_base"] = b.max_base;

    py::dict out;
    if (mode == "sat") {
        const SatVerdict v = decide_sat(logic, cs, f, b);
        if (const auto* s = std::get_if<Satisfiable>(&v)) {
            out = witness("satisfiable", s->model, s->world);
        } else {
            out["verdict"] = "unsatisfiable within bounds";
        }
    } else if (mode == "valid") {
        const ValidityVerdict v = decide_valid(logic, cs, f, b);
        if (const auto* c = std::get_if<Countermodel>(&v)) {
            out = witness("countermodel", c->model, c->world);
        } else {
            out["verdict"] = "valid within bounds";
        }
    } else {
        throw std::invalid_argument("mode must be 'sat' or 'valid'");
    }
    out["bounds"] = bounds;
    return out;
}

}  // namespace

PYBIND11_MODULE(_jlogic, m) {
    m.doc() = "Justification logics: parsing, proof checking, models and bounded decision";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

    m.def("parse_formula", [](const std::string& s) { return print_formula(parse_formula(s)); },
          py::arg("text"), "Canonical printed form of a formula.");
    m.def("parse_term", [](const std::string& s) { return print_term(parse_term(s)); },
          py::arg("text"), "Canonical printed form of a term.");
    m.def("logics", [] {
        std::vector<std::string> names;
        for (LogicId id : kAllLogics) names.emplace_back(logic_name(id));
        return names;
    });
    m.def("check_proof",
          [](const std::string& proof_json) {
              std::vector<std::pair<std::size_t, std::string>> out;
              for (auto& d : check_proof(proof_from_json(json::parse(proof_json)))) {
                  out.emplace_back(d.line, std::move(d.message));
              }
              return out;
          },
          py::arg("proof_json"), "Line diagnostics; empty when the proof is accepted.");
    m.def("eval",
          [](const std::string& model_json, const std::string& world, const std::string& formula) {
              const FinitaryModel model = load_model(model_json);
              return eval(model, world_of(model, world), parse_formula(formula));
          },
          py::arg("model_json"), py::arg("world"), py::arg("formula"));
    m.def("evidence_contains",
          [](const std::string& model_json, const std::string& term, const std::string& formula,
             const std::string& world) {
              const FinitaryModel model = load_model(model_json);
              return evidence_contains(logic_spec(model.logic), model.cs, model.base, model.r,
                                       parse_term(term), parse_formula(formula),
                                       world_of(model, world));
          },
          py::arg("model_json"), py::arg("term"), py::arg("formula"), py::arg("world"));
    m.def("decide", &decide, py::arg("logic"), py::arg("formula"), py::arg("mode") = "sat",
          py::arg("cs_json") = std::nullopt, py::arg("max_worlds") = std::nullopt,
          py::arg("max_base") = std::nullopt);
}
