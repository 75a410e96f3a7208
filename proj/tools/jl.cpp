// jl: command-line front end.
//
// Exit codes: 0 affirmative (ok, true, valid, satisfiable), 1 negative,
// 2 usage, parse or validation error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "jlogic/decider.hpp"
#include "jlogic/io.hpp"

namespace {

using namespace jlogic;
using nlohmann::json;

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

const char* const kBoundsNote =
    "note: bounds are user-supplied; the verdict holds only within them";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FinitaryModel load_model(const std::string& path) {
    FinitaryModel m = model_from_json(read_json_file(path));
    const auto problems = validate_model(m);
    if (!problems.empty()) {
        std::string msg = "invalid model '" + path + "':";
        for (const auto& p : problems) msg += "\n  " + p;
        throw UsageError(msg);
    }
    return m;
}

WorldId world_of(const FinitaryModel& m, const std::string& name) {
    auto w = m.world_index(name);
    if (!w) throw UsageError("unknown world '" + name + "'");
    return *w;
}

int emit(bool as_json, const json& j, const std::string& text, int code) {
    if (as_json) std::cout << j.dump(2) << "\n";
    else std::cout << text << "\n";
    return code;
}

int run_parse(const std::string& text, bool as_json) {
    const std::string printed = print_formula(parse_formula(text));
    return emit(as_json, {{"formula", printed}}, printed, kAffirmative);
}

int run_check_proof(const std::string& path, bool as_json) {
    const Proof p = proof_from_json(read_json_file(path));
    const auto diagnostics = check_proof(p);
    json list = json::array();
    std::string text = diagnostics.empty() ? "ok" : "";
    for (const auto& d : diagnostics) {
        list.push_back({{"line", d.line}, {"message", d.message}});
        if (!text.empty()) text += "\n";
        text += (d.line == 0 ? std::string("proof") : "line " + std::to_string(d.line)) + ": " +
                d.message;
    }
    return emit(as_json, {{"ok", diagnostics.empty()}, {"diagnostics", list}}, text,
                diagnostics.empty() ? kAffirmative : kNegative);
}

int run_eval(const std::string& model_path, const std::string& world, const std::string& text,
             bool as_json) {
    const FinitaryModel m = load_model(model_path);
    const Formula f = parse_formula(text);
    const bool value = eval(m, world_of(m, world), f);
    return emit(as_json, {{"world", world}, {"formula", print_formula(f)}, {"value", value}},
                value ? "true" : "false", value ? kAffirmative : kNegative);
}

struct DecideArgs {
    std::string logic;
    std::string cs = "total";
    std::string mode = "sat";
    std::string formula;
    std::optional<std::uint32_t> max_worlds;
    std::optional<std::uint32_t> max_base;
};

int run_decide(const DecideArgs& args, bool as_json) {
    LogicId logic;
    try {
        logic = parse_logic(args.logic);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const ConstantSpec cs =
        args.cs == "total" ? ConstantSpec{TotalCS{}} : cs_from_json(read_json_file(args.cs), logic);
    const Formula f = parse_formula(args.formula);
    SearchBounds bounds = SearchBounds::defaults_for(f);
    if (args.max_worlds) bounds.max_worlds = *args.max_worlds;
    if (args.max_base) bounds.max_base = *args.max_base;
    if (bounds.max_worlds == 0) throw UsageError("--max-worlds must be at least 1");

    const json bounds_json = {{"max_worlds", bounds.max_worlds}, {"max_base", bounds.max_base}};
    const std::string bounds_text = "(max-worlds " + std::to_string(bounds.max_worlds) +
                                    ", max-base " + std::to_string(bounds.max_base) + ")";
    auto witness = [&](const char* verdict, const FinitaryModel& m, WorldId w, int code) {
        const json model = model_to_json(m);
        return emit(as_json,
                    {{"verdict", verdict}, {"world", m.worlds.at(w)}, {"model", model},
                     {"bounds", bounds_json}},
                    std::string(verdict) + " at " + m.worlds.at(w) + "\n" + model.dump(2), code);
    };

    if (args.mode == "sat") {
        const SatVerdict v = decide_sat(logic, cs, f, bounds);
        if (const auto* s = std::get_if<Satisfiable>(&v)) {
            return witness("satisfiable", s->model, s->world, kAffirmative);
        }
        return emit(as_json,
                    {{"verdict", "unsatisfiable within bounds"}, {"bounds", bounds_json},
                     {"note", kBoundsNote}},
                    "unsatisfiable within bounds " + bounds_text + "\n" + kBoundsNote, kNegative);
    }
    const ValidityVerdict v = decide_valid(logic, cs, f, bounds);
    if (const auto* c = std::get_if<Countermodel>(&v)) {
        return witness("countermodel", c->model, c->world, kNegative);
    }
    return emit(as_json,
                {{"verdict", "valid within bounds"}, {"bounds", bounds_json}, {"note", kBoundsNote}},
                "valid within bounds " + bounds_text + "\n" + kBoundsNote, kAffirmative);
}

struct OracleArgs {
    std::string model;
    std::string term;
    std::string formula;
    std::string world;
    std::uint32_t fuel = 64;
};

int run_oracle(const OracleArgs& args, bool as_json) {
    const FinitaryModel m = load_model(args.model);
    const Term t = parse_term(args.term);
    const Formula a = parse_formula(args.formula);
    const OracleResult r = saturation_oracle(logic_spec(m.logic), m.cs, m.base, m.r, t, a,
                                             world_of(m, args.world), args.fuel);
    const char* text = r == OracleResult::True    ? "true"
                       : r == OracleResult::False ? "false"
                                                  : "fuel-exhausted";
    return emit(as_json, {{"result", text}}, text,
                r == OracleResult::True ? kAffirmative : kNegative);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Justification logic toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Structured output");

    std::string parse_text;
    auto* parse = app.add_subcommand("parse", "Print a formula in canonical form");
    parse->add_option("formula", parse_text)->required();
    parse->add_flag("--json", as_json, "Structured output");

    std::string proof_path;
    auto* check = app.add_subcommand("check-proof", "Check a proof file");
    check->add_option("proof", proof_path)->required()->check(CLI::ExistingFile);
    check->add_flag("--json", as_json, "Structured output");

    std::string model_path;
    std::string world;
    std::string eval_text;
    auto* ev = app.add_subcommand("eval", "Evaluate a formula at a world of a model");
    ev->add_option("--model", model_path)->required()->check(CLI::ExistingFile);
    ev->add_option("--world", world)->required();
    ev->add_option("formula", eval_text)->required();
    ev->add_flag("--json", as_json, "Structured output");

    DecideArgs decide_args;
    auto* decide = app.add_subcommand("decide", "Bounded satisfiability or validity");
    decide->add_option("--logic", decide_args.logic, "J, JD, JT, J4, JD4 or LP")->required();
    decide->add_option("--cs", decide_args.cs, "'total' or a CS file")->capture_default_str();
    decide->add_option("--mode", decide_args.mode)
        ->check(CLI::IsMember({"sat", "valid"}))
        ->capture_default_str();
    decide->add_option("--max-worlds", decide_args.max_worlds, "Default 3");
    decide->add_option("--max-base", decide_args.max_base,
                       "Default: number of subterms, at most 6");
    decide->add_option("formula", decide_args.formula)->required();
    decide->add_flag("--json", as_json, "Structured output");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "Saturation oracle for one evidence query");
    oracle->add_option("--model", oracle_args.model)->required()->check(CLI::ExistingFile);
    oracle->add_option("--term", oracle_args.term)->required();
    oracle->add_option("--formula", oracle_args.formula)->required();
    oracle->add_option("--world", oracle_args.world)->required();
    oracle->add_option("--fuel", oracle_args.fuel)->check(CLI::PositiveNumber)->capture_default_str();
    oracle->add_flag("--json", as_json, "Structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    try {
        if (*parse) return run_parse(parse_text, as_json);
        if (*check) return run_check_proof(proof_path, as_json);
        if (*ev) return run_eval(model_path, world, eval_text, as_json);
        if (*decide) return run_decide(decide_args, as_json);
        if (*oracle) return run_oracle(oracle_args, as_json);
    } catch (const ParseError& e) {
        std::cerr << "jl: parse error at " << e.position() << ": " << e.what() << "\n";
    } catch (const FormatError& e) {
        std::cerr << "jl: " << e.what() << "\n";
    } catch (const UsageError& e) {
        std::cerr << "jl: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "jl: " << e.what() << "\n";
    }
    return kError;
}
