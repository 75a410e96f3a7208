#include "jlogic/proof.hpp"

#include <optional>

namespace jlogic {

Formula an_formula(std::uint32_t c, const Formula& a, std::uint32_t n) {
    Formula f = Formula::just(Term::constant(c), a);
    for (std::uint32_t k = 1; k <= n; ++k) f = Formula::just(Term::bang_tower(c, k), f);
    return f;
}

namespace {

std::optional<std::string> check_line(const Proof& p, std::size_t number, const ProofLine& line) {
    const LogicSpec& spec = logic_spec(p.logic);
    if (const auto* ax = std::get_if<AxiomStep>(&line.justification)) {
        const Scheme* s = spec.scheme(ax->scheme_id);
        if (!s) {
            return "unknown scheme '" + ax->scheme_id + "' for " +
                   std::string(logic_name(p.logic));
        }
        if (!matches(*s, line.formula)) return "not an instance of " + ax->scheme_id;
        return std::nullopt;
    }
    if (const auto* mp = std::get_if<MpStep>(&line.justification)) {
        for (std::size_t ref : {mp->minor, mp->major}) {
            if (ref == 0) return std::string("line reference 0 is invalid");
            if (ref >= number) return std::string("forward reference");
        }
        const Formula& minor = p.lines[mp->minor - 1].formula;
        const Formula& major = p.lines[mp->major - 1].formula;
        if (major.kind() != Kind::Implies || !(major.left() == minor)) {
            return "line " + std::to_string(mp->major) + " is not an implication from line " +
                   std::to_string(mp->minor);
        }
        if (!(major.right() == line.formula)) {
            return "modus ponens yields '" + print_formula(major.right()) + "'";
        }
        return std::nullopt;
    }
    const auto& an = std::get<AnStep>(line.justification);
    if (an.constant == 0) return std::string("constant index 0 is invalid");
    if (spec.uses_j4 && an.n != 0) {
        return std::string("AN with n > 0 is not available in ") +
               std::string(logic_name(p.logic));
    }
    if (!cs_contains(p.cs, p.logic, an.constant, an.base)) {
        return "c" + std::to_string(an.constant) + " : " + print_formula(an.base) +
               " is not in the constant specification";
    }
    if (!(an_formula(an.constant, an.base, an.n) == line.formula)) {
        return "formula does not match the AN conclusion '" +
               print_formula(an_formula(an.constant, an.base, an.n)) + "'";
    }
    return std::nullopt;
}

}  // namespace

std::vector<LineDiagnostic> check_proof(const Proof& p) {
    std::vector<LineDiagnostic> out;
    if (p.lines.empty()) {
        out.push_back({0, "proof has no lines"});
        return out;
    }
    for (const auto& e : validate_cs(p.cs, p.logic)) out.push_back({0, e});
    for (std::size_t i = 0; i < p.lines.size(); ++i) {
        if (auto err = check_line(p, i + 1, p.lines[i])) out.push_back({i + 1, *err});
    }
    return out;
}

}  // namespace jlogic
