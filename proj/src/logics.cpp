#include "jlogic/logics.hpp"

#include <array>
#include <stdexcept>

namespace jlogic {

namespace {

struct SchemeText {
    const char* id;
    const char* text;
};

// Propositional basis followed by the justification axioms.
constexpr SchemeText kSchemeTexts[] = {
    {"cl1", "A -> (B -> A)"},
    {"cl2", "(A -> (B -> C)) -> ((A -> B) -> (A -> C))"},
    {"cl3", "(~A -> ~B) -> (B -> A)"},
    {"j2", "t : (A -> B) -> (s : A -> t * s : B)"},
    {"j3", "t : A | s : A -> t + s : A"},
    {"jd", "t : false -> false"},
    {"jt", "t : A -> A"},
    {"j4", "t : A -> !t : t : A"},
};

LogicSpec build(LogicId id) {
    const bool jd = id == LogicId::JD || id == LogicId::JD4;
    const bool jt = id == LogicId::JT || id == LogicId::LP;
    const bool j4 = id == LogicId::J4 || id == LogicId::JD4 || id == LogicId::LP;

    LogicSpec spec{id, {}, {}, j4, j4};
    for (const auto& [sid, text] : kSchemeTexts) {
        std::string_view name = sid;
        if ((name == "jd" && !jd) || (name == "jt" && !jt) || (name == "j4" && !j4)) continue;
        spec.axiom_schemes.push_back({std::string(name), parse_scheme(text).canonical()});
    }
    spec.frame = {jt, j4, jd};
    return spec;
}

}  // namespace

std::string_view logic_name(LogicId id) {
    switch (id) {
        case LogicId::J: return "J";
        case LogicId::JD: return "JD";
        case LogicId::JT: return "JT";
        case LogicId::J4: return "J4";
        case LogicId::JD4: return "JD4";
        case LogicId::LP: return "LP";
    }
    return "?";
}

LogicId parse_logic(std::string_view name) {
    for (LogicId id : kAllLogics) {
        if (logic_name(id) == name) return id;
    }
    throw std::invalid_argument("unknown logic '" + std::string(name) + "'");
}

const Scheme* LogicSpec::scheme(std::string_view scheme_id) const {
    for (const auto& s : axiom_schemes) {
        if (s.id == scheme_id) return &s.scheme;
    }
    return nullptr;
}

const LogicSpec& logic_spec(LogicId id) {
    static const std::array<LogicSpec, 6> registry = {
        build(LogicId::J),  build(LogicId::JD),  build(LogicId::JT),
        build(LogicId::J4), build(LogicId::JD4), build(LogicId::LP),
    };
    return registry[static_cast<std::size_t>(id)];
}

std::optional<std::string> is_axiom(LogicId id, const Formula& f) {
    for (const auto& s : logic_spec(id).axiom_schemes) {
        if (matches(s.scheme, f)) return s.id;
    }
    return std::nullopt;
}

std::vector<std::string> validate_cs(const ConstantSpec& cs, LogicId id) {
    std::vector<std::string> errors;
    const LogicSpec& spec = logic_spec(id);
    if (const auto* sch = std::get_if<SchematicCS>(&cs)) {
        for (const auto& [c, ids] : sch->map) {
            if (c == 0) errors.push_back("constant index 0 is not allowed");
            for (const auto& sid : ids) {
                if (!spec.scheme(sid)) {
                    errors.push_back("c" + std::to_string(c) + ": scheme '" + sid +
                                     "' is not an axiom scheme of " +
                                     std::string(logic_name(id)));
                }
            }
        }
    } else if (const auto* fin = std::get_if<FiniteCS>(&cs)) {
        for (const auto& [c, f] : fin->entries) {
            if (c == 0) errors.push_back("constant index 0 is not allowed");
            if (!is_axiom(id, f)) {
                errors.push_back("c" + std::to_string(c) + ": '" + print_formula(f) +
                                 "' is not an axiom of " + std::string(logic_name(id)));
            }
        }
    }
    return errors;
}

bool cs_contains(const ConstantSpec& cs, LogicId id, std::uint32_t c, const Formula& f) {
    if (std::holds_alternative<TotalCS>(cs)) return is_axiom(id, f).has_value();
    if (const auto* fin = std::get_if<FiniteCS>(&cs)) {
        for (const auto& [k, g] : fin->entries) {
            if (k == c && g == f) return true;
        }
        return false;
    }
    for (const Scheme& s : cs_schemes_for(cs, id, c)) {
        if (matches(s, f)) return true;
    }
    return false;
}

bool cs_axiomatically_appropriate(const ConstantSpec& cs, LogicId id) {
    if (std::holds_alternative<TotalCS>(cs)) return true;
    if (std::holds_alternative<FiniteCS>(cs)) return false;
    const auto& map = std::get<SchematicCS>(cs).map;
    for (const auto& s : logic_spec(id).axiom_schemes) {
        bool covered = false;
        for (const auto& [c, ids] : map) {
            for (const auto& sid : ids) covered = covered || sid == s.id;
        }
        if (!covered) return false;
    }
    return true;
}

std::vector<Scheme> cs_schemes_for(const ConstantSpec& cs, LogicId id, std::uint32_t c) {
    const LogicSpec& spec = logic_spec(id);
    std::vector<Scheme> out;
    if (std::holds_alternative<TotalCS>(cs)) {
        for (const auto& s : spec.axiom_schemes) out.push_back(s.scheme);
    } else if (const auto* sch = std::get_if<SchematicCS>(&cs)) {
        auto it = sch->map.find(c);
        if (it != sch->map.end()) {
            for (const auto& sid : it->second) {
                if (const Scheme* s = spec.scheme(sid)) out.push_back(*s);
            }
        }
    } else {
        for (const auto& [k, f] : std::get<FiniteCS>(cs).entries) {
            if (k == c) out.emplace_back(f);
        }
    }
    return out;
}

}  // namespace jlogic
