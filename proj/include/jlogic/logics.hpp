#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "jlogic/syntax.hpp"

namespace jlogic {

enum class LogicId : std::uint8_t { J, JD, JT, J4, JD4, LP };

inline constexpr LogicId kAllLogics[] = {LogicId::J,  LogicId::JD,  LogicId::JT,
                                         LogicId::J4, LogicId::JD4, LogicId::LP};

[[nodiscard]] std::string_view logic_name(LogicId id);
// Throws std::invalid_argument for an unknown name.
[[nodiscard]] LogicId parse_logic(std::string_view name);

struct FrameConditions {
    bool reflexive = false;
    bool transitive = false;
    bool serial = false;
    friend bool operator==(const FrameConditions&, const FrameConditions&) = default;
};

struct NamedScheme {
    std::string id;
    Scheme scheme;
};

struct LogicSpec {
    LogicId id;
    std::vector<NamedScheme> axiom_schemes;  // registry order
    FrameConditions frame;
    bool uses_j4;            // AN instead of AN!, j4 closure conditions
    bool monotone_evidence;  // evidence propagates along R

    [[nodiscard]] const Scheme* scheme(std::string_view scheme_id) const;
};

[[nodiscard]] const LogicSpec& logic_spec(LogicId id);

// First scheme in registry order that `f` instantiates.
[[nodiscard]] std::optional<std::string> is_axiom(LogicId id, const Formula& f);

// Every constant justifies every axiom scheme of the logic.
struct TotalCS {
    friend bool operator==(const TotalCS&, const TotalCS&) = default;
};

// Constant index -> scheme ids it justifies.
struct SchematicCS {
    std::map<std::uint32_t, std::vector<std::string>> map;
    friend bool operator==(const SchematicCS&, const SchematicCS&) = default;
};

struct FiniteCS {
    std::vector<std::pair<std::uint32_t, Formula>> entries;
    friend bool operator==(const FiniteCS&, const FiniteCS&) = default;
};

using ConstantSpec = std::variant<TotalCS, SchematicCS, FiniteCS>;

// Empty when `cs` is well formed for the logic: schematic entries name
// schemes of the logic, finite entries are axiom instances of it.
[[nodiscard]] std::vector<std::string> validate_cs(const ConstantSpec& cs, LogicId id);

[[nodiscard]] bool cs_contains(const ConstantSpec& cs, LogicId id, std::uint32_t c,
                               const Formula& f);
[[nodiscard]] bool cs_axiomatically_appropriate(const ConstantSpec& cs, LogicId id);
// Schemes justified by `c`; finite entries come back as ground schemes.
[[nodiscard]] std::vector<Scheme> cs_schemes_for(const ConstantSpec& cs, LogicId id,
                                                 std::uint32_t c);

}  // namespace jlogic
