#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "jlogic/logics.hpp"
#include "jlogic/syntax.hpp"

namespace jlogic {

// c : A wrapped in n bang layers: F0 = c : A, F(k+1) = !^(k+1) c : Fk.
[[nodiscard]] Formula an_formula(std::uint32_t c, const Formula& a, std::uint32_t n);

struct AxiomStep {
    std::string scheme_id;
};

// Line numbers are 1-based; `minor` holds X and `major` holds X -> this line.
struct MpStep {
    std::size_t minor;
    std::size_t major;
};

struct AnStep {
    std::uint32_t constant;
    Formula base;
    std::uint32_t n;
};

using Justification = std::variant<AxiomStep, MpStep, AnStep>;

struct ProofLine {
    Formula formula;
    Justification justification;
};

struct Proof {
    LogicId logic;
    ConstantSpec cs;
    std::vector<ProofLine> lines;
};

struct LineDiagnostic {
    std::size_t line;  // 1-based; 0 for whole-proof problems
    std::string message;
};

// Empty result means the proof is accepted.
[[nodiscard]] std::vector<LineDiagnostic> check_proof(const Proof& p);

}  // namespace jlogic
