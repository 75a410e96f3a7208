#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "jlogic/evidence.hpp"
#include "jlogic/logics.hpp"
#include "jlogic/semantics.hpp"
#include "jlogic/syntax.hpp"

namespace jlogic {

// Number of AST nodes, term nodes included.
[[nodiscard]] std::uint32_t formula_size(const Formula& f);

struct SearchBounds {
    std::uint32_t max_worlds = 3;
    std::uint32_t max_base = 0;  // total number of base triples
    std::vector<Term> base_terms;
    std::vector<Formula> base_formulas;

    // max_worlds 3, max_base = |subterms(f)| capped at 6, pools from f.
    [[nodiscard]] static SearchBounds defaults_for(const Formula& f);
};

// Streams every finitary model within the bounds, in canonical order: world
// count ascending, then accessibility relation, then valuation, then base
// (by size, then lexicographically). R is enumerated as a bitmask over W x W
// and filtered by the logic's frame conditions; valuations range over
// W x atoms(f); base triples over the candidate pairs x W.
class ModelEnumerator {
public:
    ModelEnumerator(LogicId logic, ConstantSpec cs, const Formula& f, const SearchBounds& bounds);
    // Explicit candidate (term, formula) pairs instead of the bounds' pools.
    ModelEnumerator(LogicId logic, ConstantSpec cs, const Formula& f, std::uint32_t max_worlds,
                    std::uint32_t max_base, std::vector<EvidencePair> pairs);

    std::optional<FinitaryModel> next();

private:
    bool advance();
    bool advance_combination();
    bool advance_frame();
    void start_worlds();
    [[nodiscard]] FinitaryModel build() const;

    LogicId logic_;
    ConstantSpec cs_;
    std::vector<std::uint32_t> atoms_;
    std::uint32_t max_worlds_;
    std::uint32_t max_base_;
    std::vector<EvidencePair> pairs_;

    bool started_ = false;
    bool done_ = false;
    std::uint32_t n_ = 0;
    std::uint64_t frame_ = 0;
    std::uint64_t valuation_ = 0;
    std::vector<std::uint32_t> combination_;
};

struct Satisfiable {
    FinitaryModel model;
    WorldId world;
};

struct ExhaustedBounds {
    std::uint32_t max_worlds;
    std::uint32_t max_base;
};

using SatVerdict = std::variant<Satisfiable, ExhaustedBounds>;

struct ValidWithinBounds {
    std::uint32_t max_worlds;
    std::uint32_t max_base;
};

struct Countermodel {
    FinitaryModel model;
    WorldId world;
};

using ValidityVerdict = std::variant<ValidWithinBounds, Countermodel>;

// Candidate pairs that can influence the truth of `f`: a base pair (t, A)
// matters only if A can reach some justification subformula of `f` through
// the closure conditions. Dropping the others leaves every model's
// satisfaction of `f` unchanged. Pool order is preserved.
[[nodiscard]] std::vector<EvidencePair> relevant_pairs(LogicId logic, const ConstantSpec& cs,
                                                       const Formula& f,
                                                       const SearchBounds& bounds);

// First model of the canonical enumeration over the relevant candidate pairs
// in which `f` holds at some world (lowest world reported). The witness is
// re-checked with validate_model and eval before it is returned.
[[nodiscard]] SatVerdict decide_sat(LogicId logic, const ConstantSpec& cs, const Formula& f,
                                    const SearchBounds& bounds);

// decide_sat on the negation.
[[nodiscard]] ValidityVerdict decide_valid(LogicId logic, const ConstantSpec& cs, const Formula& f,
                                           const SearchBounds& bounds);

}  // namespace jlogic
