#pragma once

#include <cstdint>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "jlogic/logics.hpp"
#include "jlogic/syntax.hpp"

namespace jlogic {

using WorldId = std::uint32_t;
using Relation = std::set<std::pair<WorldId, WorldId>>;

struct EvidenceTriple {
    Term term;
    Formula formula;
    WorldId world;
    friend bool operator==(const EvidenceTriple&, const EvidenceTriple&) = default;
};

using EvidenceBase = std::vector<EvidenceTriple>;
using EvidencePair = std::pair<Term, Formula>;

// Base pairs that hold at `w` before closure. With `monotone`, triples placed
// at any world that reaches `w` along R (one or more steps) count too.
[[nodiscard]] std::vector<EvidencePair> propagated_base(const Relation& r, const EvidenceBase& b,
                                                        WorldId w, bool monotone);

// Finite set of formula schemes whose ground instances are the formulas a
// term is evidence for. Members are canonical and pairwise distinct; a bare
// formula metavariable absorbs everything else.
class SchemeSet {
public:
    void insert(const Scheme& s);
    [[nodiscard]] bool contains(const Formula& f) const;
    [[nodiscard]] bool universal() const { return universal_; }
    // Insertion order.
    [[nodiscard]] const std::vector<Scheme>& members() const { return members_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }

private:
    std::vector<Scheme> members_;
    std::unordered_set<Scheme, NodeHash> index_;
    std::vector<Scheme> patterns_;  // non-ground members
    bool universal_ = false;
};

// Closure of a single world's base pairs under the world-local evidence
// conditions. Memoizes per term; not safe for concurrent use.
class EvidenceEngine {
public:
    EvidenceEngine(const LogicSpec& spec, const ConstantSpec& cs, std::vector<EvidencePair> base);

    const SchemeSet& schemes(const Term& t);
    bool contains(const Term& t, const Formula& a) { return schemes(t).contains(a); }

private:
    SchemeSet compute(const Term& t);

    const LogicSpec& spec_;
    ConstantSpec cs_;
    std::unordered_map<Term, std::vector<Formula>, NodeHash> base_;
    std::unordered_map<Term, SchemeSet, NodeHash> memo_;
    std::unordered_map<std::uint32_t, std::vector<Scheme>> cs_cache_;
};

[[nodiscard]] SchemeSet evidence_schemes(const LogicSpec& spec, const ConstantSpec& cs,
                                         const EvidenceBase& b, const Relation& r, const Term& t,
                                         WorldId w);

[[nodiscard]] bool evidence_contains(const LogicSpec& spec, const ConstantSpec& cs,
                                     const EvidenceBase& b, const Relation& r, const Term& t,
                                     const Formula& a, WorldId w);

enum class OracleResult : std::uint8_t { True, False, FuelExhausted };

// Forward chaining of the closure conditions over a finite universe: the
// subterms of `t` and of base terms, and the formulas reachable from the
// subformulas of `a` and of base formulas (plus constant specification
// instances built only from those). Iterates at most `fuel` rounds.
[[nodiscard]] OracleResult saturation_oracle(const LogicSpec& spec, const ConstantSpec& cs,
                                             const EvidenceBase& b, const Relation& r, const Term& t,
                                             const Formula& a, WorldId w, std::uint32_t fuel);

}  // namespace jlogic
