#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jlogic {

// Every node of a justification term, a formula, or a scheme over them.
// Kinds up to TermMeta are term-sorted, the rest formula-sorted.
enum class Kind : std::uint8_t {
    Constant,
    Variable,
    App,
    Sum,
    Bang,
    TermMeta,
    Atom,
    Not,
    Implies,
    Just,
    FormulaMeta,
};

enum class Sort : std::uint8_t { Term, Formula };

[[nodiscard]] constexpr Sort sort_of(Kind k) {
    return k <= Kind::TermMeta ? Sort::Term : Sort::Formula;
}

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Immutable tree node. Hash, size and groundness are computed once at
// construction so equality and ordering are cheap on mismatches.
struct Node {
    Kind kind;
    std::uint32_t index;  // constant/variable/atom index or metavariable id
    NodePtr left;         // App/Sum/Implies left, Bang/Not inner, Just term
    NodePtr right;        // App/Sum/Implies right, Just body
    std::size_t hash;
    std::uint32_t size;
    std::uint32_t meta_bound;  // 1 + largest metavariable id, 0 if ground

    [[nodiscard]] bool ground() const { return meta_bound == 0; }
};

NodePtr make_node(Kind kind, std::uint32_t index, NodePtr left = nullptr, NodePtr right = nullptr);

bool node_equal(const Node& a, const Node& b);
// Total order: by size, then kind, then index, then children left to right.
std::strong_ordering node_compare(const Node& a, const Node& b);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class Scheme;

// A ground justification term.
class Term {
public:
    static Term constant(std::uint32_t index);
    static Term variable(std::uint32_t index);
    static Term app(const Term& left, const Term& right);
    static Term sum(const Term& left, const Term& right);
    static Term bang(const Term& inner);
    // !...!c with `depth` bangs.
    static Term bang_tower(std::uint32_t constant, std::uint32_t depth);

    [[nodiscard]] Kind kind() const { return node_->kind; }
    [[nodiscard]] std::uint32_t index() const { return node_->index; }
    [[nodiscard]] Term left() const { return Term(node_->left); }
    [[nodiscard]] Term right() const { return Term(node_->right); }
    [[nodiscard]] Term inner() const { return Term(node_->left); }
    [[nodiscard]] std::uint32_t size() const { return node_->size; }
    [[nodiscard]] std::size_t hash() const { return node_->hash; }
    [[nodiscard]] const NodePtr& node() const { return node_; }

    // If this term is !^n c with n >= 0, returns (c, n).
    [[nodiscard]] std::optional<std::pair<std::uint32_t, std::uint32_t>> as_bang_tower() const;

    friend bool operator==(const Term& a, const Term& b) { return node_equal(*a.node_, *b.node_); }
    friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
        return node_compare(*a.node_, *b.node_);
    }

private:
    friend class Scheme;
    friend class Formula;
    explicit Term(NodePtr node) : node_(std::move(node)) {}
    NodePtr node_;
};

// A ground formula.
class Formula {
public:
    static Formula atom(std::uint32_t index);
    static Formula negation(const Formula& inner);
    static Formula implies(const Formula& left, const Formula& right);
    static Formula just(const Term& term, const Formula& body);
    // ~(p1 -> p1)
    static Formula falsum();

    [[nodiscard]] Kind kind() const { return node_->kind; }
    [[nodiscard]] std::uint32_t index() const { return node_->index; }
    [[nodiscard]] Formula inner() const { return Formula(node_->left); }
    [[nodiscard]] Formula left() const { return Formula(node_->left); }
    [[nodiscard]] Formula right() const { return Formula(node_->right); }
    [[nodiscard]] Term term() const { return Term(node_->left); }
    [[nodiscard]] Formula body() const { return Formula(node_->right); }
    [[nodiscard]] std::uint32_t size() const { return node_->size; }
    [[nodiscard]] std::size_t hash() const { return node_->hash; }
    [[nodiscard]] const NodePtr& node() const { return node_; }

    friend bool operator==(const Formula& a, const Formula& b) {
        return node_equal(*a.node_, *b.node_);
    }
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
        return node_compare(*a.node_, *b.node_);
    }

private:
    friend class Scheme;
    explicit Formula(NodePtr node) : node_(std::move(node)) {}
    NodePtr node_;
};

struct MetaVar {
    Sort sort;
    std::uint32_t id;
    friend auto operator<=>(const MetaVar&, const MetaVar&) = default;
};

// A term or formula pattern that may contain metavariables of both sorts.
class Scheme {
public:
    static Scheme formula_meta(std::uint32_t id);
    static Scheme term_meta(std::uint32_t id);
    // Generic constructor; children must have the sorts `kind` requires.
    static Scheme rebuild(Kind kind, std::uint32_t index, const Scheme* left,
                          const Scheme* right);
    static Scheme not_(const Scheme& inner);
    static Scheme implies(const Scheme& left, const Scheme& right);
    static Scheme just(const Scheme& term, const Scheme& body);
    static Scheme bang(const Scheme& inner);

    Scheme(const Formula& f) : node_(f.node()) {}  // NOLINT(google-explicit-constructor)
    Scheme(const Term& t) : node_(t.node()) {}     // NOLINT(google-explicit-constructor)
    explicit Scheme(NodePtr node) : node_(std::move(node)) {}

    [[nodiscard]] Kind kind() const { return node_->kind; }
    [[nodiscard]] Sort sort() const { return sort_of(node_->kind); }
    [[nodiscard]] std::uint32_t index() const { return node_->index; }
    [[nodiscard]] bool is_meta() const {
        return node_->kind == Kind::TermMeta || node_->kind == Kind::FormulaMeta;
    }
    [[nodiscard]] MetaVar meta() const { return {sort(), node_->index}; }
    [[nodiscard]] bool has_left() const { return node_->left != nullptr; }
    [[nodiscard]] bool has_right() const { return node_->right != nullptr; }
    [[nodiscard]] Scheme left() const { return Scheme(node_->left); }
    [[nodiscard]] Scheme right() const { return Scheme(node_->right); }
    [[nodiscard]] bool is_ground() const { return node_->ground(); }
    // 1 + the largest metavariable id occurring, 0 when ground.
    [[nodiscard]] std::uint32_t meta_bound() const { return node_->meta_bound; }
    [[nodiscard]] std::size_t hash() const { return node_->hash; }
    [[nodiscard]] const NodePtr& node() const { return node_; }

    [[nodiscard]] std::optional<Formula> to_formula() const;
    [[nodiscard]] std::optional<Term> to_term() const;

    // Adds `offset` to every metavariable id.
    [[nodiscard]] Scheme shifted(std::uint32_t offset) const;
    // Renumbers metavariables 0, 1, ... in order of first occurrence, so
    // alpha-equivalent schemes become structurally equal.
    [[nodiscard]] Scheme canonical() const;

    friend bool operator==(const Scheme& a, const Scheme& b) {
        return node_equal(*a.node_, *b.node_);
    }
    friend std::strong_ordering operator<=>(const Scheme& a, const Scheme& b) {
        return node_compare(*a.node_, *b.node_);
    }

private:
    NodePtr node_;
};

struct NodeHash {
    template <class T>
    std::size_t operator()(const T& x) const {
        return x.hash();
    }
};

class Substitution {
public:
    Substitution() = default;

    // Sort-checked; throws std::invalid_argument on a sort mismatch.
    void bind(MetaVar var, Scheme value);
    [[nodiscard]] const Scheme* find(MetaVar var) const;
    [[nodiscard]] bool empty() const { return map_.empty(); }
    [[nodiscard]] std::size_t size() const { return map_.size(); }
    [[nodiscard]] const std::map<MetaVar, Scheme>& bindings() const { return map_; }
    // Keeps only bindings for metavariables of `s`.
    [[nodiscard]] Substitution restricted_to(const Scheme& s) const;

    friend bool operator==(const Substitution&, const Substitution&) = default;

private:
    std::map<MetaVar, Scheme> map_;
};

// Simultaneous replacement of bound metavariables.
[[nodiscard]] Scheme apply_subst(const Substitution& sigma, const Scheme& s);

// One-way matching of a pattern against a ground formula or term.
[[nodiscard]] std::optional<Substitution> match_scheme(const Scheme& pattern, const Scheme& ground);
[[nodiscard]] bool matches(const Scheme& pattern, const Scheme& ground);

// Most general unifier with occurs check. The result is idempotent. Callers
// are responsible for renaming apart when the two sides must not share
// metavariables.
[[nodiscard]] std::optional<Substitution> unify(const Scheme& a, const Scheme& b);

[[nodiscard]] Formula parse_formula(std::string_view text);
[[nodiscard]] Term parse_term(std::string_view text);
// Formula grammar extended with metavariables: formula metas `A`..`Z`
// (optionally followed by digits), term metas `s`, `t` (likewise).
// Identical names denote the same metavariable.
[[nodiscard]] Scheme parse_scheme(std::string_view text);

[[nodiscard]] std::string print_term(const Term& t);
[[nodiscard]] std::string print_formula(const Formula& f);
// Metavariables print as `A<id>` and `t<id>`.
[[nodiscard]] std::string print_scheme(const Scheme& s);

// Sorted, duplicate free.
[[nodiscard]] std::vector<Formula> subformulas(const Formula& f);
[[nodiscard]] std::vector<Term> subterms(const Formula& f);
[[nodiscard]] std::vector<Term> subterms(const Term& t);
[[nodiscard]] std::vector<std::uint32_t> atoms(const Formula& f);

}  // namespace jlogic
