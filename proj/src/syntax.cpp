#include "jlogic/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <unordered_map>

namespace jlogic {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void require_index(std::uint32_t index, const char* what) {
    if (index == 0) throw std::invalid_argument(std::string(what) + " index must be >= 1");
}

void require_sort(const Scheme& s, Sort sort) {
    if (s.sort() != sort) throw std::invalid_argument("scheme child has the wrong sort");
}

}  // namespace

NodePtr make_node(Kind kind, std::uint32_t index, NodePtr left, NodePtr right) {
    std::size_t h = mix(static_cast<std::size_t>(kind) * 1315423911ULL, index);
    std::uint32_t size = 1;
    std::uint32_t bound = 0;
    if (kind == Kind::TermMeta || kind == Kind::FormulaMeta) bound = index + 1;
    if (left) {
        h = mix(h, left->hash);
        size += left->size;
        bound = std::max(bound, left->meta_bound);
    }
    if (right) {
        h = mix(h, right->hash);
        size += right->size;
        bound = std::max(bound, right->meta_bound);
    }
    return std::make_shared<const Node>(
        Node{kind, index, std::move(left), std::move(right), h, size, bound});
}

bool node_equal(const Node& a, const Node& b) {
    if (&a == &b) return true;
    if (a.hash != b.hash || a.kind != b.kind || a.index != b.index || a.size != b.size) return false;
    if ((a.left == nullptr) != (b.left == nullptr)) return false;
    if (a.left && !node_equal(*a.left, *b.left)) return false;
    if ((a.right == nullptr) != (b.right == nullptr)) return false;
    return !a.right || node_equal(*a.right, *b.right);
}

std::strong_ordering node_compare(const Node& a, const Node& b) {
    if (&a == &b) return std::strong_ordering::equal;
    if (auto c = a.size <=> b.size; c != 0) return c;
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.index <=> b.index; c != 0) return c;
    if (a.left && b.left) {
        if (auto c = node_compare(*a.left, *b.left); c != 0) return c;
    }
    if (a.right && b.right) return node_compare(*a.right, *b.right);
    return std::strong_ordering::equal;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

// --- Term -------------------------------------------------------------------

Term Term::constant(std::uint32_t index) {
    require_index(index, "constant");
    return Term(make_node(Kind::Constant, index));
}

Term Term::variable(std::uint32_t index) {
    require_index(index, "variable");
    return Term(make_node(Kind::Variable, index));
}

Term Term::app(const Term& left, const Term& right) {
    return Term(make_node(Kind::App, 0, left.node_, right.node_));
}

Term Term::sum(const Term& left, const Term& right) {
    return Term(make_node(Kind::Sum, 0, left.node_, right.node_));
}

Term Term::bang(const Term& inner) { return Term(make_node(Kind::Bang, 0, inner.node_)); }

Term Term::bang_tower(std::uint32_t constant, std::uint32_t depth) {
    Term t = Term::constant(constant);
    for (std::uint32_t i = 0; i < depth; ++i) t = bang(t);
    return t;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> Term::as_bang_tower() const {
    std::uint32_t depth = 0;
    const Node* n = node_.get();
    while (n->kind == Kind::Bang) {
        ++depth;
        n = n->left.get();
    }
    if (n->kind != Kind::Constant) return std::nullopt;
    return std::pair{n->index, depth};
}

// --- Formula ----------------------------------------------------------------

Formula Formula::atom(std::uint32_t index) {
    require_index(index, "atom");
    return Formula(make_node(Kind::Atom, index));
}

Formula Formula::negation(const Formula& inner) {
    return Formula(make_node(Kind::Not, 0, inner.node_));
}

Formula Formula::implies(const Formula& left, const Formula& right) {
    return Formula(make_node(Kind::Implies, 0, left.node_, right.node_));
}

Formula Formula::just(const Term& term, const Formula& body) {
    return Formula(make_node(Kind::Just, 0, term.node(), body.node_));
}

Formula Formula::falsum() {
    auto p1 = atom(1);
    return negation(implies(p1, p1));
}

// --- Scheme -----------------------------------------------------------------

Scheme Scheme::formula_meta(std::uint32_t id) { return Scheme(make_node(Kind::FormulaMeta, id)); }

Scheme Scheme::term_meta(std::uint32_t id) { return Scheme(make_node(Kind::TermMeta, id)); }

Scheme Scheme::rebuild(Kind kind, std::uint32_t index, const Scheme* left, const Scheme* right) {
    switch (kind) {
        case Kind::App:
        case Kind::Sum:
            require_sort(*left, Sort::Term);
            require_sort(*right, Sort::Term);
            break;
        case Kind::Bang:
            require_sort(*left, Sort::Term);
            break;
        case Kind::Not:
            require_sort(*left, Sort::Formula);
            break;
        case Kind::Implies:
            require_sort(*left, Sort::Formula);
            require_sort(*right, Sort::Formula);
            break;
        case Kind::Just:
            require_sort(*left, Sort::Term);
            require_sort(*right, Sort::Formula);
            break;
        default:
            break;
    }
    return Scheme(make_node(kind, index, left ? left->node_ : nullptr,
                            right ? right->node_ : nullptr));
}

Scheme Scheme::not_(const Scheme& inner) { return rebuild(Kind::Not, 0, &inner, nullptr); }

Scheme Scheme::implies(const Scheme& left, const Scheme& right) {
    return rebuild(Kind::Implies, 0, &left, &right);
}

Scheme Scheme::just(const Scheme& term, const Scheme& body) {
    return rebuild(Kind::Just, 0, &term, &body);
}

Scheme Scheme::bang(const Scheme& inner) { return rebuild(Kind::Bang, 0, &inner, nullptr); }

std::optional<Formula> Scheme::to_formula() const {
    if (!is_ground() || sort() != Sort::Formula) return std::nullopt;
    return Formula(node_);
}

std::optional<Term> Scheme::to_term() const {
    if (!is_ground() || sort() != Sort::Term) return std::nullopt;
    return Term(node_);
}

namespace {

// Rebuilds `n` bottom-up; `leaf` maps metavariable nodes. Ground subtrees are
// shared untouched.
NodePtr map_metas(const NodePtr& n, const std::function<NodePtr(const NodePtr&)>& leaf) {
    if (n->ground()) return n;
    if (n->kind == Kind::TermMeta || n->kind == Kind::FormulaMeta) return leaf(n);
    NodePtr l = n->left ? map_metas(n->left, leaf) : nullptr;
    NodePtr r = n->right ? map_metas(n->right, leaf) : nullptr;
    if (l == n->left && r == n->right) return n;
    return make_node(n->kind, n->index, std::move(l), std::move(r));
}

}  // namespace

Scheme Scheme::shifted(std::uint32_t offset) const {
    if (offset == 0) return *this;
    return Scheme(map_metas(node_, [offset](const NodePtr& m) {
        return make_node(m->kind, m->index + offset);
    }));
}

Scheme Scheme::canonical() const {
    std::map<MetaVar, std::uint32_t> renaming;
    std::uint32_t next_term = 0;
    std::uint32_t next_formula = 0;
    return Scheme(map_metas(node_, [&](const NodePtr& m) {
        MetaVar v{sort_of(m->kind), m->index};
        auto it = renaming.find(v);
        if (it == renaming.end()) {
            std::uint32_t id = v.sort == Sort::Term ? next_term++ : next_formula++;
            it = renaming.emplace(v, id).first;
        }
        return make_node(m->kind, it->second);
    }));
}

// --- Substitution -----------------------------------------------------------

void Substitution::bind(MetaVar var, Scheme value) {
    if (value.sort() != var.sort) throw std::invalid_argument("substitution sort mismatch");
    map_.insert_or_assign(var, std::move(value));
}

const Scheme* Substitution::find(MetaVar var) const {
    auto it = map_.find(var);
    return it == map_.end() ? nullptr : &it->second;
}

namespace {

void collect_metas(const Node& n, std::set<MetaVar>& out) {
    if (n.ground()) return;
    if (n.kind == Kind::TermMeta || n.kind == Kind::FormulaMeta) {
        out.insert({sort_of(n.kind), n.index});
        return;
    }
    if (n.left) collect_metas(*n.left, out);
    if (n.right) collect_metas(*n.right, out);
}

}  // namespace

Substitution Substitution::restricted_to(const Scheme& s) const {
    std::set<MetaVar> metas;
    collect_metas(*s.node(), metas);
    Substitution out;
    for (const auto& [k, v] : map_) {
        if (metas.contains(k)) out.map_.emplace(k, v);
    }
    return out;
}

Scheme apply_subst(const Substitution& sigma, const Scheme& s) {
    if (sigma.empty()) return s;
    return Scheme(map_metas(s.node(), [&](const NodePtr& m) {
        const Scheme* v = sigma.find({sort_of(m->kind), m->index});
        return v ? v->node() : m;
    }));
}

namespace {

bool match_into(const NodePtr& pattern, const NodePtr& ground,
                std::map<MetaVar, NodePtr>& bindings) {
    if (pattern->ground()) return node_equal(*pattern, *ground);
    if (pattern->kind == Kind::TermMeta || pattern->kind == Kind::FormulaMeta) {
        if (sort_of(ground->kind) != sort_of(pattern->kind)) return false;
        MetaVar v{sort_of(pattern->kind), pattern->index};
        auto [it, fresh] = bindings.emplace(v, ground);
        return fresh || node_equal(*it->second, *ground);
    }
    if (pattern->kind != ground->kind || pattern->index != ground->index) return false;
    if (pattern->left && !match_into(pattern->left, ground->left, bindings)) return false;
    return !pattern->right || match_into(pattern->right, ground->right, bindings);
}

}  // namespace

std::optional<Substitution> match_scheme(const Scheme& pattern, const Scheme& ground) {
    if (!ground.is_ground()) throw std::invalid_argument("match_scheme target must be ground");
    std::map<MetaVar, NodePtr> bindings;
    if (!match_into(pattern.node(), ground.node(), bindings)) return std::nullopt;
    Substitution sigma;
    for (auto& [k, v] : bindings) sigma.bind(k, Scheme(v));
    return sigma;
}

bool matches(const Scheme& pattern, const Scheme& ground) {
    std::map<MetaVar, NodePtr> bindings;
    return match_into(pattern.node(), ground.node(), bindings);
}

namespace {

class Unifier {
public:
    bool unify(const NodePtr& a, const NodePtr& b) {
        NodePtr x = walk(a);
        NodePtr y = walk(b);
        if (x == y) return true;
        if (x->ground() && y->ground()) return node_equal(*x, *y);
        if (is_meta(*x)) return bind(x, y);
        if (is_meta(*y)) return bind(y, x);
        if (x->kind != y->kind || x->index != y->index) return false;
        if (x->left && !unify(x->left, y->left)) return false;
        return !x->right || unify(x->right, y->right);
    }

    Substitution result() {
        Substitution sigma;
        for (const auto& [k, v] : bindings_) sigma.bind(k, Scheme(resolve(v)));
        return sigma;
    }

private:
    static bool is_meta(const Node& n) {
        return n.kind == Kind::TermMeta || n.kind == Kind::FormulaMeta;
    }

    NodePtr walk(NodePtr n) const {
        while (is_meta(*n)) {
            auto it = bindings_.find({sort_of(n->kind), n->index});
            if (it == bindings_.end()) break;
            n = it->second;
        }
        return n;
    }

    bool occurs(const MetaVar& v, const NodePtr& n) const {
        if (n->ground()) return false;
        NodePtr w = walk(n);
        if (is_meta(*w)) return MetaVar{sort_of(w->kind), w->index} == v;
        return (w->left && occurs(v, w->left)) || (w->right && occurs(v, w->right));
    }

    bool bind(const NodePtr& meta, const NodePtr& value) {
        if (is_meta(*value) && value->kind == meta->kind && value->index == meta->index) return true;
        if (sort_of(meta->kind) != sort_of(value->kind)) return false;
        MetaVar v{sort_of(meta->kind), meta->index};
        if (occurs(v, value)) return false;
        bindings_.emplace(v, value);
        return true;
    }

    NodePtr resolve(const NodePtr& n) const {
        return map_metas(n, [this](const NodePtr& m) {
            NodePtr w = walk(m);
            return w == m ? m : resolve(w);
        });
    }

    std::map<MetaVar, NodePtr> bindings_;
};

}  // namespace

std::optional<Substitution> unify(const Scheme& a, const Scheme& b) {
    if (a.sort() != b.sort()) return std::nullopt;
    Unifier u;
    if (!u.unify(a.node(), b.node())) return std::nullopt;
    return u.result();
}

// --- Parser -----------------------------------------------------------------

namespace {

enum class Tok {
    Atom,
    Constant,
    Variable,
    FormulaMeta,
    TermMeta,
    False,
    Not,
    Arrow,
    Iff,
    Colon,
    Bang,
    Star,
    Plus,
    And,
    Or,
    LParen,
    RParen,
    End,
};

struct Token {
    Tok kind;
    std::uint32_t value;  // index for atoms/constants/variables, name id for metas
    std::size_t pos;
};

const char* describe(Tok t) {
    switch (t) {
        case Tok::Colon: return "':'";
        case Tok::RParen: return "')'";
        case Tok::End: return "end of input";
        default: return "token";
    }
}

class Lexer {
public:
    Lexer(std::string_view text, bool schemes) : text_(text), schemes_(schemes) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        std::size_t i = 0;
        while (i < text_.size()) {
            char ch = text_[i];
            if (std::isspace(static_cast<unsigned char>(ch))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            if (std::isalpha(static_cast<unsigned char>(ch))) {
                while (i < text_.size() && std::isalpha(static_cast<unsigned char>(text_[i]))) ++i;
                std::string_view word = text_.substr(start, i - start);
                std::size_t digits_start = i;
                while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
                std::string_view digits = text_.substr(digits_start, i - digits_start);
                out.push_back(identifier(word, digits, start));
                continue;
            }
            auto sym = [&](Tok k, std::size_t len) {
                out.push_back({k, 0, start});
                i += len;
            };
            std::string_view rest = text_.substr(i);
            if (rest.starts_with("<->")) sym(Tok::Iff, 3);
            else if (rest.starts_with("->")) sym(Tok::Arrow, 2);
            else if (ch == '~') sym(Tok::Not, 1);
            else if (ch == ':') sym(Tok::Colon, 1);
            else if (ch == '!') sym(Tok::Bang, 1);
            else if (ch == '*') sym(Tok::Star, 1);
            else if (ch == '+') sym(Tok::Plus, 1);
            else if (ch == '&') sym(Tok::And, 1);
            else if (ch == '|') sym(Tok::Or, 1);
            else if (ch == '(') sym(Tok::LParen, 1);
            else if (ch == ')') sym(Tok::RParen, 1);
            else throw ParseError(std::string("unexpected character '") + ch + "'", start);
        }
        out.push_back({Tok::End, 0, text_.size()});
        return out;
    }

private:
    Token identifier(std::string_view word, std::string_view digits, std::size_t pos) {
        if (word == "false" && digits.empty()) return {Tok::False, 0, pos};
        if (word.size() == 1) {
            char w = word[0];
            if (w == 'p' || w == 'c' || w == 'x') {
                Tok kind = w == 'p' ? Tok::Atom : w == 'c' ? Tok::Constant : Tok::Variable;
                return {kind, parse_index(digits, pos), pos};
            }
            if (schemes_ && std::isupper(static_cast<unsigned char>(w))) {
                return {Tok::FormulaMeta, meta_id(Sort::Formula, word, digits), pos};
            }
            if (schemes_ && (w == 't' || w == 's')) {
                return {Tok::TermMeta, meta_id(Sort::Term, word, digits), pos};
            }
        }
        throw ParseError("unknown identifier '" + std::string(word) + std::string(digits) + "'",
                         pos);
    }

    static std::uint32_t parse_index(std::string_view digits, std::size_t pos) {
        if (digits.empty()) throw ParseError("missing index", pos);
        std::uint64_t v = 0;
        for (char d : digits) {
            v = v * 10 + static_cast<std::uint64_t>(d - '0');
            if (v > 0xffffffffULL) throw ParseError("index out of range", pos);
        }
        if (v == 0) throw ParseError("index 0 is not allowed", pos);
        return static_cast<std::uint32_t>(v);
    }

    std::uint32_t meta_id(Sort sort, std::string_view word, std::string_view digits) {
        auto& names = sort == Sort::Term ? term_names_ : formula_names_;
        std::string name = std::string(word) + std::string(digits);
        auto [it, fresh] = names.emplace(name, static_cast<std::uint32_t>(names.size()));
        return it->second;
    }

    std::string_view text_;
    bool schemes_;
    std::map<std::string, std::uint32_t> term_names_;
    std::map<std::string, std::uint32_t> formula_names_;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Scheme formula_to_end() {
        Scheme f = implication();
        expect(Tok::End);
        return f;
    }

    Scheme term_to_end() {
        Scheme t = term_sum();
        expect(Tok::End);
        return t;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    void expect(Tok k) {
        if (!accept(k)) {
            throw ParseError(std::string("expected ") + describe(k), peek().pos);
        }
    }

    static Scheme falsum() { return Scheme(Formula::falsum()); }
    static Scheme conj(const Scheme& a, const Scheme& b) {
        return Scheme::not_(Scheme::implies(a, Scheme::not_(b)));
    }

    Scheme implication() {
        Scheme lhs = disjunction();
        if (accept(Tok::Arrow)) return Scheme::implies(lhs, implication());
        if (accept(Tok::Iff)) {
            Scheme rhs = implication();
            return conj(Scheme::implies(lhs, rhs), Scheme::implies(rhs, lhs));
        }
        return lhs;
    }

    Scheme disjunction() {
        Scheme lhs = conjunction();
        while (accept(Tok::Or)) lhs = Scheme::implies(Scheme::not_(lhs), conjunction());
        return lhs;
    }

    Scheme conjunction() {
        Scheme lhs = prefix();
        while (accept(Tok::And)) lhs = conj(lhs, prefix());
        return lhs;
    }

    Scheme prefix() {
        const Token tok = peek();
        switch (tok.kind) {
            case Tok::Not:
                ++pos_;
                return Scheme::not_(prefix());
            case Tok::False:
                ++pos_;
                return falsum();
            case Tok::Atom:
                ++pos_;
                return Scheme(Formula::atom(tok.value));
            case Tok::FormulaMeta:
                ++pos_;
                return Scheme::formula_meta(tok.value);
            case Tok::Constant:
            case Tok::Variable:
            case Tok::TermMeta:
            case Tok::Bang: {
                Scheme t = term_sum();
                expect(Tok::Colon);
                return Scheme::just(t, prefix());
            }
            case Tok::LParen: {
                // A parenthesis opens either a term followed by ':' or a formula.
                std::size_t saved = pos_;
                try {
                    Scheme t = term_sum();
                    if (accept(Tok::Colon)) return Scheme::just(t, prefix());
                } catch (const ParseError&) {
                }
                pos_ = saved + 1;
                Scheme f = implication();
                expect(Tok::RParen);
                return f;
            }
            default:
                throw ParseError("expected formula", tok.pos);
        }
    }

    Scheme term_sum() {
        Scheme lhs = term_app();
        while (accept(Tok::Plus)) {
            Scheme rhs = term_app();
            lhs = Scheme::rebuild(Kind::Sum, 0, &lhs, &rhs);
        }
        return lhs;
    }

    Scheme term_app() {
        Scheme lhs = term_bang();
        while (accept(Tok::Star)) {
            Scheme rhs = term_bang();
            lhs = Scheme::rebuild(Kind::App, 0, &lhs, &rhs);
        }
        return lhs;
    }

    Scheme term_bang() {
        if (accept(Tok::Bang)) return Scheme::bang(term_bang());
        const Token tok = peek();
        switch (tok.kind) {
            case Tok::Constant:
                ++pos_;
                return Scheme(Term::constant(tok.value));
            case Tok::Variable:
                ++pos_;
                return Scheme(Term::variable(tok.value));
            case Tok::TermMeta:
                ++pos_;
                return Scheme::term_meta(tok.value);
            case Tok::LParen: {
                ++pos_;
                Scheme t = term_sum();
                expect(Tok::RParen);
                return t;
            }
            default:
                throw ParseError("expected term", tok.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
    return *Parser(Lexer(text, false).run()).formula_to_end().to_formula();
}

Term parse_term(std::string_view text) {
    return *Parser(Lexer(text, false).run()).term_to_end().to_term();
}

Scheme parse_scheme(std::string_view text) {
    return Parser(Lexer(text, true).run()).formula_to_end();
}

// --- Printer ----------------------------------------------------------------

namespace {

// Term contexts: 0 anywhere, 1 operand of '*', 2 operand of '!' or right of '*'.
void print_term_into(const Node& n, int ctx, std::string& out) {
    switch (n.kind) {
        case Kind::Constant:
            out += 'c';
            out += std::to_string(n.index);
            return;
        case Kind::Variable:
            out += 'x';
            out += std::to_string(n.index);
            return;
        case Kind::TermMeta:
            out += 't';
            out += std::to_string(n.index);
            return;
        case Kind::Bang:
            out += '!';
            print_term_into(*n.left, 2, out);
            return;
        case Kind::App:
            if (ctx > 1) out += '(';
            print_term_into(*n.left, 1, out);
            out += " * ";
            print_term_into(*n.right, 2, out);
            if (ctx > 1) out += ')';
            return;
        case Kind::Sum:
            if (ctx > 0) out += '(';
            print_term_into(*n.left, 0, out);
            out += " + ";
            print_term_into(*n.right, 1, out);
            if (ctx > 0) out += ')';
            return;
        default:
            throw std::invalid_argument("not a term node");
    }
}

// Formula contexts: 0 anywhere, 1 operand of a prefix operator or left of '->'.
void print_formula_into(const Node& n, int ctx, std::string& out) {
    switch (n.kind) {
        case Kind::Atom:
            out += 'p';
            out += std::to_string(n.index);
            return;
        case Kind::FormulaMeta:
            out += 'A';
            out += std::to_string(n.index);
            return;
        case Kind::Not:
            out += '~';
            print_formula_into(*n.left, 1, out);
            return;
        case Kind::Just:
            print_term_into(*n.left, 0, out);
            out += " : ";
            print_formula_into(*n.right, 1, out);
            return;
        case Kind::Implies:
            if (ctx > 0) out += '(';
            print_formula_into(*n.left, 1, out);
            out += " -> ";
            print_formula_into(*n.right, 0, out);
            if (ctx > 0) out += ')';
            return;
        default:
            throw std::invalid_argument("not a formula node");
    }
}

}  // namespace

std::string print_term(const Term& t) {
    std::string out;
    print_term_into(*t.node(), 0, out);
    return out;
}

std::string print_formula(const Formula& f) {
    std::string out;
    print_formula_into(*f.node(), 0, out);
    return out;
}

std::string print_scheme(const Scheme& s) {
    std::string out;
    if (s.sort() == Sort::Term) print_term_into(*s.node(), 0, out);
    else print_formula_into(*s.node(), 0, out);
    return out;
}

// --- Subexpressions ---------------------------------------------------------

namespace {

void collect_terms(const Term& t, std::set<Term>& out) {
    if (!out.insert(t).second) return;
    switch (t.kind()) {
        case Kind::App:
        case Kind::Sum:
            collect_terms(t.left(), out);
            collect_terms(t.right(), out);
            break;
        case Kind::Bang:
            collect_terms(t.inner(), out);
            break;
        default:
            break;
    }
}

void collect_formulas(const Formula& f, std::set<Formula>& formulas, std::set<Term>* terms) {
    if (!formulas.insert(f).second) return;
    switch (f.kind()) {
        case Kind::Not:
            collect_formulas(f.inner(), formulas, terms);
            break;
        case Kind::Implies:
            collect_formulas(f.left(), formulas, terms);
            collect_formulas(f.right(), formulas, terms);
            break;
        case Kind::Just:
            if (terms) collect_terms(f.term(), *terms);
            collect_formulas(f.body(), formulas, terms);
            break;
        default:
            break;
    }
}

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
    std::set<Formula> out;
    collect_formulas(f, out, nullptr);
    return {out.begin(), out.end()};
}

std::vector<Term> subterms(const Formula& f) {
    std::set<Formula> formulas;
    std::set<Term> terms;
    collect_formulas(f, formulas, &terms);
    return {terms.begin(), terms.end()};
}

std::vector<Term> subterms(const Term& t) {
    std::set<Term> out;
    collect_terms(t, out);
    return {out.begin(), out.end()};
}

std::vector<std::uint32_t> atoms(const Formula& f) {
    std::set<std::uint32_t> out;
    for (const Formula& g : subformulas(f)) {
        if (g.kind() == Kind::Atom) out.insert(g.index());
    }
    return {out.begin(), out.end()};
}

}  // namespace jlogic
