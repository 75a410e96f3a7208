#include "jlogic/evidence.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace jlogic {

std::vector<EvidencePair> propagated_base(const Relation& r, const EvidenceBase& b, WorldId w,
                                          bool monotone) {
    std::set<WorldId> sources{w};
    if (monotone) {
        std::deque<WorldId> todo{w};
        while (!todo.empty()) {
            WorldId v = todo.front();
            todo.pop_front();
            for (const auto& [from, to] : r) {
                if (to == v && sources.insert(from).second) todo.push_back(from);
            }
        }
    }
    std::vector<EvidencePair> out;
    for (const auto& triple : b) {
        if (!sources.contains(triple.world)) continue;
        EvidencePair p{triple.term, triple.formula};
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    return out;
}

// --- SchemeSet --------------------------------------------------------------

void SchemeSet::insert(const Scheme& s) {
    if (universal_) return;
    Scheme c = s.canonical();
    if (c.kind() == Kind::FormulaMeta) {
        universal_ = true;
        members_ = {c};
        index_.clear();
        patterns_.clear();
        return;
    }
    if (!index_.insert(c).second) return;
    members_.push_back(c);
    if (!c.is_ground()) patterns_.push_back(c);
}

bool SchemeSet::contains(const Formula& f) const {
    if (universal_ || index_.contains(Scheme(f))) return true;
    for (const Scheme& p : patterns_) {
        if (matches(p, f)) return true;
    }
    return false;
}

// --- EvidenceEngine ---------------------------------------------------------

EvidenceEngine::EvidenceEngine(const LogicSpec& spec, const ConstantSpec& cs,
                               std::vector<EvidencePair> base)
    : spec_(spec), cs_(cs) {
    for (auto& [t, f] : base) base_[t].push_back(std::move(f));
}

const SchemeSet& EvidenceEngine::schemes(const Term& t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    SchemeSet s = compute(t);
    return memo_.emplace(t, std::move(s)).first->second;
}

SchemeSet EvidenceEngine::compute(const Term& t) {
    SchemeSet out;
    if (auto it = base_.find(t); it != base_.end()) {
        for (const Formula& f : it->second) out.insert(f);
    }
    auto cs_of = [this](std::uint32_t c) -> const std::vector<Scheme>& {
        auto it = cs_cache_.find(c);
        if (it == cs_cache_.end()) it = cs_cache_.emplace(c, cs_schemes_for(cs_, spec_.id, c)).first;
        return it->second;
    };

    switch (t.kind()) {
        case Kind::Constant:
            for (const Scheme& s : cs_of(t.index())) out.insert(s);
            break;
        case Kind::Sum:
            for (const Scheme& s : schemes(t.left()).members()) out.insert(s);
            for (const Scheme& s : schemes(t.right()).members()) out.insert(s);
            break;
        case Kind::App: {
            const SchemeSet& fun = schemes(t.left());
            const SchemeSet& arg = schemes(t.right());
            if (arg.empty()) break;
            for (const Scheme& s1 : fun.members()) {
                if (s1.kind() == Kind::FormulaMeta) {
                    // Anything can be refined to an implication, so anything follows.
                    out.insert(Scheme::formula_meta(0));
                    break;
                }
                if (s1.kind() != Kind::Implies) continue;
                for (const Scheme& s2 : arg.members()) {
                    auto sigma = unify(s1.left(), s2.shifted(s1.meta_bound()));
                    if (sigma) out.insert(apply_subst(*sigma, s1.right()));
                }
            }
            break;
        }
        case Kind::Bang:
            if (spec_.uses_j4) {
                for (const Scheme& s : schemes(t.inner()).members()) {
                    out.insert(Scheme::just(t.inner(), s));
                }
            } else if (auto tower = t.as_bang_tower()) {
                const auto [c, n] = *tower;
                for (const Scheme& x : cs_of(c)) {
                    Scheme f = Scheme::just(Term::constant(c), x);
                    for (std::uint32_t k = 1; k < n; ++k) {
                        f = Scheme::just(Term::bang_tower(c, k), f);
                    }
                    out.insert(f);
                }
            }
            break;
        default:
            break;
    }
    return out;
}

SchemeSet evidence_schemes(const LogicSpec& spec, const ConstantSpec& cs, const EvidenceBase& b,
                           const Relation& r, const Term& t, WorldId w) {
    EvidenceEngine engine(spec, cs, propagated_base(r, b, w, spec.monotone_evidence));
    return engine.schemes(t);
}

bool evidence_contains(const LogicSpec& spec, const ConstantSpec& cs, const EvidenceBase& b,
                       const Relation& r, const Term& t, const Formula& a, WorldId w) {
    EvidenceEngine engine(spec, cs, propagated_base(r, b, w, spec.monotone_evidence));
    return engine.contains(t, a);
}

// --- Saturation oracle ------------------------------------------------------

namespace {

void collect_metavars(const Scheme& s, std::vector<MetaVar>& out) {
    if (s.is_ground()) return;
    if (s.is_meta()) {
        if (std::find(out.begin(), out.end(), s.meta()) == out.end()) out.push_back(s.meta());
        return;
    }
    if (s.has_left()) collect_metavars(s.left(), out);
    if (s.has_right()) collect_metavars(s.right(), out);
}

// All ground instances of `s` with formula metas drawn from `formulas` and
// term metas from `terms`.
void ground_instances(const Scheme& s, const std::vector<Formula>& formulas,
                      const std::vector<Term>& terms, std::vector<Formula>& out) {
    std::vector<MetaVar> metas;
    collect_metavars(s, metas);
    std::vector<std::size_t> choice(metas.size(), 0);
    auto range = [&](const MetaVar& m) {
        return m.sort == Sort::Formula ? formulas.size() : terms.size();
    };
    for (const MetaVar& m : metas) {
        if (range(m) == 0) return;
    }
    while (true) {
        Substitution sigma;
        for (std::size_t i = 0; i < metas.size(); ++i) {
            if (metas[i].sort == Sort::Formula) sigma.bind(metas[i], formulas[choice[i]]);
            else sigma.bind(metas[i], terms[choice[i]]);
        }
        out.push_back(*apply_subst(sigma, s).to_formula());
        std::size_t i = 0;
        while (i < metas.size() && ++choice[i] == range(metas[i])) choice[i++] = 0;
        if (i == metas.size()) return;
    }
}

}  // namespace

OracleResult saturation_oracle(const LogicSpec& spec, const ConstantSpec& cs,
                               const EvidenceBase& b, const Relation& r, const Term& t,
                               const Formula& a, WorldId w, std::uint32_t fuel) {
    std::set<Term> term_set;
    std::set<Formula> formula_set;
    std::set<WorldId> worlds{w};
    for (const Term& u : subterms(t)) term_set.insert(u);
    for (const Formula& f : subformulas(a)) formula_set.insert(f);
    for (const auto& triple : b) {
        for (const Term& u : subterms(triple.term)) term_set.insert(u);
        for (const Formula& f : subformulas(triple.formula)) formula_set.insert(f);
        worlds.insert(triple.world);
    }
    for (const auto& [u, v] : r) {
        worlds.insert(u);
        worlds.insert(v);
    }
    const std::vector<Term> terms(term_set.begin(), term_set.end());
    const std::vector<Formula> formulas(formula_set.begin(), formula_set.end());
    // Term metas of CS schemes may take any term written inside the formulas.
    std::set<Term> fill_set = term_set;
    for (const Formula& f : formulas) {
        for (const Term& u : subterms(f)) fill_set.insert(u);
    }
    const std::vector<Term> fill_terms(fill_set.begin(), fill_set.end());

    std::map<std::uint32_t, std::vector<Formula>> cs_instances;
    for (const Term& u : terms) {
        auto tower = u.as_bang_tower();
        if (!tower || cs_instances.contains(tower->first)) continue;
        auto& list = cs_instances[tower->first];
        for (const Scheme& s : cs_schemes_for(cs, spec.id, tower->first)) {
            ground_instances(s, formulas, fill_terms, list);
        }
    }

    using FactSet = std::unordered_set<Formula, NodeHash>;
    std::map<std::pair<Term, WorldId>, FactSet> facts;
    for (const auto& triple : b) facts[{triple.term, triple.world}].insert(triple.formula);

    // Constants and, outside the j4 logics, bang towers over constants get
    // their CS facts once; nothing derived can add to them later.
    for (WorldId v : worlds) {
        for (const Term& u : terms) {
            if (u.kind() == Kind::Constant) {
                const auto& list = cs_instances[u.index()];
                facts[{u, v}].insert(list.begin(), list.end());
            } else if (u.kind() == Kind::Bang && !spec.uses_j4) {
                auto tower = u.as_bang_tower();
                if (!tower) continue;
                const auto [c, n] = *tower;
                auto& target = facts[{u, v}];
                for (const Formula& x : cs_instances[c]) {
                    Formula f = Formula::just(Term::constant(c), x);
                    for (std::uint32_t k = 1; k < n; ++k) f = Formula::just(Term::bang_tower(c, k), f);
                    target.insert(f);
                }
            }
        }
    }

    auto holds = [&] {
        auto it = facts.find({t, w});
        return it != facts.end() && it->second.contains(a);
    };
    const FactSet none;
    auto get = [&](const Term& u, WorldId v) -> const FactSet& {
        auto it = facts.find({u, v});
        return it == facts.end() ? none : it->second;
    };

    for (std::uint32_t round = 0; round < fuel; ++round) {
        if (holds()) return OracleResult::True;
        bool changed = false;
        auto add = [&](const Term& u, WorldId v, const Formula& f) {
            changed = facts[{u, v}].insert(f).second || changed;
        };
        for (WorldId v : worlds) {
            for (const Term& u : terms) {
                switch (u.kind()) {
                    case Kind::Sum:
                        for (const Formula& f : get(u.left(), v)) add(u, v, f);
                        for (const Formula& f : get(u.right(), v)) add(u, v, f);
                        break;
                    case Kind::App: {
                        const auto& args = get(u.right(), v);
                        if (args.empty()) break;
                        for (const Formula& f : get(u.left(), v)) {
                            if (f.kind() == Kind::Implies && args.contains(f.left())) {
                                add(u, v, f.right());
                            }
                        }
                        break;
                    }
                    case Kind::Bang:
                        if (spec.uses_j4) {
                            for (const Formula& f : get(u.inner(), v)) {
                                add(u, v, Formula::just(u.inner(), f));
                            }
                        }
                        break;
                    default:
                        break;
                }
            }
        }
        if (spec.monotone_evidence) {
            for (const auto& [from, to] : r) {
                if (from == to) continue;
                for (const Term& u : terms) {
                    for (const Formula& f : get(u, from)) add(u, to, f);
                }
            }
        }
        if (!changed) return holds() ? OracleResult::True : OracleResult::False;
    }
    return holds() ? OracleResult::True : OracleResult::FuelExhausted;
}

}  // namespace jlogic
