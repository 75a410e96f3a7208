#include "jlogic/decider.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace jlogic {

std::uint32_t formula_size(const Formula& f) { return f.size(); }

SearchBounds SearchBounds::defaults_for(const Formula& f) {
    SearchBounds b;
    b.base_terms = subterms(f);
    b.base_formulas = subformulas(f);
    b.max_worlds = 3;
    b.max_base = std::min<std::uint32_t>(static_cast<std::uint32_t>(b.base_terms.size()), 6);
    return b;
}

namespace {

std::vector<EvidencePair> pool_pairs(const SearchBounds& b) {
    std::vector<EvidencePair> out;
    for (const Term& t : b.base_terms) {
        for (const Formula& f : b.base_formulas) out.emplace_back(t, f);
    }
    return out;
}

std::uint64_t low_bits(std::uint32_t count) {
    return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

void check_widths(std::uint32_t n, std::size_t atom_count) {
    if (n * n > 62 || n * atom_count > 62) {
        throw std::invalid_argument("search bounds too large: " + std::to_string(n) + " worlds");
    }
}

bool frame_ok(std::uint64_t mask, std::uint32_t n, const FrameConditions& fc) {
    auto has = [&](std::uint32_t i, std::uint32_t j) { return (mask >> (i * n + j)) & 1U; };
    for (std::uint32_t i = 0; i < n; ++i) {
        if (fc.reflexive && !has(i, i)) return false;
        if (fc.serial && ((mask >> (i * n)) & low_bits(n)) == 0) return false;
    }
    if (fc.transitive) {
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t j = 0; j < n; ++j) {
                if (!has(i, j)) continue;
                for (std::uint32_t k = 0; k < n; ++k) {
                    if (has(j, k) && !has(i, k)) return false;
                }
            }
        }
    }
    return true;
}

std::string world_name(std::uint32_t w) { return "w" + std::to_string(w); }

FinitaryModel assemble(LogicId logic, const ConstantSpec& cs, std::uint32_t n, std::uint64_t frame,
                       std::uint64_t valuation, const std::vector<std::uint32_t>& atoms,
                       const std::vector<EvidencePair>& pairs,
                       const std::vector<std::uint32_t>& combination) {
    FinitaryModel m;
    m.logic = logic;
    m.cs = cs;
    for (std::uint32_t w = 0; w < n; ++w) m.worlds.push_back(world_name(w));
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if ((frame >> (i * n + j)) & 1U) m.r.insert({i, j});
        }
    }
    const auto a = static_cast<std::uint32_t>(atoms.size());
    for (std::uint32_t w = 0; w < n; ++w) {
        for (std::uint32_t k = 0; k < a; ++k) {
            if ((valuation >> (w * a + k)) & 1U) m.valuation.insert({w, atoms[k]});
        }
    }
    for (std::uint32_t idx : combination) {
        const auto& [t, f] = pairs[idx / n];
        m.base.push_back({t, f, idx % n});
    }
    return m;
}

// Next k-subset of {0..total-1} in lexicographic order, growing k when the
// current size is exhausted.
bool next_combination(std::vector<std::uint32_t>& comb, std::uint32_t total, std::uint32_t max_k) {
    const auto k = static_cast<std::uint32_t>(comb.size());
    for (std::uint32_t i = k; i-- > 0;) {
        if (comb[i] < total - k + i) {
            ++comb[i];
            for (std::uint32_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    if (k + 1 > std::min(max_k, total)) return false;
    comb.resize(k + 1);
    for (std::uint32_t j = 0; j <= k; ++j) comb[j] = j;
    return true;
}

}  // namespace

// --- ModelEnumerator --------------------------------------------------------

ModelEnumerator::ModelEnumerator(LogicId logic, ConstantSpec cs, const Formula& f,
                                 const SearchBounds& bounds)
    : ModelEnumerator(logic, std::move(cs), f, bounds.max_worlds, bounds.max_base,
                      pool_pairs(bounds)) {}

ModelEnumerator::ModelEnumerator(LogicId logic, ConstantSpec cs, const Formula& f,
                                 std::uint32_t max_worlds, std::uint32_t max_base,
                                 std::vector<EvidencePair> pairs)
    : logic_(logic),
      cs_(std::move(cs)),
      atoms_(atoms(f)),
      max_worlds_(max_worlds),
      max_base_(max_base),
      pairs_(std::move(pairs)) {
    if (max_worlds_ == 0) throw std::invalid_argument("max_worlds must be >= 1");
}

void ModelEnumerator::start_worlds() {
    check_widths(n_, atoms_.size());
    frame_ = 0;
    valuation_ = 0;
    combination_.clear();
    const FrameConditions& fc = logic_spec(logic_).frame;
    // The full relation always qualifies, so this terminates.
    while (!frame_ok(frame_, n_, fc)) ++frame_;
}

bool ModelEnumerator::advance_frame() {
    const FrameConditions& fc = logic_spec(logic_).frame;
    const std::uint64_t end = std::uint64_t{1} << (n_ * n_);
    while (++frame_ < end) {
        if (frame_ok(frame_, n_, fc)) return true;
    }
    return false;
}

bool ModelEnumerator::advance_combination() {
    const auto total = static_cast<std::uint32_t>(pairs_.size()) * n_;
    return next_combination(combination_, total, max_base_);
}

bool ModelEnumerator::advance() {
    if (advance_combination()) return true;
    combination_.clear();
    if (++valuation_ <= low_bits(n_ * static_cast<std::uint32_t>(atoms_.size()))) return true;
    valuation_ = 0;
    if (advance_frame()) return true;
    if (++n_ > max_worlds_) return false;
    start_worlds();
    return true;
}

FinitaryModel ModelEnumerator::build() const {
    return assemble(logic_, cs_, n_, frame_, valuation_, atoms_, pairs_, combination_);
}

std::optional<FinitaryModel> ModelEnumerator::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        n_ = 1;
        start_worlds();
        return build();
    }
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return build();
}

// --- Relevance --------------------------------------------------------------

namespace {

class DemandAnalysis {
public:
    DemandAnalysis(const LogicSpec& spec, const ConstantSpec& cs, std::vector<EvidencePair> pool)
        : spec_(spec), upper_(spec, cs, std::move(pool)) {}

    void demand(const Term& t, const Scheme& pattern) {
        push(t, pattern);
        while (!todo_.empty()) {
            auto [u, p] = todo_.front();
            todo_.pop_front();
            process(u, p);
        }
    }

    bool relevant(const Term& t, const Formula& a) const {
        if (wildcard_.contains(t)) return true;
        auto it = patterns_.find(t);
        if (it == patterns_.end()) return false;
        return std::any_of(it->second.begin(), it->second.end(),
                           [&](const Scheme& p) { return matches(p, a); });
    }

private:
    void push(const Term& t, const Scheme& pattern) {
        if (wildcard_.contains(t)) return;
        Scheme p = pattern.canonical();
        if (p.kind() == Kind::FormulaMeta) {
            wildcard_.insert(t);
            patterns_.erase(t);
        } else {
            auto& list = patterns_[t];
            if (std::find(list.begin(), list.end(), p) != list.end()) return;
            list.push_back(p);
        }
        todo_.emplace_back(t, p);
    }

    void process(const Term& t, const Scheme& p) {
        switch (t.kind()) {
            case Kind::Sum:
                push(t.left(), p);
                push(t.right(), p);
                break;
            case Kind::App: {
                push(t.left(), Scheme::implies(Scheme::formula_meta(p.meta_bound()), p));
                // The argument must supply an antecedent of some implication
                // the function term can ever justify whose consequent fits p.
                for (const Scheme& s1 : upper_.schemes(t.left()).members()) {
                    if (s1.kind() == Kind::FormulaMeta) {
                        push(t.right(), s1);
                        continue;
                    }
                    if (s1.kind() != Kind::Implies) continue;
                    if (auto sigma = unify(s1.right(), p.shifted(s1.meta_bound()))) {
                        push(t.right(), apply_subst(*sigma, s1.left()));
                    }
                }
                break;
            }
            case Kind::Bang:
                if (spec_.uses_j4) {
                    Scheme body = Scheme::formula_meta(p.meta_bound());
                    if (auto sigma = unify(p, Scheme::just(t.inner(), body))) {
                        push(t.inner(), apply_subst(*sigma, body));
                    }
                }
                break;
            default:
                break;
        }
    }

    const LogicSpec& spec_;
    // Evidence with every pool pair present: an upper bound for any base.
    EvidenceEngine upper_;
    std::map<Term, std::vector<Scheme>> patterns_;
    std::set<Term> wildcard_;
    std::deque<std::pair<Term, Scheme>> todo_;
};

std::vector<Formula> justification_subformulas(const Formula& f) {
    std::vector<Formula> out;
    for (const Formula& g : subformulas(f)) {
        if (g.kind() == Kind::Just) out.push_back(g);
    }
    return out;
}

}  // namespace

std::vector<EvidencePair> relevant_pairs(LogicId logic, const ConstantSpec& cs, const Formula& f,
                                         const SearchBounds& bounds) {
    const std::vector<EvidencePair> pool = pool_pairs(bounds);
    DemandAnalysis analysis(logic_spec(logic), cs, pool);
    for (const Formula& q : justification_subformulas(f)) analysis.demand(q.term(), q.body());
    std::vector<EvidencePair> out;
    for (const auto& [t, a] : pool) {
        if (analysis.relevant(t, a)) out.emplace_back(t, a);
    }
    return out;
}

// --- Search -----------------------------------------------------------------

namespace {

// `f` flattened into subformula order (children first) for evaluation with
// world bitmasks.
class CompiledFormula {
public:
    CompiledFormula(const Formula& f, const std::vector<std::uint32_t>& atom_list,
                    const std::vector<Formula>& queries) {
        const std::vector<Formula> subs = subformulas(f);
        std::unordered_map<Formula, std::uint32_t, NodeHash> slot;
        for (const Formula& g : subs) {
            Op op{g.kind(), 0, 0};
            switch (g.kind()) {
                case Kind::Atom:
                    op.a = static_cast<std::uint32_t>(
                        std::find(atom_list.begin(), atom_list.end(), g.index()) - atom_list.begin());
                    break;
                case Kind::Not:
                    op.a = slot.at(g.inner());
                    break;
                case Kind::Implies:
                    op.a = slot.at(g.left());
                    op.b = slot.at(g.right());
                    break;
                case Kind::Just:
                    op.a = slot.at(g.body());
                    op.b = static_cast<std::uint32_t>(
                        std::find(queries.begin(), queries.end(), g) - queries.begin());
                    break;
                default:
                    throw std::logic_error("unexpected node");
            }
            slot.emplace(g, static_cast<std::uint32_t>(ops_.size()));
            ops_.push_back(op);
        }
        masks_.resize(ops_.size());
    }

    // Worlds where f holds. `atom_masks[k]`: worlds where atom k is true;
    // `succ[w]`: successors of w; `profile[w]`: query bits with evidence at w.
    std::uint64_t eval(std::uint32_t n, const std::uint64_t* atom_masks, const std::uint64_t* succ,
                       const std::uint64_t* profile) {
        const std::uint64_t full = low_bits(n);
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            const Op& op = ops_[i];
            std::uint64_t m = 0;
            switch (op.kind) {
                case Kind::Atom: m = atom_masks[op.a]; break;
                case Kind::Not: m = full & ~masks_[op.a]; break;
                case Kind::Implies: m = full & (~masks_[op.a] | masks_[op.b]); break;
                default:
                    for (std::uint32_t w = 0; w < n; ++w) {
                        if ((succ[w] & ~masks_[op.a]) == 0 && ((profile[w] >> op.b) & 1U)) {
                            m |= std::uint64_t{1} << w;
                        }
                    }
                    break;
            }
            masks_[i] = m;
        }
        return masks_.back();
    }

private:
    struct Op {
        Kind kind;
        std::uint32_t a;
        std::uint32_t b;
    };
    std::vector<Op> ops_;
    std::vector<std::uint64_t> masks_;
};

// Query bitmask for the closure of a set of relevant pairs (as a bitmask).
class LocalProfiles {
public:
    LocalProfiles(const LogicSpec& spec, const ConstantSpec& cs,
                  const std::vector<EvidencePair>& pairs, const std::vector<Formula>& queries)
        : spec_(spec), cs_(cs), pairs_(pairs), queries_(queries) {}

    std::uint64_t get(std::uint64_t pair_mask) {
        if (auto it = cache_.find(pair_mask); it != cache_.end()) return it->second;
        std::vector<EvidencePair> base;
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            if ((pair_mask >> i) & 1U) base.push_back(pairs_[i]);
        }
        EvidenceEngine engine(spec_, cs_, std::move(base));
        std::uint64_t bits = 0;
        for (std::size_t q = 0; q < queries_.size(); ++q) {
            if (engine.contains(queries_[q].term(), queries_[q].body())) bits |= std::uint64_t{1} << q;
        }
        cache_.emplace(pair_mask, bits);
        return bits;
    }

private:
    const LogicSpec& spec_;
    const ConstantSpec& cs_;
    const std::vector<EvidencePair>& pairs_;
    const std::vector<Formula>& queries_;
    std::unordered_map<std::uint64_t, std::uint64_t> cache_;
};

struct ProfileKeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::size_t h = 0;
        for (std::uint64_t x : v) h = h * 1000003U ^ std::hash<std::uint64_t>{}(x);
        return h;
    }
};

// Distinct per-world profiles with the first base (in canonical order) that
// produces each, kept in order of first occurrence.
struct ProfileTable {
    std::vector<std::vector<std::uint64_t>> profiles;
    std::vector<std::size_t> first_combination;

    void add(std::vector<std::uint64_t> p, std::size_t combination) {
        if (seen_.emplace(p, combination).second) {
            profiles.push_back(std::move(p));
            first_combination.push_back(combination);
        }
    }

private:
    std::unordered_map<std::vector<std::uint64_t>, std::size_t, ProfileKeyHash> seen_;
};

constexpr std::size_t kMaxCombinations = 20'000'000;

}  // namespace

SatVerdict decide_sat(LogicId logic, const ConstantSpec& cs, const Formula& f,
                      const SearchBounds& bounds) {
    if (bounds.max_worlds == 0) throw std::invalid_argument("max_worlds must be >= 1");
    const LogicSpec& spec = logic_spec(logic);
    const std::vector<EvidencePair> pairs = relevant_pairs(logic, cs, f, bounds);
    const std::vector<Formula> queries = justification_subformulas(f);
    const std::vector<std::uint32_t> atom_list = atoms(f);
    if (pairs.size() > 64 || queries.size() > 64) {
        throw std::invalid_argument("search space too large: more than 64 candidate pairs");
    }
    CompiledFormula compiled(f, atom_list, queries);
    LocalProfiles local(spec, cs, pairs, queries);
    const auto atom_count = static_cast<std::uint32_t>(atom_list.size());

    for (std::uint32_t n = 1; n <= bounds.max_worlds; ++n) {
        check_widths(n, atom_count);
        const auto triples = static_cast<std::uint32_t>(pairs.size()) * n;

        // Per base, the pairs placed at each world.
        std::vector<std::vector<std::uint32_t>> combinations;
        std::vector<std::uint64_t> placed;
        std::vector<std::uint32_t> comb;
        do {
            if (combinations.size() >= kMaxCombinations) {
                throw std::invalid_argument("search space too large: too many candidate bases");
            }
            combinations.push_back(comb);
            std::vector<std::uint64_t> at(n, 0);
            for (std::uint32_t idx : comb) at[idx % n] |= std::uint64_t{1} << (idx / n);
            placed.insert(placed.end(), at.begin(), at.end());
        } while (next_combination(comb, triples, bounds.max_base));

        auto profiles_for = [&](const std::vector<std::uint64_t>& sources) {
            ProfileTable table;
            std::vector<std::uint64_t> p(n);
            for (std::size_t c = 0; c < combinations.size(); ++c) {
                const std::uint64_t* at = &placed[c * n];
                for (std::uint32_t w = 0; w < n; ++w) {
                    std::uint64_t mask = 0;
                    for (std::uint32_t u = 0; u < n; ++u) {
                        if ((sources[w] >> u) & 1U) mask |= at[u];
                    }
                    p[w] = local.get(mask);
                }
                table.add(p, c);
            }
            return table;
        };

        std::vector<std::uint64_t> self(n);
        for (std::uint32_t w = 0; w < n; ++w) self[w] = std::uint64_t{1} << w;
        std::optional<ProfileTable> shared;
        if (!spec.monotone_evidence) shared = profiles_for(self);

        const std::uint64_t frame_end = std::uint64_t{1} << (n * n);
        const std::uint64_t valuation_end = std::uint64_t{1} << (n * atom_count);
        std::vector<std::uint64_t> succ(n);
        std::vector<std::uint64_t> atom_masks(atom_count);
        for (std::uint64_t frame = 0; frame < frame_end; ++frame) {
            if (!frame_ok(frame, n, spec.frame)) continue;
            for (std::uint32_t w = 0; w < n; ++w) succ[w] = (frame >> (w * n)) & low_bits(n);

            std::optional<ProfileTable> own;
            if (spec.monotone_evidence) {
                // sources[w]: worlds reaching w in zero or more steps.
                std::vector<std::uint64_t> sources = self;
                for (bool grew = true; grew;) {
                    grew = false;
                    for (std::uint32_t u = 0; u < n; ++u) {
                        for (std::uint32_t v = 0; v < n; ++v) {
                            if (!((succ[u] >> v) & 1U)) continue;
                            std::uint64_t next = sources[v] | sources[u];
                            if (next != sources[v]) {
                                sources[v] = next;
                                grew = true;
                            }
                        }
                    }
                }
                own = profiles_for(sources);
            }
            const ProfileTable& table = spec.monotone_evidence ? *own : *shared;

            for (std::uint64_t valuation = 0; valuation < valuation_end; ++valuation) {
                for (std::uint32_t k = 0; k < atom_count; ++k) {
                    std::uint64_t m = 0;
                    for (std::uint32_t w = 0; w < n; ++w) {
                        if ((valuation >> (w * atom_count + k)) & 1U) m |= std::uint64_t{1} << w;
                    }
                    atom_masks[k] = m;
                }
                for (std::size_t i = 0; i < table.profiles.size(); ++i) {
                    const std::uint64_t worlds = compiled.eval(n, atom_masks.data(), succ.data(),
                                                               table.profiles[i].data());
                    if (worlds == 0) continue;
                    const auto world = static_cast<WorldId>(std::countr_zero(worlds));
                    FinitaryModel model = assemble(logic, cs, n, frame, valuation, atom_list, pairs,
                                                   combinations[table.first_combination[i]]);
                    if (!validate_model(model).empty() || !eval(model, world, f)) {
                        throw std::logic_error("decide_sat: witness failed re-verification");
                    }
                    return Satisfiable{std::move(model), world};
                }
            }
        }
    }
    return ExhaustedBounds{bounds.max_worlds, bounds.max_base};
}

ValidityVerdict decide_valid(LogicId logic, const ConstantSpec& cs, const Formula& f,
                             const SearchBounds& bounds) {
    SatVerdict v = decide_sat(logic, cs, Formula::negation(f), bounds);
    if (auto* sat = std::get_if<Satisfiable>(&v)) {
        return Countermodel{std::move(sat->model), sat->world};
    }
    return ValidWithinBounds{bounds.max_worlds, bounds.max_base};
}

}  // namespace jlogic
