#include "jlogic/semantics.hpp"

#include <stdexcept>

namespace jlogic {

std::optional<WorldId> FinitaryModel::world_index(std::string_view name) const {
    for (std::size_t i = 0; i < worlds.size(); ++i) {
        if (worlds[i] == name) return static_cast<WorldId>(i);
    }
    return std::nullopt;
}

std::vector<std::string> validate_model(const FinitaryModel& m) {
    std::vector<std::string> out;
    const std::uint32_t n = m.world_count();
    if (n == 0) out.emplace_back("model has no worlds");
    for (std::size_t i = 0; i < m.worlds.size(); ++i) {
        for (std::size_t j = i + 1; j < m.worlds.size(); ++j) {
            if (m.worlds[i] == m.worlds[j]) out.push_back("duplicate world " + m.worlds[i]);
        }
    }
    auto name = [&](WorldId w) {
        return w < n ? m.worlds[w] : "#" + std::to_string(w);
    };
    for (const auto& [u, v] : m.r) {
        if (u >= n || v >= n) out.push_back("R: pair (" + name(u) + ", " + name(v) + ") leaves W");
    }
    for (const auto& triple : m.base) {
        if (triple.world >= n) out.push_back("base: unknown world " + name(triple.world));
    }
    for (const auto& [w, atom] : m.valuation) {
        if (w >= n) out.push_back("valuation: unknown world " + name(w));
        if (atom == 0) out.emplace_back("valuation: atom index 0");
    }
    for (const auto& e : validate_cs(m.cs, m.logic)) out.push_back("cs: " + e);
    if (!out.empty()) return out;

    const FrameConditions& frame = logic_spec(m.logic).frame;
    if (frame.reflexive) {
        for (WorldId w = 0; w < n; ++w) {
            if (!m.r.contains({w, w})) out.push_back("reflexive: " + name(w) + " does not see itself");
        }
    }
    if (frame.serial) {
        for (WorldId w = 0; w < n; ++w) {
            auto it = m.r.lower_bound({w, 0});
            if (it == m.r.end() || it->first != w) {
                out.push_back("serial: " + name(w) + " has no successor");
            }
        }
    }
    if (frame.transitive) {
        for (const auto& [u, v] : m.r) {
            for (auto it = m.r.lower_bound({v, 0}); it != m.r.end() && it->first == v; ++it) {
                if (!m.r.contains({u, it->second})) {
                    out.push_back("transitive: missing (" + name(u) + ", " + name(it->second) +
                                  ") from (" + name(u) + ", " + name(v) + ") and (" + name(v) +
                                  ", " + name(it->second) + ")");
                }
            }
        }
    }
    return out;
}

Evaluator::Evaluator(const FinitaryModel& m)
    : model_(m), spec_(logic_spec(m.logic)), successors_(m.world_count()) {
    for (const auto& [u, v] : m.r) {
        if (u < successors_.size()) successors_[u].push_back(v);
    }
    engines_.reserve(m.world_count());
    for (WorldId w = 0; w < m.world_count(); ++w) {
        engines_.emplace_back(spec_, m.cs, propagated_base(m.r, m.base, w, spec_.monotone_evidence));
    }
}

bool Evaluator::evidence(const Term& t, const Formula& a, WorldId w) {
    if (w >= engines_.size()) throw std::out_of_range("unknown world");
    return engines_[w].contains(t, a);
}

bool Evaluator::eval(WorldId w, const Formula& f) {
    if (w >= successors_.size()) throw std::out_of_range("unknown world");
    switch (f.kind()) {
        case Kind::Atom:
            return model_.valuation.contains({w, f.index()});
        case Kind::Not:
            return !eval(w, f.inner());
        case Kind::Implies:
            return !eval(w, f.left()) || eval(w, f.right());
        case Kind::Just:
            for (WorldId v : successors_[w]) {
                if (!eval(v, f.body())) return false;
            }
            return engines_[w].contains(f.term(), f.body());
        default:
            throw std::invalid_argument("eval: not a formula");
    }
}

bool eval(const FinitaryModel& m, WorldId w, const Formula& f) { return Evaluator(m).eval(w, f); }

bool valid_in_model(const FinitaryModel& m, const Formula& f) {
    Evaluator ev(m);
    for (WorldId w = 0; w < m.world_count(); ++w) {
        if (!ev.eval(w, f)) return false;
    }
    return true;
}

}  // namespace jlogic
