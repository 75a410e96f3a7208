#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jlogic/evidence.hpp"
#include "jlogic/logics.hpp"
#include "jlogic/syntax.hpp"

namespace jlogic {

// A model given by its finite evidence base; the evidence relation is the
// minimal one generated by `base`. Atoms not in `valuation` are false.
struct FinitaryModel {
    LogicId logic = LogicId::J;
    ConstantSpec cs = TotalCS{};
    std::vector<std::string> worlds;
    Relation r;
    EvidenceBase base;
    std::set<std::pair<WorldId, std::uint32_t>> valuation;  // (world, atom index)

    [[nodiscard]] std::optional<WorldId> world_index(std::string_view name) const;
    [[nodiscard]] std::uint32_t world_count() const {
        return static_cast<std::uint32_t>(worlds.size());
    }
};

// Empty when the model is well formed and meets its logic's frame conditions.
[[nodiscard]] std::vector<std::string> validate_model(const FinitaryModel& m);

// Satisfaction on one model with evidence schemes memoized per (term, world).
// Not safe for concurrent use; create one per thread.
class Evaluator {
public:
    explicit Evaluator(const FinitaryModel& m);

    // Throws std::out_of_range for an unknown world.
    bool eval(WorldId w, const Formula& f);
    bool evidence(const Term& t, const Formula& a, WorldId w);

private:
    const FinitaryModel& model_;
    const LogicSpec& spec_;
    std::vector<std::vector<WorldId>> successors_;
    std::vector<EvidenceEngine> engines_;
};

[[nodiscard]] bool eval(const FinitaryModel& m, WorldId w, const Formula& f);
[[nodiscard]] bool valid_in_model(const FinitaryModel& m, const Formula& f);

}  // namespace jlogic
