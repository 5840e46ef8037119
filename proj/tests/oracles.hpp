// Test-only oracles, kept independent of the library's solver paths.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "packtk/core.hpp"
#include "packtk/gap.hpp"

namespace packtk::oracles {

// Exhaustive GAP: tries all (k+1)^n assignments.
std::int64_t gap_brute_force(const GapInstance& inst);

// Exhaustive L-packing over item subsets with the canonical compacted layout
// (horizontal sorted by non-increasing width bottom-up and pushed right,
// vertical symmetric).
std::int64_t lpack_brute_force(const LInstance& inst);

// Independent 2DGK optimum: DFS over ascending-area item order and descending
// integer grid positions; exists to cross-check the library oracle.
std::int64_t knapsack_second_opinion(const KnapsackInstance& inst, std::int64_t node_budget);

// Independent strip optimum: smallest H admitting an all-items placement,
// found by upward linear scan with a height-sorted DFS.
std::int64_t strip_second_opinion(const StripInstance& inst, std::int64_t node_budget);

// One-dimensional 0/1 knapsack (profit max under a capacity), used as the
// oracle for single-container layouts and horizontal-only L instances.
std::int64_t knapsack_1d(const std::vector<std::pair<std::int64_t, std::int64_t>>& size_profit,
                         std::int64_t capacity);

}  // namespace packtk::oracles
