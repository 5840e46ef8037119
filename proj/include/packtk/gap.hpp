// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "packtk/core.hpp"

namespace packtk {

// Maximum Generalized Assignment with a constant number of bins.
// sizes[i][j] / profits[i][j] describe element i in bin j; an absent size
// means the pair is infeasible.
struct GapInstance {
  std::vector<std::int64_t> capacities;
  std::vector<std::vector<std::optional<std::int64_t>>> sizes;
  std::vector<std::vector<std::int64_t>> profits;

  std::size_t bins() const { return capacities.size(); }
  std::size_t elements() const { return sizes.size(); }
  void check() const;
};

struct GapAssignment {
  std::vector<int> bin_of;  // -1 = unassigned
  std::int64_t profit = 0;
  bool augmented = false;         // loads may exceed capacities by the used factor
  Rat augment_factor = Rat(1);    // loads are <= augment_factor * c_j
  bool guaranteed = false;        // PTAS (1-3eps) guarantee active
};

struct GapBudget {
  std::int64_t max_cells = 20'000'000;   // n * prod(c_j + 1) for the exact DP
  std::int64_t max_guesses = 2'000'000;  // enumerated X-sets in the PTAS
  std::int64_t max_bins = 4;             // k stays a small constant
};

// Exact pseudo-polynomial DP (profit table over capacity vectors) with
// backtracking. Throws BudgetError when the table exceeds the budget.
GapAssignment gap_exact_dp(const GapInstance& inst, const GapBudget& budget = {});

// Rounds sizes up to multiples of mu_j = eps*c_j/n and capacities to
// floor((1+eps)n/eps), then solves exactly. Profit >= unscaled optimum; per-bin
// loads <= (1+eps)c_j.
GapAssignment gap_resource_augmented(const GapInstance& inst, const Rat& eps,
                                     const GapBudget& budget = {});

// Guess-based PTAS: enumerates up to guess_cap pre-assigned elements per bin,
// then runs the augmented DP on capacities shrunk by (1-eps) so the result is
// feasible without augmentation. guaranteed is set when guess_cap covers the
// 1/eps^2 large-element bound.
GapAssignment gap_ptas(const GapInstance& inst, const Rat& eps, int guess_cap,
                       const GapBudget& budget = {});

std::vector<std::int64_t> gap_loads(const GapInstance& inst, const GapAssignment& a);

}  // namespace packtk
