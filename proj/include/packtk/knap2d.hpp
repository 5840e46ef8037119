// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "packtk/classify.hpp"
#include "packtk/containers.hpp"
#include "packtk/lpack.hpp"

namespace packtk {

struct LcParameters {
  std::int64_t boundary_width = 0;  // N' in [0, N/2]; 0 means degenerate
  std::int64_t long_threshold = 0;  // ell in (N/2, N]
  bool degenerate = true;
};

struct Knap2dOptions {
  Rat eps = Rat(1, 3);
  std::int64_t layout_budget = 64;   // layouts evaluated per container search
  int k_max = 2;                     // containers per layout
  int size_cap = 10;                 // candidate sizes kept per axis (largest first)
  LayoutSolveOptions layout_solve;
  LpackPtasOptions lpack;
  ShrinkMap shrink;                  // threshold shrink map; default f(x) = x^2
  // brute-force switch for the cardinality pipeline
  std::int64_t bf_max_items = 6;
  std::int64_t bf_max_n = 12;
};

struct Knap2dResult {
  Packing packing;
  std::int64_t profit = 0;
  std::string branch;             // winning branch description
  LcParameters params;            // (N', ell) of the winning branch
  bool budget_exhausted = false;  // some container search hit the layout budget
  // run metadata: the classification thresholds selected for this instance
  // (shrink map f(x) = x^2 unless overridden in the options)
  Rat eps_large = Rat(0);
  Rat eps_small = Rat(0);
};

// L&C search: the degenerate (pure container) branch, a full-square L branch,
// and one boundary-L branch per guessed long threshold with N' = ceil(eps^2 N).
Knap2dResult solve_2dgk_lc(const KnapsackInstance& inst, const Knap2dOptions& opts = {});

// Cardinality pipeline: brute force below the size threshold, otherwise the
// best of the full-square L-packing and the two (1+eps)-reduced container
// searches, with large items pre-dropped.
Knap2dResult solve_2dgk_cardinality(const KnapsackInstance& inst, const Knap2dOptions& opts = {});

struct BruteForceBudget {
  std::int64_t max_items = 6;
  std::int64_t max_n = 12;
  std::int64_t max_nodes = 60'000'000;
};

// Exact optimum by branch-and-bound over left/bottom-justified positions
// (subset sums of item extents). Supports rotations.
Knap2dResult brute_force_2dgk(const KnapsackInstance& inst, const BruteForceBudget& budget = {});

}  // namespace packtk
