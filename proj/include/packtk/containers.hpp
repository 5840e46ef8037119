// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "packtk/gap.hpp"

namespace packtk {

enum class ContainerKind { Horizontal, Vertical, Area };

struct Container {
  ContainerKind kind = ContainerKind::Horizontal;
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t w = 0;
  std::int64_t h = 0;
  std::optional<Rat> eps;  // area granularity override; solver eps otherwise
};

struct Layout {
  std::vector<Container> containers;
};

// P^(k) = { p_1 + ... + p_l + i * p_{l+1} : p_j in P, l <= k, 0 <= i <= n }.
struct CandidateSizeSet {
  std::vector<std::int64_t> base;
  int k = 0;
  std::int64_t n = 0;
  std::vector<std::int64_t> values;  // deduplicated, sorted
};

struct CandidateBudget {
  std::int64_t max_values = 2'000'000;
};

// Exact expansion of the candidate-size definition, pruned to [0, limit]
// (limit < 0 disables pruning... callers typically pass the region side).
CandidateSizeSet expand_candidate_set(const std::vector<std::int64_t>& base, int k,
                                      std::int64_t n, std::int64_t limit = -1,
                                      const CandidateBudget& budget = {});

std::vector<std::int64_t> widths_of(const std::vector<Item>& items);
std::vector<std::int64_t> heights_of(const std::vector<Item>& items);

struct AreaPackResult {
  Packing packing;  // coordinates relative to the container origin
  std::vector<std::string> dropped_ids;
  std::int64_t packed_profit = 0;
};

// Greedy profit/area selection to area <= (1-2eps) a(C) followed by NFDH.
// Packs profit >= (1-3eps) p(items); packs everything when
// a(items) <= (1-2eps) a(C).
AreaPackResult pack_area_container(const std::vector<Item>& items, const Container& c,
                                   const Rat& eps);

struct RoundedContainer {
  Container container;            // shrunk dimensions (position preserved)
  std::vector<Item> retained;
  std::vector<Item> dropped;
};

// Container rounding: horizontal/vertical keeps profit >= (1-eps)p with the
// new height (resp. width) in HEIGHTS^(k); area containers shrink to multiples
// of the max item sides with profit >= (1-3eps)p and eps/(1-eps)-small
// residents. k must be >= 1/eps for the knapsack case.
RoundedContainer round_container(const Container& c, const std::vector<Item>& assigned,
                                 const Rat& eps, int k);

struct LayoutSolveOptions {
  Rat gap_eps = Rat(1, 3);
  int guess_cap = 1;
  GapBudget gap_budget;
};

struct LayoutSolveResult {
  Packing packing;
  std::int64_t profit = 0;
  bool all_assigned = false;  // exact path: every instance item got a bin
  bool guaranteed = false;
};

// Reduces the layout to a generalized-assignment instance
// (horizontal bin: capacity = height, element size = item height when the
// width fits; vertical symmetric; area bin: capacity = area under
// eps-smallness; rotation enters by taking the better orientation per bin)
// and realizes the assignment geometrically.
LayoutSolveResult solve_for_layout(const KnapsackInstance& inst, const Layout& layout,
                                   const Rat& eps, const LayoutSolveOptions& opts = {});

// Same reduction solved by the exact pseudo-polynomial DP.
LayoutSolveResult solve_for_layout_exact(const KnapsackInstance& inst, const Layout& layout,
                                         const Rat& eps, const GapBudget& budget = {});

// Raw exact assignment for callers that realize the geometry themselves
// (the strip decision procedure re-places it inside enlarged containers).
struct LayoutAssignment {
  std::vector<int> bin_of;                  // per item, -1 unassigned
  std::vector<std::vector<bool>> rotated;   // [item][bin]
  bool all_assigned = false;
};
LayoutAssignment assign_for_layout_exact(const KnapsackInstance& inst, const Layout& layout,
                                         const Rat& eps, const GapBudget& budget = {});

struct EnumerateOptions {
  std::int64_t max_layouts = 500'000;
  bool truncate = false;  // return the prefix instead of throwing past the budget
  std::vector<ContainerKind> kinds = {ContainerKind::Horizontal, ContainerKind::Vertical,
                                      ContainerKind::Area};
};

struct EnumerationResult {
  std::vector<Layout> layouts;
  bool truncated = false;
};

// All layouts of at most k_max containers positioned as bottom-left-justified
// guillotine stackings, sizes drawn from widths x heights, deduplicated,
// deterministic order (larger sizes first). Throws BudgetError past
// max_layouts unless opts.truncate asks for the prefix.
EnumerationResult enumerate_layouts(std::int64_t region_w, std::int64_t region_h, int k_max,
                                    const std::vector<std::int64_t>& widths,
                                    const std::vector<std::int64_t>& heights,
                                    const EnumerateOptions& opts = {});

}  // namespace packtk
