// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "packtk/containers.hpp"
#include "packtk/steinberg.hpp"

namespace packtk {

struct StripContainerResult {
  bool feasible = false;
  Packing packing;
  std::int64_t height = 0;  // realized height (area containers grow by 1+2eps)
};

// Fixed-layout decision procedure: exact GAP over the layout's bins; if every
// item is assigned, realizes the packing with each area container enlarged by
// (1+2eps) in height and the containers above it shifted up.
StripContainerResult solve_strip_container(const StripInstance& inst, const Layout& layout,
                                           const Rat& eps, const GapBudget& budget = {});

struct StripPortfolioOptions {
  bool use_nfdh = true;
  bool use_ffdh = true;
  bool use_steinberg = true;
};

struct StripBestResult {
  Packing packing;
  std::int64_t height = 0;
  std::string method;
  std::vector<std::pair<std::string, std::int64_t>> heights;  // per enabled method
};

// Portfolio over the shelf packers and the Steinberg wrapper; minimum height,
// ties broken by method order.
StripBestResult solve_strip_best(const StripInstance& inst,
                                 const StripPortfolioOptions& opts = {});

struct StripOracleBudget {
  std::int64_t max_items = 6;
  std::int64_t max_w = 12;
  std::int64_t max_h = 12;
  std::int64_t max_nodes = 40'000'000;
};

struct StripOracleResult {
  std::int64_t height = 0;
  Packing packing;
};

// Exact minimum height: binary search on H with exhaustive placement over
// subset-sum position grids.
StripOracleResult brute_force_strip(const StripInstance& inst,
                                    const StripOracleBudget& budget = {});

std::int64_t strip_lower_bound(const StripInstance& inst);

}  // namespace packtk
