// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "packtk/core.hpp"

namespace packtk {

// Candidate coordinate sets for the restricted L-packing DP. Values are exact
// rationals with denominators dividing 2n; built per level r from the
// recursive definition, pruned to [0, N], 0 adjoined.
struct CandidateCoords {
  std::vector<Rat> tops;    // T^r for horizontal items
  std::vector<Rat> rights;  // R^r for vertical items
  int r_hor = 0;
  int r_ver = 0;
};

struct LpackBudget {
  std::int64_t max_coords = 250'000;        // per-level candidate values
  std::int64_t max_dp_states = 20'000'000;  // |T|*|R|*(n_h+1)*(n_v+1), ~9B each
};

// T^1 = { a*h_j/(2n) : j horizontal, 1 <= a <= 4n^2 }, and recursively
// T^r = { a*h_j/2 + sum of <= 1/eps - 1 heights + sum of <= 1/eps values of
// T^(r-1) : 0 <= a <= 2n-1 }, all pruned to <= N. eps snaps down to
// 1/ceil(1/eps); n is the full item count of the instance.
CandidateCoords build_candidate_coords(const LInstance& inst, const Rat& eps, int r_hor,
                                       int r_ver, const LpackBudget& budget = {});

struct LpackResult {
  Packing packing;  // compacted to integer coordinates
  std::int64_t profit = 0;
};

// Optimal (T, R)-restricted L-packing by the four-transition DP
// (skip h_i / skip v_j / place h_i at the least feasible top in T / place v_j
// at the least feasible right in R), with backtracking. Both candidate arrays
// must be sorted and contain 0.
LpackResult lpack_dp(const LInstance& inst, const std::vector<Rat>& tops,
                     const std::vector<Rat>& rights, const LpackBudget& budget = {});

// T = R = {0..N}: the pseudo-polynomial exact optimum.
LpackResult lpack_exact(const LInstance& inst, const LpackBudget& budget = {});

struct LpackPtasOptions {
  Rat min_eps = Rat(1, 3);
  LpackBudget budget;
};

struct LpackPtasResult {
  LpackResult best;
  int r_hor = 0;  // winning levels
  int r_ver = 0;
};

// Runs the DP on every level pair (T^rh, R^rv), rh, rv in 1..1/eps (distinct
// sets only; levels are nested) and returns the best. Profit is at least
// (1 - 2 eps) of the exact optimum.
LpackPtasResult lpack_ptas(const LInstance& inst, const Rat& eps,
                           const LpackPtasOptions& opts = {});

// Splits instance items into horizontal/vertical per the w > N/2 / h > N/2
// rule (ties by the longer side); rejects items long in neither direction.
void lpack_split(const LInstance& inst, std::vector<Item>* horizontal,
                 std::vector<Item>* vertical);

}  // namespace packtk
