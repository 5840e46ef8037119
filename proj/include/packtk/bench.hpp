// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "packtk/core.hpp"
#include "packtk/knap2d.hpp"

namespace packtk {

// One solver invocation, shared by the CLI and the bench harness.
struct SolveOutcome {
  Packing packing;
  std::int64_t value = 0;  // profit (knapsack/lpack) or height (strip)
  bool is_height = false;
  bool guaranteed = false;
  bool budget_exhausted = false;
  std::string detail;  // winning branch / method
};

// Solver names: knapsack: lc | cardinality | brute-force ; strip: nfdh | ffdh
// | steinberg | strip-best | strip-oracle ; lpack: lpack-exact | lpack-ptas.
SolveOutcome run_solver(const Instance& inst, const std::string& solver, const Rat& eps,
                        const Knap2dOptions& opts);

// Bench specs are JSON:
//   { "seed": 1,
//     "instances": [ "path.json" | {"gen": {kind, dist, items, region,
//                                           max_profit, rotations, seed?}} ],
//     "solvers":   [ {"name": "nfdh", "eps": "1/3"} ] }
// Rows come out instance-major in spec order. time_ms stays 0 unless timing
// is enabled, keeping reruns byte-identical.
struct BenchOptions {
  bool timing = false;
};

std::string run_bench(const std::string& spec_text, const BenchOptions& opts = {});

}  // namespace packtk
