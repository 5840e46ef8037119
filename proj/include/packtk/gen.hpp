// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "packtk/core.hpp"

namespace packtk {

// Deterministic PRNG wrapper: mt19937_64 plus modulo draws, so sequences are
// identical across platforms (std::uniform_int_distribution is not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {  // inclusive range
    if (hi <= lo) return lo;
    return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(int percent) { return uniform(0, 99) < percent; }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct GenSpec {
  std::string kind = "knapsack";  // knapsack | strip | lpack
  std::string dist = "uniform";   // uniform | long-mix | small | corridor
  std::int64_t n_items = 10;
  std::int64_t region = 20;       // N or W
  std::int64_t max_profit = 20;
  bool rotations = false;
  std::uint64_t seed = 1;
};

// Documented distributions:
//   uniform:  w,h uniform in [1, region]
//   long-mix: roughly half the items get a side > region/2
//   small:    w,h uniform in [1, max(1, region/5)]
//   corridor: skewed thin items (one side 1..region/10, other up to region)
Instance generate_instance(const GenSpec& spec);

}  // namespace packtk
