// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "packtk/core.hpp"

namespace packtk {

struct SteinbergProblem {
  std::int64_t w = 0;
  std::int64_t h = 0;
  std::vector<Item> items;
};

// True iff 2*a(I) <= w*h - (2*w_max - w)_+ * (2*h_max - h)_+ .
// Throws PreconditionError when some item exceeds the box in a dimension.
bool steinberg_feasible(const SteinbergProblem& problem);

struct SteinbergResult {
  Packing packing;
  std::string method;  // "layered": stack/cut reductions with verified fallbacks
};

// Packs every item into the w x h box. Callers must check steinberg_feasible
// first; the sufficient condition guarantees a packing exists and the layered
// construction (documented in the README) finds one.
SteinbergResult steinberg_pack(const SteinbergProblem& problem);

struct SteinbergStripResult {
  Packing packing;
  std::int64_t height = 0;
  std::string method;  // method of the winning pack, "nfdh" if the fallback won
};

// Minimum-height wrapper: binary search on the condition over
// h in [max(h_max, ceil(a/w)), h_max + ceil(2a/w)], packing at the smallest
// feasible height; NFDH realizes the upper end if the constructive packer
// ever declines a probed height.
SteinbergStripResult steinberg_strip(const std::vector<Item>& items, std::int64_t w);

}  // namespace packtk
