// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "packtk/core.hpp"

namespace packtk {

struct SvgStyle {
  int unit = 12;        // pixels per length unit
  bool labels = true;   // id + profit text per rectangle
};

// Deterministic SVG for a validated packing: region outline (two rectangles
// for an L), one rect per placement, colors hashed from item ids. Refuses
// infeasible packings.
std::string render_svg(const Instance& inst, const Packing& packing, const SvgStyle& style = {});

}  // namespace packtk
