// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "packtk/containers.hpp"
#include "packtk/core.hpp"

namespace packtk {

// Instance documents are JSON with fields:
//   kind:      "knapsack" | "strip" | "lpack"
//   N / W:     region size (N for knapsack and lpack, W for strip)
//   wL, hL:    lpack only
//   rotations: optional bool (knapsack only, default false)
//   mode:      optional "weighted" | "cardinality" (knapsack only)
//   items:     [{id, w, h, p, rot?}]
// Integers only; whitespace-insensitive by virtue of JSON.
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);
std::string serialize_instance(const Instance& inst);

// Layout documents: {"containers": [{kind, x, y, w, h, eps?}]} with kind in
// "horizontal" | "vertical" | "area" and eps a rational string like "1/4".
Layout parse_layout_text(const std::string& text);
Layout load_layout(const std::string& path);
std::string serialize_layout(const Layout& layout);

// Packing documents: {"placements": [{id, x, y, rotated}]}.
Packing parse_packing_text(const std::string& text, const Instance& inst);
Packing load_packing(const std::string& path, const Instance& inst);
std::string serialize_packing(const Packing& packing);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace packtk
