// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "packtk/core.hpp"

namespace packtk {

// One shelf of a decreasing-height packing. Height is fixed by the first
// (tallest) item placed on it.
struct Shelf {
  std::int64_t y = 0;
  std::int64_t height = 0;
  std::int64_t used_width = 0;
};

struct BoxPackResult {
  Packing packing;
  std::vector<Item> leftover;
  std::int64_t packed_area = 0;
};

struct StripPackResult {
  Packing packing;
  std::int64_t height = 0;
  std::vector<Shelf> shelves;
};

// Next-Fit-Decreasing-Height into a box. Requires every item to be eps-small
// for the box (w <= eps*w_box, h <= eps*h_box); packs shelves bottom-up and
// stops at the first shelf that does not fit vertically. Guarantees packed
// area >= min(a(items), (1-2eps) * w_box * h_box).
BoxPackResult nfdh_pack_box(const std::vector<Item>& items, std::int64_t box_w,
                            std::int64_t box_h, const Rat& eps);

// NFDH on a strip of width w: packs everything, height <= h_max + 2a/w.
StripPackResult nfdh_strip(const std::vector<Item>& items, std::int64_t w);

// First-fit variant: each item drops to the lowest shelf with room.
StripPackResult ffdh_strip(const std::vector<Item>& items, std::int64_t w);

// Shared sort: non-increasing height, ties by non-increasing width, then id.
std::vector<Item> sorted_by_height(std::vector<Item> items);

}  // namespace packtk
