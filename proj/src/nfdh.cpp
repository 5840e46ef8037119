// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "packtk/nfdh.hpp"

#include <algorithm>

namespace packtk {

std::vector<Item> sorted_by_height(std::vector<Item> items) {
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.h != b.h) return a.h > b.h;
    if (a.w != b.w) return a.w > b.w;
    return a.id < b.id;
  });
  return items;
}

BoxPackResult nfdh_pack_box(const std::vector<Item>& items, std::int64_t box_w,
                            std::int64_t box_h, const Rat& eps) {
  for (const auto& it : items) {
    if (Rat(it.w) > eps * Rat(box_w) || Rat(it.h) > eps * Rat(box_h))
      throw PreconditionError("nfdh_pack_box: item not eps-small: " + it.id);
  }
  BoxPackResult res;
  res.packing.region = BoxRegion{box_w, box_h};
  auto sorted = sorted_by_height(items);

  std::int64_t shelf_y = 0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    if (shelf_y + sorted[i].h > box_h) break;  // next shelf does not fit: halt
    const std::int64_t shelf_h = sorted[i].h;
    std::int64_t x = 0;
    while (i < sorted.size() && x + sorted[i].w <= box_w) {
      res.packing.placements.push_back({sorted[i].id, x, shelf_y, false});
      res.packed_area += sorted[i].area();
      x += sorted[i].w;
      ++i;
    }
    shelf_y += shelf_h;
  }
  res.leftover.assign(sorted.begin() + i, sorted.end());
  return res;
}

namespace {

StripPackResult shelf_strip(const std::vector<Item>& items, std::int64_t w, bool first_fit) {
  for (const auto& it : items) {
    if (it.w > w) throw PreconditionError("strip shelf packing: item wider than strip: " + it.id);
  }
  StripPackResult res;
  res.packing.region = StripRegion{w};
  auto sorted = sorted_by_height(items);

  for (std::size_t i = 0; i < sorted.size(); ++i) {
    std::size_t target = res.shelves.size();
    if (first_fit) {
      for (std::size_t s = 0; s < res.shelves.size(); ++s) {
        if (res.shelves[s].used_width + sorted[i].w <= w) {
          target = s;
          break;
        }
      }
    } else if (!res.shelves.empty() &&
               res.shelves.back().used_width + sorted[i].w <= w) {
      target = res.shelves.size() - 1;
    }
    if (target == res.shelves.size()) {
      res.shelves.push_back({res.height, sorted[i].h, 0});
      res.height += sorted[i].h;
    }
    Shelf& shelf = res.shelves[target];
    res.packing.placements.push_back({sorted[i].id, shelf.used_width, shelf.y, false});
    shelf.used_width += sorted[i].w;
  }
  return res;
}

}  // namespace

StripPackResult nfdh_strip(const std::vector<Item>& items, std::int64_t w) {
  return shelf_strip(items, w, /*first_fit=*/false);
}

StripPackResult ffdh_strip(const std::vector<Item>& items, std::int64_t w) {
  return shelf_strip(items, w, /*first_fit=*/true);
}

}  // namespace packtk
