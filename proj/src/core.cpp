// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "packtk/core.hpp"

#include <algorithm>

namespace packtk {

const std::vector<Item>& instance_items(const Instance& inst) {
  return std::visit([](const auto& i) -> const std::vector<Item>& { return i.items; }, inst);
}

Region instance_region(const Instance& inst) {
  return std::visit([](const auto& i) -> Region { return i.region(); }, inst);
}

std::map<std::string, std::size_t> index_by_id(const std::vector<Item>& items) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!out.emplace(items[i].id, i).second)
      throw ParseError("duplicate item id: " + items[i].id);
  }
  return out;
}

std::int64_t total_area(const std::vector<Item>& items) {
  std::int64_t a = 0;
  for (const auto& it : items) a += it.area();
  return a;
}

std::int64_t total_profit(const std::vector<Item>& items) {
  std::int64_t p = 0;
  for (const auto& it : items) p += it.p;
  return p;
}

std::int64_t packing_profit(const std::vector<Item>& items, const Packing& packing) {
  auto idx = index_by_id(items);
  std::int64_t p = 0;
  for (const auto& pl : packing.placements) {
    auto it = idx.find(pl.item_id);
    if (it != idx.end()) p += items[it->second].p;
  }
  return p;
}

std::int64_t packing_height(const std::vector<Item>& items, const Packing& packing) {
  auto idx = index_by_id(items);
  std::int64_t top = 0;
  for (const auto& pl : packing.placements) {
    auto it = idx.find(pl.item_id);
    if (it == idx.end()) continue;
    auto [w, h] = placed_extent(items[it->second], pl);
    (void)w;
    top = std::max(top, pl.y + h);
  }
  return top;
}

namespace {

// A rect [x, x+w) x [y, y+h) lies in the L-region iff it stays in the outer
// square and avoids the open quadrant x > wl, y > hl.
bool inside_region(const Region& region, std::int64_t x, std::int64_t y, std::int64_t w,
                   std::int64_t h) {
  if (x < 0 || y < 0) return false;
  if (const auto* box = std::get_if<BoxRegion>(&region))
    return x + w <= box->w && y + h <= box->h;
  if (const auto* strip = std::get_if<StripRegion>(&region)) return x + w <= strip->w;
  const auto& l = std::get<LRegion>(region);
  if (x + w > l.n || y + h > l.n) return false;
  return x + w <= l.wl || y + h <= l.hl;
}

bool rotations_allowed(const Instance& inst, const Item& it) {
  if (const auto* k = std::get_if<KnapsackInstance>(&inst)) return k->rotation_allowed(it);
  return false;  // strip and L solvers never rotate; callers pre-orient
}

}  // namespace

ValidationReport validate_packing(const Instance& inst, const Packing& packing) {
  ValidationReport report;
  const auto& items = instance_items(inst);
  auto idx = index_by_id(items);

  struct Box {
    std::int64_t x1, y1, x2, y2;
    const std::string* id;
  };
  std::vector<Box> boxes;
  std::map<std::string, int> seen;

  for (const auto& pl : packing.placements) {
    auto found = idx.find(pl.item_id);
    if (found == idx.end()) {
      report.structural.push_back("unknown item id: " + pl.item_id);
      continue;
    }
    const Item& it = items[found->second];
    if (++seen[pl.item_id] == 2)
      report.violations.push_back({ViolationKind::DuplicateItem, pl.item_id + " placed twice"});
    if (pl.rotated && !rotations_allowed(inst, it))
      report.violations.push_back({ViolationKind::IllegalRotation, pl.item_id});
    auto [w, h] = placed_extent(it, pl);
    if (!inside_region(packing.region, pl.x, pl.y, w, h))
      report.violations.push_back({ViolationKind::OutOfRegion, pl.item_id});
    boxes.push_back({pl.x, pl.y, pl.x + w, pl.y + h, &pl.item_id});
  }

  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      const Box& a = boxes[i];
      const Box& b = boxes[j];
      if (a.x1 < b.x2 && b.x1 < a.x2 && a.y1 < b.y2 && b.y1 < a.y2)
        report.violations.push_back({ViolationKind::Overlap, *a.id + " overlaps " + *b.id});
    }
  }
  return report;
}

}  // namespace packtk
