// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "packtk/strip.hpp"

#include <algorithm>

#include "packtk/nfdh.hpp"

namespace packtk {

std::int64_t strip_lower_bound(const StripInstance& inst) {
  std::int64_t hmax = 0;
  for (const auto& it : inst.items) hmax = std::max(hmax, it.h);
  const std::int64_t area = total_area(inst.items);
  return std::max(hmax, inst.w > 0 ? (area + inst.w - 1) / inst.w : 0);
}

StripContainerResult solve_strip_container(const StripInstance& inst, const Layout& layout,
                                           const Rat& eps, const GapBudget& budget) {
  StripContainerResult res;
  res.packing.region = inst.region();

  // Reuse the knapsack reduction on a tall box that covers the layout.
  std::int64_t top = 0;
  for (const auto& c : layout.containers) top = std::max(top, c.y + c.h);
  KnapsackInstance boxed;
  boxed.n = std::max(inst.w, top);
  boxed.items = inst.items;
  boxed.rotations = false;
  for (const auto& c : layout.containers) {
    if (c.x < 0 || c.y < 0 || c.x + c.w > inst.w)
      throw PreconditionError("solve_strip_container: layout outside the strip");
  }

  LayoutAssignment solved = assign_for_layout_exact(boxed, layout, eps, budget);
  if (!solved.all_assigned) return res;  // layout cannot host every item

  // Enlarge area containers by (1+2eps) in height and lift whatever sits
  // above them, preserving x-spans.
  std::vector<Container> grown = layout.containers;
  std::vector<std::size_t> order(grown.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (layout.containers[a].y != layout.containers[b].y)
      return layout.containers[a].y < layout.containers[b].y;
    return a < b;
  });
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const std::size_t i = order[oi];
    Container& c = grown[i];
    if (c.kind != ContainerKind::Area) continue;
    const Rat g = c.eps ? *c.eps : eps;
    const std::int64_t new_h = ceil_mul(c.h, Rat(1) + Rat(2) * g);
    const std::int64_t extra = new_h - c.h;
    c.h = new_h;
    if (extra > 0) {
      for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
        Container& d = grown[order[oj]];
        if (d.x < c.x + c.w && c.x < d.x + d.w && d.y >= layout.containers[i].y) d.y += extra;
      }
    }
  }

  // Replay the original assignment inside the grown geometry. Items are
  // eps-small for the original area container, so NFDH packs all of them in
  // the taller one (the per-dimension shelf bound gives packed area
  // >= (1-eps)(1+eps) * w * h >= assigned area).
  for (std::size_t j = 0; j < grown.size(); ++j) {
    const Container& c = grown[j];
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < inst.items.size(); ++i)
      if (solved.bin_of[i] == static_cast<int>(j)) members.push_back(i);
    if (members.empty()) continue;
    if (c.kind == ContainerKind::Area) {
      const Rat g = c.eps ? *c.eps : eps;
      std::vector<Item> group;
      for (auto i : members) group.push_back(inst.items[i]);
      auto box = nfdh_pack_box(group, c.w, c.h, g);
      if (!box.leftover.empty())
        throw std::logic_error("solve_strip_container: enlarged area container overflow");
      for (const auto& pl : box.packing.placements)
        res.packing.placements.push_back({pl.item_id, pl.x + c.x, pl.y + c.y, false});
    } else {
      std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
        const std::int64_t ea = c.kind == ContainerKind::Horizontal ? inst.items[a].h
                                                                    : inst.items[a].w;
        const std::int64_t eb = c.kind == ContainerKind::Horizontal ? inst.items[b].h
                                                                    : inst.items[b].w;
        if (ea != eb) return ea > eb;
        return inst.items[a].id < inst.items[b].id;
      });
      std::int64_t off = 0;
      for (auto i : members) {
        if (c.kind == ContainerKind::Horizontal) {
          res.packing.placements.push_back({inst.items[i].id, c.x, c.y + off, false});
          off += inst.items[i].h;
        } else {
          res.packing.placements.push_back({inst.items[i].id, c.x + off, c.y, false});
          off += inst.items[i].w;
        }
      }
    }
  }

  res.feasible = true;
  res.height = packing_height(inst.items, res.packing);
  return res;
}

StripBestResult solve_strip_best(const StripInstance& inst, const StripPortfolioOptions& opts) {
  StripBestResult res;
  res.packing.region = inst.region();
  bool have = false;
  auto consider = [&](const std::string& name, const Packing& packing, std::int64_t height) {
    res.heights.push_back({name, height});
    if (!have || height < res.height) {
      res.packing = packing;
      res.height = height;
      res.method = name;
      have = true;
    }
  };
  if (opts.use_nfdh) {
    auto r = nfdh_strip(inst.items, inst.w);
    consider("nfdh", r.packing, r.height);
  }
  if (opts.use_ffdh) {
    auto r = ffdh_strip(inst.items, inst.w);
    consider("ffdh", r.packing, r.height);
  }
  if (opts.use_steinberg) {
    auto r = steinberg_strip(inst.items, inst.w);
    consider("steinberg", r.packing, r.height);
  }
  return res;
}

namespace {

struct StripFeas {
  std::int64_t w, h;
  std::vector<const Item*> items;  // sorted by the caller's ordering
  std::vector<std::int64_t> xs, ys;
  std::vector<std::pair<const Item*, std::pair<std::int64_t, std::int64_t>>> cur;
  std::int64_t nodes = 0, budget = 0;

  bool fits(std::int64_t x, std::int64_t y, std::int64_t iw, std::int64_t ih) const {
    if (x + iw > w || y + ih > h) return false;
    for (const auto& [it, pos] : cur) {
      if (pos.first < x + iw && x < pos.first + it->w && pos.second < y + ih &&
          y < pos.second + it->h)
        return false;
    }
    return true;
  }

  bool run(std::size_t i) {
    if (i == items.size()) return true;
    if (++nodes > budget) throw BudgetError("brute_force_strip: node budget exceeded");
    for (auto y : ys) {
      if (y + items[i]->h > h) break;
      for (auto x : xs) {
        if (!fits(x, y, items[i]->w, items[i]->h)) continue;
        cur.push_back({items[i], {x, y}});
        if (run(i + 1)) return true;
        cur.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

StripOracleResult brute_force_strip(const StripInstance& inst, const StripOracleBudget& budget) {
  std::int64_t hmax = 0;
  for (const auto& it : inst.items) {
    hmax = std::max(hmax, it.h);
    if (it.w > inst.w) throw PreconditionError("brute_force_strip: item wider than strip");
  }
  if (static_cast<std::int64_t>(inst.items.size()) > budget.max_items ||
      inst.w > budget.max_w || hmax > budget.max_h)
    throw BudgetError("brute_force_strip: instance exceeds oracle budget");

  StripOracleResult res;
  res.packing.region = inst.region();
  if (inst.items.empty()) return res;

  std::vector<const Item*> order;
  for (const auto& it : inst.items) order.push_back(&it);
  std::sort(order.begin(), order.end(), [](const Item* a, const Item* b) {
    if (a->area() != b->area()) return a->area() > b->area();
    return a->id < b->id;
  });

  std::int64_t total_h = 0;
  for (const auto& it : inst.items) total_h += it.h;
  std::int64_t lo = strip_lower_bound(inst), hi = total_h;

  auto feasible_at = [&](std::int64_t h, StripFeas* out) {
    StripFeas f;
    f.w = inst.w;
    f.h = h;
    f.items = order;
    f.budget = budget.max_nodes;
    std::vector<char> xok(inst.w + 1, 0), yok(h + 1, 0);
    xok[0] = yok[0] = 1;
    for (const auto& it : inst.items) {
      for (std::int64_t v = inst.w; v >= it.w; --v)
        if (xok[v - it.w]) xok[v] = 1;
      for (std::int64_t v = h; v >= it.h; --v)
        if (yok[v - it.h]) yok[v] = 1;
    }
    for (std::int64_t v = 0; v <= inst.w; ++v)
      if (xok[v]) f.xs.push_back(v);
    for (std::int64_t v = 0; v <= h; ++v)
      if (yok[v]) f.ys.push_back(v);
    if (!f.run(0)) return false;
    *out = std::move(f);
    return true;
  };

  StripFeas best;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    StripFeas f;
    if (feasible_at(mid, &f))
      hi = mid;
    else
      lo = mid + 1;
  }
  StripFeas f;
  if (!feasible_at(lo, &f)) throw std::logic_error("brute_force_strip: lost feasibility");
  res.height = lo;
  for (const auto& [it, pos] : f.cur)
    res.packing.placements.push_back({it->id, pos.first, pos.second, false});
  return res;
}

}  // namespace packtk
