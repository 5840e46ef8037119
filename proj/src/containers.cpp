// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "packtk/containers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "packtk/nfdh.hpp"

namespace packtk {

std::vector<std::int64_t> widths_of(const std::vector<Item>& items) {
  std::vector<std::int64_t> out;
  out.reserve(items.size());
  for (const auto& it : items) out.push_back(it.w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::int64_t> heights_of(const std::vector<Item>& items) {
  std::vector<std::int64_t> out;
  out.reserve(items.size());
  for (const auto& it : items) out.push_back(it.h);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CandidateSizeSet expand_candidate_set(const std::vector<std::int64_t>& base, int k,
                                      std::int64_t n, std::int64_t limit,
                                      const CandidateBudget& budget) {
  if (base.empty()) throw PreconditionError("expand_candidate_set: base set is empty");
  if (k < 0 || n < 0) throw PreconditionError("expand_candidate_set: k and n must be >= 0");
  auto pruned = [&](std::int64_t v) { return limit >= 0 && v > limit; };

  // sums of at most k base values
  std::set<std::int64_t> sums{0};
  for (int round = 0; round < k; ++round) {
    std::set<std::int64_t> next = sums;
    for (auto s : sums) {
      for (auto p : base) {
        const std::int64_t v = s + p;
        if (!pruned(v)) next.insert(v);
      }
    }
    if (static_cast<std::int64_t>(next.size()) > budget.max_values)
      throw BudgetError("expand_candidate_set: sum closure exceeds budget");
    if (next == sums) break;
    sums = std::move(next);
  }

  std::set<std::int64_t> out;
  for (auto s : sums) {
    for (auto p : base) {
      for (std::int64_t i = 0; i <= n; ++i) {
        const std::int64_t v = s + i * p;
        if (pruned(v)) break;
        out.insert(v);
        if (static_cast<std::int64_t>(out.size()) > budget.max_values)
          throw BudgetError("expand_candidate_set: result exceeds budget");
      }
    }
  }
  CandidateSizeSet res;
  res.base = base;
  res.k = k;
  res.n = n;
  res.values.assign(out.begin(), out.end());
  return res;
}

AreaPackResult pack_area_container(const std::vector<Item>& items, const Container& c,
                                   const Rat& eps) {
  const Rat ew = eps * Rat(c.w);
  const Rat eh = eps * Rat(c.h);
  for (const auto& it : items) {
    if (Rat(it.w) > ew || Rat(it.h) > eh)
      throw PreconditionError("pack_area_container: item not eps-small: " + it.id);
  }
  const std::int64_t box_area = c.w * c.h;
  if (total_area(items) > box_area)
    throw PreconditionError("pack_area_container: assigned area exceeds container");

  // (1-2eps) a(C) as an exact rational threshold.
  const Rat thresh = (Rat(1) - Rat(2) * eps) * Rat(box_area);

  std::vector<Item> chosen;
  AreaPackResult res;
  if (Rat(total_area(items)) <= thresh) {
    chosen = items;
  } else {
    std::vector<Item> order = items;
    std::sort(order.begin(), order.end(), [](const Item& a, const Item& b) {
      const __int128 lhs = static_cast<__int128>(a.p) * b.area();
      const __int128 rhs = static_cast<__int128>(b.p) * a.area();
      if (lhs != rhs) return lhs > rhs;  // profit/area descending
      return a.id < b.id;
    });
    std::int64_t used = 0;
    for (const auto& it : order) {
      if (Rat(used + it.area()) <= thresh) {
        chosen.push_back(it);
        used += it.area();
      } else {
        res.dropped_ids.push_back(it.id);
      }
    }
  }
  auto box = nfdh_pack_box(chosen, c.w, c.h, eps);
  if (!box.leftover.empty())
    throw std::logic_error("pack_area_container: NFDH failed below the area threshold");
  res.packing = box.packing;
  res.packed_profit = packing_profit(chosen, box.packing);
  return res;
}

RoundedContainer round_container(const Container& c, const std::vector<Item>& assigned,
                                 const Rat& eps, int k) {
  if (!(eps > Rat(0) && eps < Rat(1)))
    throw PreconditionError("round_container: need 0 < eps < 1");
  RoundedContainer out;
  out.container = c;
  out.retained = assigned;
  if (assigned.empty()) {
    out.container.w = 0;
    out.container.h = 0;
    return out;
  }

  if (c.kind == ContainerKind::Area) {
    std::int64_t wmax = 0, hmax = 0;
    for (const auto& it : assigned) {
      if (Rat(it.w) > eps * Rat(c.w) || Rat(it.h) > eps * Rat(c.h))
        throw PreconditionError("round_container: item not eps-small for the area container: " +
                                it.id);
      wmax = std::max(wmax, it.w);
      hmax = std::max(hmax, it.h);
    }
    if (total_area(assigned) > c.w * c.h)
      throw PreconditionError("round_container: assigned area exceeds the container");
    const std::int64_t n = static_cast<std::int64_t>(assigned.size());
    std::int64_t cw = std::min(c.w, n * wmax);
    std::int64_t ch = std::min(c.h, n * hmax);
    out.container.w = wmax * (cw / wmax);
    out.container.h = hmax * (ch / hmax);
    const Rat thresh = (Rat(1) - Rat(2) * eps) * Rat(c.w) * Rat(c.h);
    std::vector<Item> order = assigned;
    std::sort(order.begin(), order.end(), [](const Item& a, const Item& b) {
      const __int128 lhs = static_cast<__int128>(a.p) * b.area();
      const __int128 rhs = static_cast<__int128>(b.p) * a.area();
      if (lhs != rhs) return lhs > rhs;
      return a.id < b.id;
    });
    out.retained.clear();
    std::int64_t used = 0;
    for (const auto& it : order) {
      if (Rat(used + it.area()) <= thresh) {
        out.retained.push_back(it);
        used += it.area();
      } else {
        out.dropped.push_back(it);
      }
    }
    return out;
  }

  // Horizontal case; vertical is the transpose.
  const bool horizontal = c.kind == ContainerKind::Horizontal;
  auto extent_w = [&](const Item& it) { return horizontal ? it.w : it.h; };
  auto extent_h = [&](const Item& it) { return horizontal ? it.h : it.w; };

  const std::int64_t limit = (Rat(1) / eps).ceil();
  if (k < limit) throw PreconditionError("round_container: need k >= 1/eps");

  std::int64_t wmax = 0;
  for (const auto& it : assigned) wmax = std::max(wmax, extent_w(it));

  std::int64_t new_h = 0;
  if (static_cast<std::int64_t>(assigned.size()) <= limit) {
    for (const auto& it : assigned) new_h += extent_h(it);
  } else {
    std::vector<Item> order = assigned;
    std::sort(order.begin(), order.end(), [&](const Item& a, const Item& b) {
      if (extent_h(a) != extent_h(b)) return extent_h(a) > extent_h(b);
      return a.id < b.id;
    });
    // tallest 1/eps items; drop the least profitable of them
    std::size_t cheapest = 0;
    for (std::size_t i = 1; i < static_cast<std::size_t>(limit); ++i) {
      if (order[i].p < order[cheapest].p ||
          (order[i].p == order[cheapest].p && order[i].id < order[cheapest].id))
        cheapest = i;
    }
    const Item dropped = order[cheapest];
    const std::int64_t hj = extent_h(dropped);
    std::int64_t tall_kept = 0, rest = 0;
    out.retained.clear();
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == cheapest) continue;
      out.retained.push_back(order[i]);
      if (i < static_cast<std::size_t>(limit))
        tall_kept += extent_h(order[i]);
      else
        rest += extent_h(order[i]);
    }
    out.dropped.push_back(dropped);
    const std::int64_t mult = hj == 0 ? 0 : (rest + hj - 1) / hj;
    new_h = tall_kept + mult * hj;
  }
  if (horizontal) {
    out.container.w = wmax;
    out.container.h = new_h;
  } else {
    out.container.h = wmax;
    out.container.w = new_h;
  }
  return out;
}

namespace {

struct BinSpec {
  std::size_t container;
  std::int64_t capacity;
};

// Builds the assignment reduction for a layout: one bin per container.
// rotated[i][j] marks pairs whose chosen orientation is the rotated one.
GapInstance build_gap(const KnapsackInstance& inst, const Layout& layout, const Rat& eps,
                      std::vector<std::vector<bool>>* rotated) {
  const auto& items = inst.items;
  GapInstance gap;
  gap.capacities.reserve(layout.containers.size());
  for (const auto& c : layout.containers) {
    switch (c.kind) {
      case ContainerKind::Horizontal:
        gap.capacities.push_back(c.h);
        break;
      case ContainerKind::Vertical:
        gap.capacities.push_back(c.w);
        break;
      case ContainerKind::Area:
        gap.capacities.push_back(c.w * c.h);
        break;
    }
  }
  gap.sizes.assign(items.size(),
                   std::vector<std::optional<std::int64_t>>(layout.containers.size()));
  gap.profits.assign(items.size(),
                     std::vector<std::int64_t>(layout.containers.size(), 0));
  rotated->assign(items.size(), std::vector<bool>(layout.containers.size(), false));

  for (std::size_t i = 0; i < items.size(); ++i) {
    const Item& it = items[i];
    const bool can_rotate = inst.rotation_allowed(it);
    for (std::size_t j = 0; j < layout.containers.size(); ++j) {
      const Container& c = layout.containers[j];
      gap.profits[i][j] = it.p;
      std::optional<std::int64_t> size;
      bool rot = false;
      if (c.kind == ContainerKind::Horizontal) {
        if (it.w <= c.w && it.h <= c.h) size = it.h;
        if (can_rotate && it.h <= c.w && it.w <= c.h && (!size || it.w < *size)) {
          size = it.w;
          rot = true;
        }
      } else if (c.kind == ContainerKind::Vertical) {
        if (it.h <= c.h && it.w <= c.w) size = it.w;
        if (can_rotate && it.w <= c.h && it.h <= c.w && (!size || it.h < *size)) {
          size = it.h;
          rot = true;
        }
      } else {
        const Rat g = c.eps ? *c.eps : eps;
        const Rat ew = g * Rat(c.w);
        const Rat eh = g * Rat(c.h);
        if (Rat(it.w) <= ew && Rat(it.h) <= eh) {
          size = it.area();
        } else if (can_rotate && Rat(it.h) <= ew && Rat(it.w) <= eh) {
          size = it.area();
          rot = true;
        }
      }
      if (size && *size <= 0) size = std::nullopt;  // zero-size never helps the DP
      gap.sizes[i][j] = size;
      (*rotated)[i][j] = rot;
    }
  }
  return gap;
}

LayoutSolveResult realize(const KnapsackInstance& inst, const Layout& layout, const Rat& eps,
                          const GapAssignment& assignment,
                          const std::vector<std::vector<bool>>& rotated) {
  const auto& items = inst.items;
  LayoutSolveResult res;
  res.packing.region = inst.region();

  std::size_t assigned_count = 0;
  for (std::size_t j = 0; j < layout.containers.size(); ++j) {
    const Container& c = layout.containers[j];
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (assignment.bin_of[i] == static_cast<int>(j)) members.push_back(i);
    assigned_count += members.size();
    if (members.empty()) continue;

    if (c.kind == ContainerKind::Area) {
      const Rat g = c.eps ? *c.eps : eps;
      std::vector<Item> group;
      for (auto i : members) {
        Item copy = items[i];
        if (rotated[i][j]) std::swap(copy.w, copy.h);
        group.push_back(copy);
      }
      auto packed = pack_area_container(group, c, g);
      std::map<std::string, bool> rot_flags;
      for (auto i : members) rot_flags[items[i].id] = rotated[i][j];
      for (const auto& pl : packed.packing.placements) {
        res.packing.placements.push_back(
            {pl.item_id, pl.x + c.x, pl.y + c.y, rot_flags[pl.item_id]});
      }
      continue;
    }

    // Stacked realization; any horizontal (resp. vertical) line meets at most
    // one item because extents are disjoint along the stacking axis.
    const bool hor = c.kind == ContainerKind::Horizontal;
    auto stack_extent = [&](std::size_t a) {
      if (hor) return rotated[a][j] ? items[a].w : items[a].h;
      return rotated[a][j] ? items[a].h : items[a].w;
    };
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      if (stack_extent(a) != stack_extent(b)) return stack_extent(a) > stack_extent(b);
      return items[a].id < items[b].id;
    });
    std::int64_t off = 0;
    for (auto i : members) {
      const bool rot = rotated[i][j];
      const std::int64_t along = c.kind == ContainerKind::Horizontal
                                     ? (rot ? items[i].w : items[i].h)
                                     : (rot ? items[i].h : items[i].w);
      if (c.kind == ContainerKind::Horizontal)
        res.packing.placements.push_back({items[i].id, c.x, c.y + off, rot});
      else
        res.packing.placements.push_back({items[i].id, c.x + off, c.y, rot});
      off += along;
    }
  }
  const auto idx = index_by_id(items);
  for (const auto& pl : res.packing.placements) res.profit += items[idx.at(pl.item_id)].p;
  res.all_assigned = assigned_count == items.size() &&
                     res.packing.placements.size() == items.size();
  return res;
}

void check_layout(const KnapsackInstance& inst, const Layout& layout) {
  for (std::size_t a = 0; a < layout.containers.size(); ++a) {
    const Container& c = layout.containers[a];
    if (c.w <= 0 || c.h <= 0 || c.x < 0 || c.y < 0 || c.x + c.w > inst.n || c.y + c.h > inst.n)
      throw PreconditionError("layout: container outside the knapsack");
    for (std::size_t b = a + 1; b < layout.containers.size(); ++b) {
      const Container& d = layout.containers[b];
      if (c.x < d.x + d.w && d.x < c.x + c.w && c.y < d.y + d.h && d.y < c.y + c.h)
        throw PreconditionError("layout: containers overlap");
    }
  }
}

}  // namespace

LayoutSolveResult solve_for_layout(const KnapsackInstance& inst, const Layout& layout,
                                   const Rat& eps, const LayoutSolveOptions& opts) {
  check_layout(inst, layout);
  std::vector<std::vector<bool>> rotated;
  GapInstance gap = build_gap(inst, layout, eps, &rotated);
  GapBudget budget = opts.gap_budget;
  budget.max_bins = std::max<std::int64_t>(budget.max_bins,
                                           static_cast<std::int64_t>(layout.containers.size()));
  GapAssignment assignment = gap_ptas(gap, opts.gap_eps, opts.guess_cap, budget);
  auto res = realize(inst, layout, eps, assignment, rotated);
  res.guaranteed = assignment.guaranteed;
  return res;
}

LayoutSolveResult solve_for_layout_exact(const KnapsackInstance& inst, const Layout& layout,
                                         const Rat& eps, const GapBudget& budget) {
  check_layout(inst, layout);
  std::vector<std::vector<bool>> rotated;
  GapInstance gap = build_gap(inst, layout, eps, &rotated);
  GapBudget b = budget;
  b.max_bins = std::max<std::int64_t>(b.max_bins,
                                      static_cast<std::int64_t>(layout.containers.size()));
  GapAssignment assignment = gap_exact_dp(gap, b);
  auto res = realize(inst, layout, eps, assignment, rotated);
  res.guaranteed = true;
  return res;
}

LayoutAssignment assign_for_layout_exact(const KnapsackInstance& inst, const Layout& layout,
                                         const Rat& eps, const GapBudget& budget) {
  check_layout(inst, layout);
  LayoutAssignment out;
  GapInstance gap = build_gap(inst, layout, eps, &out.rotated);
  GapBudget b = budget;
  b.max_bins = std::max<std::int64_t>(b.max_bins,
                                      static_cast<std::int64_t>(layout.containers.size()));
  GapAssignment assignment = gap_exact_dp(gap, b);
  out.bin_of = assignment.bin_of;
  out.all_assigned = true;
  for (auto b : out.bin_of)
    if (b < 0) out.all_assigned = false;
  return out;
}

namespace {

std::string layout_signature(const Layout& l) {
  std::vector<std::string> parts;
  for (const auto& c : l.containers) {
    parts.push_back(std::to_string(static_cast<int>(c.kind)) + ":" + std::to_string(c.x) + "," +
                    std::to_string(c.y) + "," + std::to_string(c.w) + "," + std::to_string(c.h));
  }
  std::sort(parts.begin(), parts.end());
  std::string sig;
  for (const auto& p : parts) sig += p + ";";
  return sig;
}

struct Arrangement {
  std::vector<std::pair<std::int64_t, std::int64_t>> rects;  // (x, y) positions filled later
};

// Recursive guillotine placement: first rect at the region origin, the rest
// split between the strip to its right and the strip above it (both cut
// orientations).
void positions_rec(std::int64_t x0, std::int64_t y0, std::int64_t w, std::int64_t h,
                   const std::vector<std::pair<std::int64_t, std::int64_t>>& dims,
                   std::size_t next, std::vector<std::pair<std::int64_t, std::int64_t>>& acc,
                   std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>>& out) {
  if (next == dims.size()) {
    out.push_back(acc);
    return;
  }
  const auto [cw, ch] = dims[next];
  if (cw > w || ch > h) return;
  acc.push_back({x0, y0});
  if (next + 1 == dims.size()) {
    out.push_back(acc);
  } else {
    // vertical cut: right strip full height, top strip above the first rect
    positions_rec(x0 + cw, y0, w - cw, h, dims, next + 1, acc, out);
    positions_rec(x0, y0 + ch, cw, h - ch, dims, next + 1, acc, out);
    // horizontal cut: top strip full width
    positions_rec(x0, y0 + ch, w, h - ch, dims, next + 1, acc, out);
    positions_rec(x0 + cw, y0, w - cw, ch, dims, next + 1, acc, out);
  }
  acc.pop_back();
}

}  // namespace

EnumerationResult enumerate_layouts(std::int64_t region_w, std::int64_t region_h, int k_max,
                                    const std::vector<std::int64_t>& widths,
                                    const std::vector<std::int64_t>& heights,
                                    const EnumerateOptions& opts) {
  std::vector<std::int64_t> ws, hs;
  for (auto w : widths)
    if (w > 0 && w <= region_w) ws.push_back(w);
  for (auto h : heights)
    if (h > 0 && h <= region_h) hs.push_back(h);
  std::sort(ws.rbegin(), ws.rend());
  std::sort(hs.rbegin(), hs.rend());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

  EnumerationResult res;
  std::set<std::string> seen;

  auto push = [&](Layout&& l) {
    if (res.truncated) return;
    auto sig = layout_signature(l);
    if (!seen.insert(sig).second) return;
    if (static_cast<std::int64_t>(res.layouts.size()) >= opts.max_layouts) {
      if (!opts.truncate) throw BudgetError("enumerate_layouts: layout budget exceeded");
      res.truncated = true;
      return;
    }
    res.layouts.push_back(std::move(l));
  };

  for (int k = 1; k <= k_max && !res.truncated; ++k) {
    std::vector<std::pair<std::int64_t, std::int64_t>> dims(k);
    std::function<void(int)> choose_dims = [&](int slot) {
      if (res.truncated) return;
      if (slot == k) {
        std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> placements;
        std::vector<std::pair<std::int64_t, std::int64_t>> acc;
        positions_rec(0, 0, region_w, region_h, dims, 0, acc, placements);
        if (placements.empty()) return;
        std::sort(placements.begin(), placements.end());
        placements.erase(std::unique(placements.begin(), placements.end()), placements.end());
        for (const auto& pos : placements) {
          std::vector<ContainerKind> kinds(k, opts.kinds.front());
          std::function<void(int)> label = [&](int s) {
            if (res.truncated) return;
            if (s == k) {
              Layout l;
              for (int t = 0; t < k; ++t)
                l.containers.push_back(
                    {kinds[t], pos[t].first, pos[t].second, dims[t].first, dims[t].second, {}});
              push(std::move(l));
              return;
            }
            for (auto kd : opts.kinds) {
              kinds[s] = kd;
              label(s + 1);
            }
          };
          label(0);
        }
        return;
      }
      for (auto w : ws) {
        for (auto h : hs) {
          dims[slot] = {w, h};
          choose_dims(slot + 1);
          if (res.truncated) return;
        }
      }
    };
    choose_dims(0);
  }
  return res;
}

}  // namespace packtk
