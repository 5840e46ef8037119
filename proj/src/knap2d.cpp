// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "packtk/knap2d.hpp"

#include <algorithm>
#include <set>

namespace packtk {

namespace {

// ---------------------------------------------------------------- oracle ---

struct BfItem {
  std::int64_t w, h, p;
  bool rot;
  std::size_t orig;
};

struct BfState {
  std::int64_t n;
  std::vector<BfItem> items;
  std::vector<std::int64_t> xs_base, ys_base;  // subset-sum coordinate grids
  std::vector<std::int64_t> suffix_profit;
  std::int64_t best = -1;
  std::vector<std::pair<std::size_t, Placement>> cur, best_sel;  // (items idx, placement)
  std::int64_t nodes = 0, node_budget = 0;
  const std::vector<Item>* orig_items = nullptr;

  bool overlaps_any(std::int64_t x, std::int64_t y, std::int64_t w, std::int64_t h) const {
    for (const auto& [idx, pl] : cur) {
      const BfItem& o = items[idx];
      const std::int64_t ow = pl.rotated ? o.h : o.w;
      const std::int64_t oh = pl.rotated ? o.w : o.h;
      if (pl.x < x + w && x < pl.x + ow && pl.y < y + h && y < pl.y + oh) return true;
    }
    return false;
  }

  void place_all(std::size_t i, std::int64_t profit) {
    if (++nodes > node_budget) throw BudgetError("brute_force_2dgk: node budget exceeded");
    if (profit + suffix_profit[i] <= best) return;  // cannot beat the incumbent
    if (i == items.size()) {
      if (profit > best) {
        best = profit;
        best_sel = cur;
      }
      return;
    }
    const BfItem& it = items[i];
    // try both orientations, then skipping
    for (int o = 0; o < (it.rot && it.w != it.h ? 2 : 1); ++o) {
      const std::int64_t w = o ? it.h : it.w;
      const std::int64_t h = o ? it.w : it.h;
      if (w > n || h > n) continue;
      for (auto x : xs_base) {
        if (x + w > n) break;
        for (auto y : ys_base) {
          if (y + h > n) break;
          if (overlaps_any(x, y, w, h)) continue;
          cur.push_back({i, Placement{(*orig_items)[it.orig].id, x, y, o == 1}});
          place_all(i + 1, profit + it.p);
          cur.pop_back();
        }
      }
    }
    place_all(i + 1, profit);
  }
};

}  // namespace

Knap2dResult brute_force_2dgk(const KnapsackInstance& inst, const BruteForceBudget& budget) {
  if (static_cast<std::int64_t>(inst.items.size()) > budget.max_items ||
      inst.n > budget.max_n)
    throw BudgetError("brute_force_2dgk: instance exceeds oracle budget");

  BfState st;
  st.n = inst.n;
  st.node_budget = budget.max_nodes;
  st.orig_items = &inst.items;
  for (std::size_t i = 0; i < inst.items.size(); ++i) {
    const Item& it = inst.items[i];
    st.items.push_back({it.w, it.h, it.p, inst.rotation_allowed(it), i});
  }
  std::sort(st.items.begin(), st.items.end(), [](const BfItem& a, const BfItem& b) {
    if (a.w * a.h != b.w * b.h) return a.w * a.h > b.w * b.h;
    return a.orig < b.orig;
  });

  // Left/bottom-justified packings have coordinates in the subset sums of the
  // item extents (either orientation), so those grids are exhaustive.
  std::vector<char> xok(st.n + 1, 0);
  xok[0] = 1;
  auto add_len = [&](std::vector<char>& ok, std::int64_t len) {
    if (len <= 0) return;
    for (std::int64_t v = st.n; v >= len; --v)
      if (ok[v - len]) ok[v] = 1;
  };
  std::vector<char> yok = xok;
  for (const auto& it : st.items) {
    add_len(xok, it.w);
    add_len(yok, it.h);
    if (it.rot) {
      add_len(xok, it.h);
      add_len(yok, it.w);
    }
  }
  for (std::int64_t v = 0; v <= st.n; ++v) {
    if (xok[v]) st.xs_base.push_back(v);
    if (yok[v]) st.ys_base.push_back(v);
  }
  st.suffix_profit.assign(st.items.size() + 1, 0);
  for (std::size_t i = st.items.size(); i-- > 0;)
    st.suffix_profit[i] = st.suffix_profit[i + 1] + st.items[i].p;

  st.place_all(0, 0);

  Knap2dResult res;
  res.branch = "brute-force";
  res.packing.region = inst.region();
  res.profit = std::max<std::int64_t>(0, st.best);
  for (const auto& [idx, pl] : st.best_sel) {
    (void)idx;
    res.packing.placements.push_back(pl);
  }
  return res;
}

// ----------------------------------------------------------------- solver ---

namespace {

// Candidate container sizes: item widths/heights and their k=1 expansions,
// largest first, truncated to the configured cap. With rotations both extents
// feed both axes.
std::vector<std::int64_t> size_candidates(const std::vector<Item>& items, bool rotations,
                                          bool widths, std::int64_t region_side, int cap,
                                          std::int64_t n) {
  std::vector<std::int64_t> base;
  for (const auto& it : items) {
    base.push_back(widths ? it.w : it.h);
    if (rotations) base.push_back(widths ? it.h : it.w);
  }
  if (base.empty()) return {};
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  CandidateSizeSet expanded;
  try {
    expanded = expand_candidate_set(base, 1, n, region_side);
  } catch (const BudgetError&) {
    expanded.values = base;
  }
  std::vector<std::int64_t> vals;
  for (auto v : expanded.values)
    if (v > 0 && v <= region_side) vals.push_back(v);
  std::sort(vals.rbegin(), vals.rend());
  if (static_cast<int>(vals.size()) > cap) vals.resize(cap);
  return vals;
}

struct ContainerSearchOutcome {
  LayoutSolveResult best;
  bool any = false;
  bool truncated = false;
};

// Bounded layout search inside [x0, x0+w) x [y0, y0+h) of the knapsack.
ContainerSearchOutcome container_search(const KnapsackInstance& inst,
                                        const std::vector<Item>& eligible, std::int64_t x0,
                                        std::int64_t y0, std::int64_t w, std::int64_t h,
                                        const Knap2dOptions& opts) {
  ContainerSearchOutcome out;
  if (w <= 0 || h <= 0 || eligible.empty()) return out;
  const std::int64_t n = static_cast<std::int64_t>(eligible.size());
  auto ws = size_candidates(eligible, inst.rotations, true, w, opts.size_cap, n);
  auto hs = size_candidates(eligible, inst.rotations, false, h, opts.size_cap, n);
  if (ws.empty() || hs.empty()) return out;

  EnumerateOptions eopts;
  eopts.max_layouts = opts.layout_budget;
  eopts.truncate = true;
  auto enumerated = enumerate_layouts(w, h, opts.k_max, ws, hs, eopts);
  out.truncated = enumerated.truncated;

  KnapsackInstance sub = inst;
  sub.items = eligible;
  if (x0 + w > inst.n || y0 + h > inst.n) return out;
  LayoutSolveOptions solve_opts = opts.layout_solve;
  if (eligible.size() > 12) solve_opts.guess_cap = 0;  // guessing is a micro-scale luxury
  for (auto& layout : enumerated.layouts) {
    for (auto& c : layout.containers) {
      c.x += x0;
      c.y += y0;
    }
    try {
      auto res = solve_for_layout(sub, layout, opts.eps, solve_opts);
      if (!out.any || res.profit > out.best.profit) {
        out.best = std::move(res);
        out.any = true;
      }
    } catch (const BudgetError&) {
      out.truncated = true;  // keep the best found so far
    }
  }
  return out;
}

std::vector<Item> long_items(const std::vector<Item>& items, std::int64_t threshold) {
  std::vector<Item> out;
  for (const auto& it : items)
    if (it.long_side() >= threshold) out.push_back(it);
  return out;
}

std::vector<Item> short_items(const std::vector<Item>& items, std::int64_t threshold) {
  std::vector<Item> out;
  for (const auto& it : items)
    if (it.long_side() < threshold) out.push_back(it);
  return out;
}

// An L-instance keeps only items that are long in some direction; everything
// else is rejected by lpack, so filter first.
LInstance make_l_instance(const KnapsackInstance& inst, const std::vector<Item>& items,
                          std::int64_t wl, std::int64_t hl) {
  LInstance li;
  li.n = inst.n;
  li.wl = wl;
  li.hl = hl;
  for (const auto& it : items)
    if (2 * it.w > inst.n || 2 * it.h > inst.n) li.items.push_back(it);
  return li;
}

struct Branch {
  Packing packing;
  std::int64_t profit = -1;
  std::string name;
  LcParameters params;
  bool truncated = false;
};

Branch lpack_branch(const KnapsackInstance& inst, const LInstance& li, const Rat& eps,
                    const LpackPtasOptions& lpack_opts, const std::string& name) {
  Branch b;
  b.name = name;
  if (li.items.empty()) return b;
  LpackPtasOptions o = lpack_opts;
  if (eps < o.min_eps) o.min_eps = eps;
  try {
    auto got = lpack_ptas(li, eps, o);
    b.profit = got.best.profit;
    b.packing.region = inst.region();
    b.packing.placements = got.best.packing.placements;
  } catch (const BudgetError&) {
    b.truncated = true;
  }
  return b;
}

}  // namespace

Knap2dResult solve_2dgk_lc(const KnapsackInstance& inst, const Knap2dOptions& opts) {
  std::vector<Branch> branches;

  // Degenerate L: pure container search over the full knapsack.
  {
    Branch b;
    b.name = "containers";
    b.params = {0, inst.n, true};
    auto got = container_search(inst, inst.items, 0, 0, inst.n, inst.n, opts);
    if (got.any) {
      b.profit = got.best.profit;
      b.packing = got.best.packing;
      b.truncated = got.truncated;
    }
    branches.push_back(std::move(b));
  }

  // Full-square L over all long items.
  {
    auto li = make_l_instance(inst, inst.items, inst.n, inst.n);
    Branch b = lpack_branch(inst, li, opts.eps, opts.lpack, "l-full");
    b.params = {inst.n, inst.n / 2 + 1, false};
    branches.push_back(std::move(b));
  }

  // Boundary-L branches: guess ell over the distinct long sides > N/2.
  std::set<std::int64_t> thresholds;
  for (const auto& it : inst.items)
    if (2 * it.long_side() > inst.n) thresholds.insert(it.long_side());
  const std::int64_t boundary = ceil_mul(inst.n, opts.eps * opts.eps);
  for (auto ell : thresholds) {
    if (boundary <= 0 || 2 * boundary > inst.n) break;  // N' must stay in [0, N/2]
    Branch b;
    b.name = "l&c ell=" + std::to_string(ell);
    b.params = {boundary, ell, false};
    auto longs = long_items(inst.items, ell);
    auto li = make_l_instance(inst, longs, boundary, boundary);
    LpackPtasOptions lo = opts.lpack;
    if (opts.eps < lo.min_eps) lo.min_eps = opts.eps;
    std::int64_t lprofit = 0;
    std::vector<Placement> lplacements;
    if (!li.items.empty()) {
      try {
        auto lres = lpack_ptas(li, opts.eps, lo);
        lprofit = lres.best.profit;
        lplacements = lres.best.packing.placements;
      } catch (const BudgetError&) {
        b.truncated = true;
      }
    }
    auto shorts = short_items(inst.items, ell);
    auto got = container_search(inst, shorts, boundary, boundary, inst.n - boundary,
                                inst.n - boundary, opts);
    b.profit = lprofit + (got.any ? got.best.profit : 0);
    b.truncated = b.truncated || got.truncated;
    b.packing.region = inst.region();
    b.packing.placements = lplacements;
    if (got.any) {
      for (const auto& pl : got.best.packing.placements) b.packing.placements.push_back(pl);
    }
    branches.push_back(std::move(b));
  }

  Knap2dResult res;
  res.packing.region = inst.region();
  res.profit = 0;
  res.branch = "empty";
  for (auto& b : branches) {
    if (b.profit > res.profit) {
      res.profit = b.profit;
      res.packing = std::move(b.packing);
      res.branch = b.name;
      res.params = b.params;
    }
    res.budget_exhausted = res.budget_exhausted || b.truncated;
  }
  if (!inst.items.empty()) {
    auto choice = choose_thresholds(inst, opts.eps, opts.shrink);
    res.eps_large = choice.eps_large;
    res.eps_small = choice.eps_small;
  }
  return res;
}

Knap2dResult solve_2dgk_cardinality(const KnapsackInstance& inst, const Knap2dOptions& opts) {
  for (const auto& it : inst.items) {
    if (it.p != 1) throw PreconditionError("solve_2dgk_cardinality: profits must all be 1");
  }
  if (static_cast<std::int64_t>(inst.items.size()) <= opts.bf_max_items &&
      inst.n <= opts.bf_max_n) {
    BruteForceBudget bf;
    bf.max_items = opts.bf_max_items;
    bf.max_n = opts.bf_max_n;
    auto res = brute_force_2dgk(inst, bf);
    res.branch = "brute-force";
    return res;
  }

  // Large items (both sides > eps N) cost at most a 1+eps cardinality factor.
  std::vector<Item> kept;
  const Rat eps_n = opts.eps * Rat(inst.n);
  for (const auto& it : inst.items)
    if (!(Rat(it.w) > eps_n && Rat(it.h) > eps_n)) kept.push_back(it);

  std::vector<Branch> branches;
  {
    KnapsackInstance trimmed = inst;
    trimmed.items = kept;
    auto li = make_l_instance(trimmed, kept, inst.n, inst.n);
    branches.push_back(lpack_branch(trimmed, li, opts.eps, opts.lpack, "l-full"));
  }
  const std::int64_t reduced =
      (Rat(inst.n) * Rat(opts.eps.den(), opts.eps.den() + opts.eps.num())).floor();
  {
    Branch b;
    b.name = "containers-wide";
    KnapsackInstance trimmed = inst;
    trimmed.items = kept;
    auto got = container_search(trimmed, kept, 0, 0, inst.n, reduced, opts);
    if (got.any) {
      b.profit = got.best.profit;
      b.packing = got.best.packing;
      b.truncated = got.truncated;
    }
    branches.push_back(std::move(b));
  }
  {
    Branch b;
    b.name = "containers-tall";
    KnapsackInstance trimmed = inst;
    trimmed.items = kept;
    auto got = container_search(trimmed, kept, 0, 0, reduced, inst.n, opts);
    if (got.any) {
      b.profit = got.best.profit;
      b.packing = got.best.packing;
      b.truncated = got.truncated;
    }
    branches.push_back(std::move(b));
  }

  Knap2dResult res;
  res.packing.region = inst.region();
  res.profit = 0;
  res.branch = "empty";
  for (auto& b : branches) {
    if (b.profit > res.profit) {
      res.profit = b.profit;
      res.packing = std::move(b.packing);
      res.branch = b.name;
    }
    res.budget_exhausted = res.budget_exhausted || b.truncated;
  }
  if (!inst.items.empty()) {
    auto choice = choose_thresholds(inst, opts.eps, opts.shrink);
    res.eps_large = choice.eps_large;
    res.eps_small = choice.eps_small;
  }
  return res;
}

}  // namespace packtk
