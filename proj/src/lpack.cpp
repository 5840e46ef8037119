// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "packtk/lpack.hpp"

#include <algorithm>
#include <set>

namespace packtk {

void lpack_split(const LInstance& inst, std::vector<Item>* horizontal,
                 std::vector<Item>* vertical) {
  horizontal->clear();
  vertical->clear();
  for (const auto& it : inst.items) {
    const bool wide = 2 * it.w > inst.n;
    const bool tall = 2 * it.h > inst.n;
    if (!wide && !tall)
      throw PreconditionError("lpack: item is long in neither direction: " + it.id);
    if (inst.is_horizontal(it))
      horizontal->push_back(it);
    else
      vertical->push_back(it);
  }
}

namespace {

std::vector<Item> sorted_desc_width(std::vector<Item> v) {
  std::sort(v.begin(), v.end(), [](const Item& a, const Item& b) {
    if (a.w != b.w) return a.w > b.w;
    if (a.h != b.h) return a.h > b.h;
    return a.id < b.id;
  });
  return v;
}

std::vector<Item> sorted_desc_height(std::vector<Item> v) {
  std::sort(v.begin(), v.end(), [](const Item& a, const Item& b) {
    if (a.h != b.h) return a.h > b.h;
    if (a.w != b.w) return a.w > b.w;
    return a.id < b.id;
  });
  return v;
}

// One level of the recursive candidate construction over the lengths of one
// orientation (heights for T, widths for R).
std::vector<Rat> build_levels(const std::vector<std::int64_t>& lengths, std::int64_t n,
                              std::int64_t big_n, std::int64_t inv_eps, int level,
                              std::int64_t max_coords) {
  const Rat limit(big_n);
  auto prune_insert = [&](std::set<Rat>& dst, const Rat& v) {
    if (v >= Rat(0) && v <= limit) {
      dst.insert(v);
      if (static_cast<std::int64_t>(dst.size()) > max_coords)
        throw BudgetError("build_candidate_coords: candidate budget exceeded");
    }
  };

  std::set<Rat> cur;
  // T^1: a * len/(2n), 1 <= a <= 4n^2
  for (auto len : lengths) {
    const Rat step = Rat(len, 2 * n);
    const std::int64_t amax = 4 * n * n;
    for (std::int64_t a = 1; a <= amax; ++a) {
      const Rat v = Rat(a) * step;
      if (v > limit) break;
      prune_insert(cur, v);
    }
  }
  for (int r = 2; r <= level; ++r) {
    // base part: a * len/2 for 0 <= a <= 2n-1
    std::set<Rat> base;
    base.insert(Rat(0));
    for (auto len : lengths) {
      for (std::int64_t a = 0; a <= 2 * n - 1; ++a) {
        const Rat v = Rat(a) * Rat(len, 2);
        if (v > limit) break;
        prune_insert(base, v);
      }
    }
    // plus sums of <= inv_eps - 1 item lengths
    std::set<Rat> with_lengths = base;
    for (std::int64_t round = 0; round < inv_eps - 1; ++round) {
      if (static_cast<std::int64_t>(with_lengths.size() * lengths.size()) > 4 * max_coords)
        throw BudgetError("build_candidate_coords: closure work exceeds budget");
      std::set<Rat> next = with_lengths;
      for (const auto& v : with_lengths)
        for (auto len : lengths) prune_insert(next, v + Rat(len));
      if (next == with_lengths) break;
      with_lengths = std::move(next);
    }
    // plus sums of <= inv_eps previous-level values
    std::set<Rat> acc = with_lengths;
    for (std::int64_t round = 0; round < inv_eps; ++round) {
      if (static_cast<std::int64_t>(acc.size() * cur.size()) > 4 * max_coords)
        throw BudgetError("build_candidate_coords: closure work exceeds budget");
      std::set<Rat> next = acc;
      for (const auto& v : acc)
        for (const auto& s : cur) prune_insert(next, v + s);
      if (next == acc) break;
      acc = std::move(next);
    }
    // nested levels: T^{r-1} subset of T^r by taking a = 0, b = 0, c = 1
    for (const auto& s : cur) acc.insert(s);
    cur = std::move(acc);
  }
  cur.insert(Rat(0));
  return {cur.begin(), cur.end()};
}

}  // namespace

CandidateCoords build_candidate_coords(const LInstance& inst, const Rat& eps, int r_hor,
                                       int r_ver, const LpackBudget& budget) {
  if (!(eps > Rat(0) && eps <= Rat(1)))
    throw PreconditionError("build_candidate_coords: need 0 < eps <= 1");
  const std::int64_t inv_eps = (Rat(1) / eps).ceil();  // eps snapped to 1/ceil(1/eps)
  if (r_hor < 1 || r_ver < 1 || r_hor > inv_eps || r_ver > inv_eps)
    throw PreconditionError("build_candidate_coords: level out of range");
  std::vector<Item> hor, ver;
  lpack_split(inst, &hor, &ver);
  const std::int64_t n = std::max<std::int64_t>(1, static_cast<std::int64_t>(inst.items.size()));

  CandidateCoords out;
  out.r_hor = r_hor;
  out.r_ver = r_ver;
  std::vector<std::int64_t> hor_heights, ver_widths;
  for (const auto& it : hor) hor_heights.push_back(it.h);
  for (const auto& it : ver) ver_widths.push_back(it.w);
  out.tops = build_levels(hor_heights, n, inst.n, inv_eps, r_hor, budget.max_coords);
  out.rights = build_levels(ver_widths, n, inst.n, inv_eps, r_ver, budget.max_coords);
  if (out.tops.empty() || out.tops.front() != Rat(0)) out.tops.insert(out.tops.begin(), Rat(0));
  if (out.rights.empty() || out.rights.front() != Rat(0))
    out.rights.insert(out.rights.begin(), Rat(0));
  return out;
}

LpackResult lpack_dp(const LInstance& inst, const std::vector<Rat>& tops,
                     const std::vector<Rat>& rights, const LpackBudget& budget) {
  if (tops.empty() || rights.empty() || tops.front() != Rat(0) || rights.front() != Rat(0))
    throw PreconditionError("lpack_dp: candidate arrays must be sorted with 0 first");
  std::vector<Item> hor, ver;
  lpack_split(inst, &hor, &ver);
  hor = sorted_desc_width(hor);
  ver = sorted_desc_height(ver);

  const std::int64_t nh = static_cast<std::int64_t>(hor.size());
  const std::int64_t nv = static_cast<std::int64_t>(ver.size());
  const std::int64_t nt = static_cast<std::int64_t>(tops.size());
  const std::int64_t nr = static_cast<std::int64_t>(rights.size());
  const std::int64_t states = (nh + 1) * (nv + 1) * nt * nr;
  if (states > budget.max_dp_states) throw BudgetError("lpack_dp: state space exceeds budget");

  // next_top[i][t]: least index t' with tops[t'] >= tops[t] + h(hor[i]), or -1.
  auto build_next = [](const std::vector<Rat>& coords, const std::vector<Item>& items,
                       bool use_height) {
    std::vector<std::vector<std::int32_t>> next(items.size(),
                                                std::vector<std::int32_t>(coords.size(), -1));
    for (std::size_t i = 0; i < items.size(); ++i) {
      const Rat len(use_height ? items[i].h : items[i].w);
      std::size_t p = 0;
      for (std::size_t t = 0; t < coords.size(); ++t) {
        const Rat want = coords[t] + len;
        if (p < t) p = t;
        while (p < coords.size() && coords[p] < want) ++p;
        next[i][t] = p < coords.size() ? static_cast<std::int32_t>(p) : -1;
      }
    }
    return next;
  };
  const auto next_top = build_next(tops, hor, true);
  const auto next_right = build_next(rights, ver, false);

  // Largest candidate index usable as an item's own coordinate.
  std::int64_t top_cap = nt;  // tops[idx] <= hl allowed up to top_cap-1
  while (top_cap > 0 && tops[top_cap - 1] > Rat(inst.hl)) --top_cap;
  std::int64_t right_cap = nr;
  while (right_cap > 0 && rights[right_cap - 1] > Rat(inst.wl)) --right_cap;

  std::vector<std::int64_t> value(states, 0);
  std::vector<std::uint8_t> choice(states, 0);  // 0 none, 1 skip-h, 2 skip-v, 3 place-h, 4 place-v
  auto at = [&](std::int64_t i, std::int64_t t, std::int64_t j, std::int64_t r) {
    return ((i * (nv + 1) + j) * nt + t) * nr + r;
  };

  for (std::int64_t i = nh; i >= 0; --i) {
    for (std::int64_t j = nv; j >= 0; --j) {
      for (std::int64_t t = nt - 1; t >= 0; --t) {
        for (std::int64_t r = nr - 1; r >= 0; --r) {
          std::int64_t best = 0;
          std::uint8_t ch = 0;
          if (i < nh) {
            const std::int64_t v = value[at(i + 1, t, j, r)];
            if (v > best) {
              best = v;
              ch = 1;
            }
            const std::int32_t tp = next_top[i][t];
            if (tp >= 0 && tp < top_cap && Rat(hor[i].w) <= Rat(inst.n) - rights[r]) {
              const std::int64_t cand = hor[i].p + value[at(i + 1, tp, j, r)];
              if (cand > best) {
                best = cand;
                ch = 3;
              }
            }
          }
          if (j < nv) {
            const std::int64_t v = value[at(i, t, j + 1, r)];
            if (v > best) {
              best = v;
              ch = 2;
            }
            const std::int32_t rp = next_right[j][r];
            if (rp >= 0 && rp < right_cap && Rat(ver[j].h) <= Rat(inst.n) - tops[t]) {
              const std::int64_t cand = ver[j].p + value[at(i, t, j + 1, rp)];
              if (cand > best) {
                best = cand;
                ch = 4;
              }
            }
          }
          const std::int64_t s = at(i, t, j, r);
          value[s] = best;
          choice[s] = ch;
        }
      }
    }
  }

  // Backtrack the chosen subsets, then emit the compacted canonical packing
  // (prefix-sum integer coordinates; only smaller than the DP's T/R values).
  std::vector<const Item*> chosen_h, chosen_v;
  {
    std::int64_t i = 0, j = 0, t = 0, r = 0;
    while (i < nh || j < nv) {
      switch (choice[at(i, t, j, r)]) {
        case 1:
          ++i;
          break;
        case 2:
          ++j;
          break;
        case 3:
          chosen_h.push_back(&hor[i]);
          t = next_top[i][t];
          ++i;
          break;
        case 4:
          chosen_v.push_back(&ver[j]);
          r = next_right[j][r];
          ++j;
          break;
        default:
          i = nh;
          j = nv;
          break;
      }
    }
  }

  LpackResult res;
  res.packing.region = inst.region();
  res.profit = value[at(0, 0, 0, 0)];
  std::int64_t y = 0;
  for (const auto* it : chosen_h) {
    res.packing.placements.push_back({it->id, inst.n - it->w, y, false});
    y += it->h;
  }
  std::int64_t x = 0;
  for (const auto* it : chosen_v) {
    res.packing.placements.push_back({it->id, x, inst.n - it->h, false});
    x += it->w;
  }
  return res;
}

LpackResult lpack_exact(const LInstance& inst, const LpackBudget& budget) {
  std::vector<Rat> coords;
  coords.reserve(inst.n + 1);
  for (std::int64_t v = 0; v <= inst.n; ++v) coords.push_back(Rat(v));
  return lpack_dp(inst, coords, coords, budget);
}

LpackPtasResult lpack_ptas(const LInstance& inst, const Rat& eps, const LpackPtasOptions& opts) {
  if (eps < opts.min_eps)
    throw PreconditionError("lpack_ptas: eps below the configured minimum");
  const std::int64_t inv_eps = (Rat(1) / eps).ceil();

  // Levels are nested; skip duplicates of the previous level.
  std::vector<std::pair<int, std::vector<Rat>>> t_levels, r_levels;
  for (int r = 1; r <= inv_eps; ++r) {
    auto cc = build_candidate_coords(inst, eps, r, r, opts.budget);
    if (t_levels.empty() || t_levels.back().second != cc.tops) t_levels.push_back({r, cc.tops});
    if (r_levels.empty() || r_levels.back().second != cc.rights)
      r_levels.push_back({r, cc.rights});
  }

  LpackPtasResult out;
  bool first = true;
  for (const auto& [rh, tops] : t_levels) {
    for (const auto& [rv, rights] : r_levels) {
      auto got = lpack_dp(inst, tops, rights, opts.budget);
      if (first || got.profit > out.best.profit) {
        out.best = std::move(got);
        out.r_hor = rh;
        out.r_ver = rv;
        first = false;
      }
    }
  }
  return out;
}

}  // namespace packtk
