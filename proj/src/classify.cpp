// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "packtk/classify.hpp"

#include <algorithm>

namespace packtk {

Classification classify_items(const KnapsackInstance& inst, const Rat& eps_large,
                              const Rat& eps_small) {
  if (!(eps_large > eps_small && eps_small > Rat(0) && Rat(1) >= eps_large))
    throw PreconditionError("classify_items: need 1 >= eps_large > eps_small > 0");
  Classification c{eps_large, eps_small, {}};
  c.labels.reserve(inst.items.size());
  const Rat big = eps_large * Rat(inst.n);
  const Rat small = eps_small * Rat(inst.n);
  for (const auto& it : inst.items) {
    const bool w_small = Rat(it.w) <= small;
    const bool h_small = Rat(it.h) <= small;
    const bool w_big = Rat(it.w) > big;
    const bool h_big = Rat(it.h) > big;
    ItemClass label;
    if (w_small && h_small)
      label = ItemClass::Small;
    else if (w_big && h_big)
      label = ItemClass::Large;
    else if (w_big && h_small)
      label = ItemClass::Horizontal;
    else if (h_big && w_small)
      label = ItemClass::Vertical;
    else
      label = ItemClass::Intermediate;
    c.labels.push_back(label);
  }
  return c;
}

ThresholdChoice choose_thresholds(const KnapsackInstance& inst, const Rat& eps,
                                  const ShrinkMap& shrink) {
  if (!(eps > Rat(0) && eps < Rat(1)))
    throw PreconditionError("choose_thresholds: need 0 < eps < 1");
  ShrinkMap f = shrink ? shrink : [](const Rat& x) { return x * x; };

  const std::int64_t levels = (Rat(2) / eps).ceil() + 1;
  std::vector<Rat> chain;
  chain.reserve(levels + 1);
  Rat cur = f(eps);
  for (std::int64_t i = 0; i < levels; ++i) {
    if (!(cur < (chain.empty() ? eps : chain.back()) && cur > Rat(0)))
      throw PreconditionError("choose_thresholds: shrink map must satisfy 0 < f(x) < x");
    chain.push_back(cur);
    // Once the threshold drops below one length unit every further band is
    // empty of integer side lengths; one more level closes an empty band and
    // the averaging guarantee is preserved without exploding denominators.
    if (cur * Rat(inst.n) < Rat(1) && i + 1 < levels) {
      chain.push_back(f(cur));
      break;
    }
    cur = f(cur);
  }
  if (chain.size() == 1) chain.push_back(f(chain.back()));

  ThresholdChoice best;
  bool have = false;
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    const Rat hi = chain[j] * Rat(inst.n);
    const Rat lo = chain[j + 1] * Rat(inst.n);
    std::int64_t profit = 0;
    for (const auto& it : inst.items) {
      const bool w_in = Rat(it.w) > lo && Rat(it.w) <= hi;
      const bool h_in = Rat(it.h) > lo && Rat(it.h) <= hi;
      if (w_in || h_in) profit += it.p;
    }
    if (!have || profit < best.intermediate_profit) {
      best = {chain[j], chain[j + 1], profit, static_cast<int>(j + 1)};
      have = true;
    }
  }
  return best;
}

}  // namespace packtk
