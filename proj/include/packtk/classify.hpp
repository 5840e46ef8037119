// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "packtk/core.hpp"

namespace packtk {

// Five-way size classification with thresholds eps_large > eps_small.
enum class ItemClass { Small, Large, Horizontal, Vertical, Intermediate };

struct Classification {
  Rat eps_large;
  Rat eps_small;
  std::vector<ItemClass> labels;  // parallel to instance.items

  bool is_skewed(std::size_t i) const {
    return labels[i] == ItemClass::Horizontal || labels[i] == ItemClass::Vertical;
  }
};

// Labels each item by the half-open threshold rules:
//   small:        w,h <= eps_small*N
//   large:        w,h >  eps_large*N
//   horizontal:   w > eps_large*N and h <= eps_small*N
//   vertical:     h > eps_large*N and w <= eps_small*N
//   intermediate: otherwise
Classification classify_items(const KnapsackInstance& inst, const Rat& eps_large,
                              const Rat& eps_small);

using ShrinkMap = std::function<Rat(const Rat&)>;

struct ThresholdChoice {
  Rat eps_large;
  Rat eps_small;
  std::int64_t intermediate_profit = 0;  // profit of items with a side in (eps_small*N, eps_large*N]
  int level = 0;                         // chosen j in the eps_j chain
};

// Scans the 2/eps + 1 levels eps_1 = f(eps), eps_{i+1} = f(eps_i) and returns
// the consecutive pair whose band holds the least profit; that profit is at
// most eps * p(items) by averaging. Default shrink map is f(x) = x^2.
ThresholdChoice choose_thresholds(const KnapsackInstance& inst, const Rat& eps,
                                  const ShrinkMap& shrink = {});

}  // namespace packtk
