// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "packtk/gen.hpp"

#include <algorithm>

namespace packtk {

namespace {

Item gen_item(Rng& rng, const GenSpec& spec, std::int64_t index) {
  const std::int64_t r = spec.region;
  Item it;
  it.id = "i" + std::to_string(index);
  if (spec.dist == "small") {
    const std::int64_t cap = std::max<std::int64_t>(1, r / 5);
    it.w = rng.uniform(1, cap);
    it.h = rng.uniform(1, cap);
  } else if (spec.dist == "long-mix") {
    if (rng.chance(50)) {
      const bool horizontal = rng.chance(50);
      const std::int64_t long_side = rng.uniform(r / 2 + 1, r);
      const std::int64_t short_side = rng.uniform(1, std::max<std::int64_t>(1, r / 4));
      it.w = horizontal ? long_side : short_side;
      it.h = horizontal ? short_side : long_side;
    } else {
      it.w = rng.uniform(1, std::max<std::int64_t>(1, r / 2));
      it.h = rng.uniform(1, std::max<std::int64_t>(1, r / 2));
    }
  } else if (spec.dist == "corridor") {
    const bool horizontal = rng.chance(50);
    const std::int64_t thin = rng.uniform(1, std::max<std::int64_t>(1, r / 10));
    const std::int64_t run = rng.uniform(r / 4, r);
    it.w = horizontal ? run : thin;
    it.h = horizontal ? thin : run;
  } else {
    it.w = rng.uniform(1, r);
    it.h = rng.uniform(1, r);
  }
  it.p = rng.uniform(1, spec.max_profit);
  it.rotatable = true;
  return it;
}

}  // namespace

Instance generate_instance(const GenSpec& spec) {
  Rng rng(spec.seed);
  if (spec.kind == "knapsack") {
    KnapsackInstance inst;
    inst.n = spec.region;
    inst.rotations = spec.rotations;
    for (std::int64_t i = 0; i < spec.n_items; ++i) inst.items.push_back(gen_item(rng, spec, i));
    return inst;
  }
  if (spec.kind == "strip") {
    StripInstance inst;
    inst.w = spec.region;
    for (std::int64_t i = 0; i < spec.n_items; ++i) {
      Item it = gen_item(rng, spec, i);
      it.w = std::min(it.w, inst.w);
      inst.items.push_back(std::move(it));
    }
    return inst;
  }
  if (spec.kind == "lpack") {
    LInstance inst;
    inst.n = spec.region;
    inst.wl = rng.uniform(0, inst.n);
    inst.hl = rng.uniform(0, inst.n);
    for (std::int64_t i = 0; i < spec.n_items; ++i) {
      const bool horizontal = rng.chance(50);
      Item it;
      it.id = "i" + std::to_string(i);
      const std::int64_t long_side = rng.uniform(inst.n / 2 + 1, inst.n);
      const std::int64_t short_side = rng.uniform(1, std::max<std::int64_t>(1, inst.n / 2));
      it.w = horizontal ? long_side : short_side;
      it.h = horizontal ? short_side : long_side;
      it.p = rng.uniform(1, spec.max_profit);
      inst.items.push_back(std::move(it));
    }
    return inst;
  }
  throw ParseError("generate_instance: unknown kind " + spec.kind);
}

}  // namespace packtk
