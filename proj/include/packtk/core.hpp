// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "packtk/rational.hpp"

namespace packtk {

// Errors ---------------------------------------------------------------------

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when an operation would exceed its configured resource budget
// (DP cells, enumerated layouts, candidate coordinates, oracle sizes).
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Items and placements -------------------------------------------------------

struct Item {
  std::string id;
  std::int64_t w = 0;
  std::int64_t h = 0;
  std::int64_t p = 0;
  bool rotatable = true;

  std::int64_t area() const { return w * h; }
  std::int64_t long_side() const { return w > h ? w : h; }
};

struct Placement {
  std::string item_id;
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool rotated = false;
};

// Target regions -------------------------------------------------------------

struct BoxRegion {
  std::int64_t w = 0;
  std::int64_t h = 0;
};

// ([0,N]x[0,hL]) U ([0,wL]x[0,N])
struct LRegion {
  std::int64_t n = 0;
  std::int64_t wl = 0;
  std::int64_t hl = 0;
};

struct StripRegion {
  std::int64_t w = 0;  // fixed width, unbounded height
};

using Region = std::variant<BoxRegion, LRegion, StripRegion>;

struct Packing {
  Region region;
  std::vector<Placement> placements;
};

// Instances ------------------------------------------------------------------

enum class ProfitMode { Weighted, Cardinality };

struct KnapsackInstance {
  std::int64_t n = 0;  // side length of the N x N knapsack
  std::vector<Item> items;
  ProfitMode mode = ProfitMode::Weighted;
  bool rotations = false;

  bool rotation_allowed(const Item& it) const { return rotations && it.rotatable; }
  Region region() const { return BoxRegion{n, n}; }
};

struct StripInstance {
  std::int64_t w = 0;
  std::vector<Item> items;

  Region region() const { return StripRegion{w}; }
};

// Long items only: horizontal have w > N/2, vertical have h > N/2.
struct LInstance {
  std::int64_t n = 0;
  std::int64_t wl = 0;
  std::int64_t hl = 0;
  std::vector<Item> items;

  Region region() const { return LRegion{n, wl, hl}; }
  bool is_horizontal(const Item& it) const {
    return 2 * it.w > n && (2 * it.h <= n || it.w >= it.h);
  }
};

using Instance = std::variant<KnapsackInstance, StripInstance, LInstance>;

const std::vector<Item>& instance_items(const Instance& inst);
Region instance_region(const Instance& inst);

// Validation -----------------------------------------------------------------

enum class ViolationKind { OutOfRegion, DuplicateItem, Overlap, IllegalRotation };

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<std::string> structural;  // unknown ids and the like
  std::vector<Violation> violations;
  bool feasible() const { return structural.empty() && violations.empty(); }
};

ValidationReport validate_packing(const Instance& inst, const Packing& packing);

// Effective extent of a placement given its item (swapped when rotated).
inline std::pair<std::int64_t, std::int64_t> placed_extent(const Item& it, const Placement& pl) {
  return pl.rotated ? std::pair{it.h, it.w} : std::pair{it.w, it.h};
}

std::int64_t packing_profit(const std::vector<Item>& items, const Packing& packing);
std::int64_t packing_height(const std::vector<Item>& items, const Packing& packing);
std::int64_t total_area(const std::vector<Item>& items);
std::int64_t total_profit(const std::vector<Item>& items);

// Lookup table id -> item index; throws ParseError on duplicate ids.
std::map<std::string, std::size_t> index_by_id(const std::vector<Item>& items);

}  // namespace packtk
