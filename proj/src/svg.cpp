// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "packtk/svg.hpp"

#include <algorithm>
#include <sstream>

namespace packtk {

namespace {

// FNV-1a, reduced to a hue; stable across platforms.
int hue_of(const std::string& id) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : id) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return static_cast<int>(h % 360);
}

}  // namespace

std::string render_svg(const Instance& inst, const Packing& packing, const SvgStyle& style) {
  auto report = validate_packing(inst, packing);
  if (!report.feasible())
    throw PreconditionError("render_svg: refusing an infeasible packing");

  const auto& items = instance_items(inst);
  auto idx = index_by_id(items);

  std::int64_t rw = 0, rh = 0;
  const Region region = packing.region;
  if (const auto* box = std::get_if<BoxRegion>(&region)) {
    rw = box->w;
    rh = box->h;
  } else if (const auto* l = std::get_if<LRegion>(&region)) {
    rw = l->n;
    rh = l->n;
  } else {
    rw = std::get<StripRegion>(region).w;
    rh = std::max<std::int64_t>(1, packing_height(items, packing));
  }

  const int u = style.unit;
  std::ostringstream svg;
  auto y_flip = [&](std::int64_t y, std::int64_t h) { return (rh - y - h) * u; };
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << rw * u + 2 << "\" height=\""
      << rh * u + 2 << "\" viewBox=\"-1 -1 " << rw * u + 2 << " " << rh * u + 2 << "\">\n";
  svg << "  <g fill=\"none\" stroke=\"#333\" stroke-width=\"1\">\n";
  if (const auto* l = std::get_if<LRegion>(&region)) {
    svg << "    <rect x=\"0\" y=\"" << (l->n - l->hl) * u << "\" width=\"" << l->n * u
        << "\" height=\"" << l->hl * u << "\"/>\n";
    svg << "    <rect x=\"0\" y=\"0\" width=\"" << l->wl * u << "\" height=\"" << l->n * u
        << "\"/>\n";
  } else {
    svg << "    <rect x=\"0\" y=\"0\" width=\"" << rw * u << "\" height=\"" << rh * u
        << "\"/>\n";
  }
  svg << "  </g>\n";

  std::vector<Placement> sorted = packing.placements;
  std::sort(sorted.begin(), sorted.end(), [](const Placement& a, const Placement& b) {
    return a.item_id < b.item_id;
  });
  for (const auto& pl : sorted) {
    const Item& it = items[idx.at(pl.item_id)];
    auto [w, h] = placed_extent(it, pl);
    svg << "  <rect x=\"" << pl.x * u << "\" y=\"" << y_flip(pl.y, h) << "\" width=\"" << w * u
        << "\" height=\"" << h * u << "\" fill=\"hsl(" << hue_of(pl.item_id)
        << ",60%,70%)\" stroke=\"#222\" stroke-width=\"1\"/>\n";
    if (style.labels) {
      svg << "  <text x=\"" << pl.x * u + 3 << "\" y=\"" << y_flip(pl.y, h) + 13
          << "\" font-size=\"11\" font-family=\"monospace\">" << pl.item_id << ":" << it.p
          << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace packtk
