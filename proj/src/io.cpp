// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "packtk/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace packtk {

using nlohmann::json;

namespace {

std::int64_t get_int(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ParseError("missing field: " + key);
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw ParseError("field must be an integer: " + key);
  return v.get<std::int64_t>();
}

std::vector<Item> parse_items(const json& j, std::int64_t max_w, std::int64_t max_h,
                              bool rotations) {
  if (!j.contains("items") || !j.at("items").is_array())
    throw ParseError("missing items array");
  std::vector<Item> items;
  for (const auto& ij : j.at("items")) {
    Item it;
    if (!ij.contains("id")) throw ParseError("item without id");
    it.id = ij.at("id").is_string() ? ij.at("id").get<std::string>()
                                    : std::to_string(ij.at("id").get<std::int64_t>());
    it.w = get_int(ij, "w");
    it.h = get_int(ij, "h");
    it.p = get_int(ij, "p");
    it.rotatable = ij.value("rot", true);
    if (it.w < 1 || it.h < 1) throw ParseError("item " + it.id + ": zero or negative dimension");
    if (it.p < 0) throw ParseError("item " + it.id + ": negative profit");
    const bool fits = it.w <= max_w && it.h <= max_h;
    const bool fits_rotated = rotations && it.rotatable && it.h <= max_w && it.w <= max_h;
    if (!fits && !fits_rotated)
      throw ParseError("item " + it.id + ": larger than the region in every orientation");
    items.push_back(std::move(it));
  }
  index_by_id(items);  // throws on duplicates
  return items;
}

json items_json(const std::vector<Item>& items) {
  json arr = json::array();
  for (const auto& it : items) {
    json ij;
    ij["id"] = it.id;
    ij["w"] = it.w;
    ij["h"] = it.h;
    ij["p"] = it.p;
    if (!it.rotatable) ij["rot"] = false;
    arr.push_back(std::move(ij));
  }
  return arr;
}

}  // namespace

Instance parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance: invalid JSON: ") + e.what());
  }
  const std::string kind = j.value("kind", "");
  if (kind == "knapsack") {
    KnapsackInstance inst;
    inst.n = get_int(j, "N");
    if (inst.n < 1) throw ParseError("knapsack: N must be positive");
    inst.rotations = j.value("rotations", false);
    const std::string mode = j.value("mode", "weighted");
    if (mode == "weighted")
      inst.mode = ProfitMode::Weighted;
    else if (mode == "cardinality")
      inst.mode = ProfitMode::Cardinality;
    else
      throw ParseError("knapsack: unknown mode " + mode);
    inst.items = parse_items(j, inst.n, inst.n, inst.rotations);
    if (inst.mode == ProfitMode::Cardinality) {
      for (const auto& it : inst.items)
        if (it.p != 1) throw ParseError("cardinality mode requires unit profits (item " +
                                        it.id + ")");
    }
    return inst;
  }
  if (kind == "strip") {
    StripInstance inst;
    inst.w = get_int(j, "W");
    if (inst.w < 1) throw ParseError("strip: W must be positive");
    inst.items = parse_items(j, inst.w, INT64_MAX, false);
    return inst;
  }
  if (kind == "lpack") {
    LInstance inst;
    inst.n = get_int(j, "N");
    inst.wl = get_int(j, "wL");
    inst.hl = get_int(j, "hL");
    if (inst.n < 1 || inst.wl < 0 || inst.hl < 0 || inst.wl > inst.n || inst.hl > inst.n)
      throw ParseError("lpack: need N >= 1 and 0 <= wL,hL <= N");
    inst.items = parse_items(j, inst.n, inst.n, false);
    for (const auto& it : inst.items) {
      if (2 * it.w <= inst.n && 2 * it.h <= inst.n)
        throw ParseError("lpack: item " + it.id + " is long in neither direction");
    }
    return inst;
  }
  throw ParseError("unknown instance kind: '" + kind + "'");
}

std::string serialize_instance(const Instance& inst) {
  json j;
  if (const auto* k = std::get_if<KnapsackInstance>(&inst)) {
    j["kind"] = "knapsack";
    j["N"] = k->n;
    j["rotations"] = k->rotations;
    j["mode"] = k->mode == ProfitMode::Weighted ? "weighted" : "cardinality";
    j["items"] = items_json(k->items);
  } else if (const auto* s = std::get_if<StripInstance>(&inst)) {
    j["kind"] = "strip";
    j["W"] = s->w;
    j["items"] = items_json(s->items);
  } else {
    const auto& l = std::get<LInstance>(inst);
    j["kind"] = "lpack";
    j["N"] = l.n;
    j["wL"] = l.wl;
    j["hL"] = l.hl;
    j["items"] = items_json(l.items);
  }
  return j.dump(2) + "\n";
}

Layout parse_layout_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("layout: invalid JSON: ") + e.what());
  }
  if (!j.contains("containers") || !j.at("containers").is_array())
    throw ParseError("layout: missing containers array");
  Layout layout;
  for (const auto& cj : j.at("containers")) {
    Container c;
    const std::string kind = cj.value("kind", "");
    if (kind == "horizontal")
      c.kind = ContainerKind::Horizontal;
    else if (kind == "vertical")
      c.kind = ContainerKind::Vertical;
    else if (kind == "area")
      c.kind = ContainerKind::Area;
    else
      throw ParseError("layout: unknown container kind '" + kind + "'");
    c.x = get_int(cj, "x");
    c.y = get_int(cj, "y");
    c.w = get_int(cj, "w");
    c.h = get_int(cj, "h");
    if (c.w < 1 || c.h < 1) throw ParseError("layout: container with empty side");
    if (cj.contains("eps")) c.eps = Rat::parse(cj.at("eps").get<std::string>());
    layout.containers.push_back(std::move(c));
  }
  return layout;
}

std::string serialize_layout(const Layout& layout) {
  json arr = json::array();
  for (const auto& c : layout.containers) {
    json cj;
    cj["kind"] = c.kind == ContainerKind::Horizontal
                     ? "horizontal"
                     : (c.kind == ContainerKind::Vertical ? "vertical" : "area");
    cj["x"] = c.x;
    cj["y"] = c.y;
    cj["w"] = c.w;
    cj["h"] = c.h;
    if (c.eps) cj["eps"] = c.eps->str();
    arr.push_back(std::move(cj));
  }
  json j;
  j["containers"] = std::move(arr);
  return j.dump(2) + "\n";
}

Packing parse_packing_text(const std::string& text, const Instance& inst) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("packing: invalid JSON: ") + e.what());
  }
  Packing packing;
  packing.region = instance_region(inst);
  if (!j.contains("placements") || !j.at("placements").is_array())
    throw ParseError("packing: missing placements array");
  for (const auto& pj : j.at("placements")) {
    Placement pl;
    pl.item_id = pj.at("id").is_string() ? pj.at("id").get<std::string>()
                                         : std::to_string(pj.at("id").get<std::int64_t>());
    pl.x = get_int(pj, "x");
    pl.y = get_int(pj, "y");
    pl.rotated = pj.value("rotated", false);
    packing.placements.push_back(std::move(pl));
  }
  return packing;
}

std::string serialize_packing(const Packing& packing) {
  json arr = json::array();
  for (const auto& pl : packing.placements) {
    json pj;
    pj["id"] = pl.item_id;
    pj["x"] = pl.x;
    pj["y"] = pl.y;
    pj["rotated"] = pl.rotated;
    arr.push_back(std::move(pj));
  }
  json j;
  j["placements"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

Instance load_instance(const std::string& path) { return parse_instance_text(read_file(path)); }
Layout load_layout(const std::string& path) { return parse_layout_text(read_file(path)); }
Packing load_packing(const std::string& path, const Instance& inst) {
  return parse_packing_text(read_file(path), inst);
}

}  // namespace packtk
