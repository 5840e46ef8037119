// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "packtk/bench.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "packtk/gen.hpp"
#include "packtk/io.hpp"
#include "packtk/lpack.hpp"
#include "packtk/nfdh.hpp"
#include "packtk/strip.hpp"

namespace packtk {

using nlohmann::json;

SolveOutcome run_solver(const Instance& inst, const std::string& solver, const Rat& eps,
                        const Knap2dOptions& opts) {
  SolveOutcome out;
  if (const auto* k = std::get_if<KnapsackInstance>(&inst)) {
    Knap2dOptions o = opts;
    o.eps = eps;
    if (solver == "lc") {
      auto res = solve_2dgk_lc(*k, o);
      out.packing = res.packing;
      out.value = res.profit;
      out.budget_exhausted = res.budget_exhausted;
      out.detail = res.branch + " eps_large=" + res.eps_large.str() +
                   " eps_small=" + res.eps_small.str();
    } else if (solver == "cardinality") {
      auto res = solve_2dgk_cardinality(*k, o);
      out.packing = res.packing;
      out.value = res.profit;
      out.budget_exhausted = res.budget_exhausted;
      out.detail = res.branch;
    } else if (solver == "brute-force") {
      BruteForceBudget bf;
      bf.max_items = o.bf_max_items;
      bf.max_n = o.bf_max_n;
      auto res = brute_force_2dgk(*k, bf);
      out.packing = res.packing;
      out.value = res.profit;
      out.guaranteed = true;
      out.detail = res.branch;
    } else {
      throw ParseError("unknown knapsack solver: " + solver);
    }
    return out;
  }
  if (const auto* s = std::get_if<StripInstance>(&inst)) {
    out.is_height = true;
    if (solver == "nfdh") {
      auto res = nfdh_strip(s->items, s->w);
      out.packing = res.packing;
      out.value = res.height;
      out.detail = "nfdh";
    } else if (solver == "ffdh") {
      auto res = ffdh_strip(s->items, s->w);
      out.packing = res.packing;
      out.value = res.height;
      out.detail = "ffdh";
    } else if (solver == "steinberg") {
      auto res = steinberg_strip(s->items, s->w);
      out.packing = res.packing;
      out.value = res.height;
      out.detail = res.method;
    } else if (solver == "strip-best") {
      auto res = solve_strip_best(*s);
      out.packing = res.packing;
      out.value = res.height;
      out.detail = res.method;
    } else if (solver == "strip-oracle") {
      auto res = brute_force_strip(*s);
      out.packing = res.packing;
      out.value = res.height;
      out.guaranteed = true;
      out.detail = "oracle";
    } else {
      throw ParseError("unknown strip solver: " + solver);
    }
    return out;
  }
  const auto& l = std::get<LInstance>(inst);
  if (solver == "lpack-exact") {
    auto res = lpack_exact(l);
    out.packing = res.packing;
    out.value = res.profit;
    out.guaranteed = true;
    out.detail = "exact";
  } else if (solver == "lpack-ptas") {
    LpackPtasOptions lo = opts.lpack;
    if (eps < lo.min_eps) lo.min_eps = eps;
    auto res = lpack_ptas(l, eps, lo);
    out.packing = res.best.packing;
    out.value = res.best.profit;
    out.detail = "r_hor=" + std::to_string(res.r_hor) + " r_ver=" + std::to_string(res.r_ver);
  } else {
    throw ParseError("unknown lpack solver: " + solver);
  }
  return out;
}

namespace {

std::string csv_escape(const std::string& s) {
  std::string out;
  for (char c : s) out += (c == ',' || c == '\n') ? ';' : c;
  return out;
}

std::int64_t lower_bound_of(const Instance& inst) {
  if (const auto* s = std::get_if<StripInstance>(&inst)) return strip_lower_bound(*s);
  return 0;
}

// Trivial per-instance upper bound: the NFDH height cap for strips, the total
// profit for selection problems.
std::int64_t upper_bound_of(const Instance& inst) {
  if (const auto* s = std::get_if<StripInstance>(&inst)) {
    std::int64_t hmax = 0;
    for (const auto& it : s->items) hmax = std::max(hmax, it.h);
    return hmax + (2 * total_area(s->items) + s->w - 1) / s->w;
  }
  return total_profit(instance_items(inst));
}

}  // namespace

std::string run_bench(const std::string& spec_text, const BenchOptions& opts) {
  json spec;
  try {
    spec = json::parse(spec_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bench spec: invalid JSON: ") + e.what());
  }
  const std::uint64_t seed = spec.value<std::uint64_t>("seed", 1);

  struct Entry {
    std::string name;
    Instance inst;
  };
  std::vector<Entry> instances;
  int gen_index = 0;
  for (const auto& ij : spec.value("instances", json::array())) {
    if (ij.is_string()) {
      instances.push_back({ij.get<std::string>(), load_instance(ij.get<std::string>())});
      continue;
    }
    const auto& g = ij.at("gen");
    GenSpec gs;
    gs.kind = g.value("kind", "knapsack");
    gs.dist = g.value("dist", "uniform");
    gs.n_items = g.value("items", 10);
    gs.region = g.value("region", 20);
    gs.max_profit = g.value("max_profit", 20);
    gs.rotations = g.value("rotations", false);
    gs.seed = g.value("seed", seed + gen_index);
    instances.push_back({"gen:" + gs.kind + ":" + gs.dist + ":" + std::to_string(gs.seed),
                         generate_instance(gs)});
    ++gen_index;
  }

  std::ostringstream csv;
  csv << "# packtk-bench-csv v1\n";
  csv << "instance,solver,kind,items,value,lower_bound,upper_bound,feasible,guaranteed,"
         "budget_exhausted,error,time_ms\n";
  for (const auto& entry : instances) {
    const std::string kind = std::holds_alternative<KnapsackInstance>(entry.inst)
                                 ? "knapsack"
                                 : (std::holds_alternative<StripInstance>(entry.inst) ? "strip"
                                                                                      : "lpack");
    for (const auto& sj : spec.value("solvers", json::array())) {
      const std::string name = sj.at("name").get<std::string>();
      const Rat eps = Rat::parse(sj.value("eps", "1/3"));
      std::string error;
      SolveOutcome outcome;
      double ms = 0.0;
      try {
        const auto start = std::chrono::steady_clock::now();
        outcome = run_solver(entry.inst, name, eps, Knap2dOptions{});
        const auto stop = std::chrono::steady_clock::now();
        ms = std::chrono::duration<double, std::milli>(stop - start).count();
      } catch (const std::exception& e) {
        error = e.what();
      }
      bool feasible = false;
      if (error.empty())
        feasible = validate_packing(entry.inst, outcome.packing).feasible();
      csv << csv_escape(entry.name) << "," << name << "," << kind << ","
          << instance_items(entry.inst).size() << "," << (error.empty() ? outcome.value : 0)
          << "," << lower_bound_of(entry.inst) << "," << upper_bound_of(entry.inst) << ","
          << (feasible ? 1 : 0) << ","
          << (outcome.guaranteed ? 1 : 0) << "," << (outcome.budget_exhausted ? 1 : 0) << ","
          << csv_escape(error) << ","
          << (opts.timing ? std::to_string(static_cast<std::int64_t>(ms * 1000) / 1000.0) : "0")
          << "\n";
    }
  }
  return csv.str();
}

}  // namespace packtk
