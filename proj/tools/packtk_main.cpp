// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0
//
// packtk: 2-D rectangle packing toolkit. Subcommands: solve, validate,
// render, bench, gen. Exit codes: 0 ok, 2 infeasible or validation failure,
// 3 budget exhausted.

#include <iostream>

#include <CLI11.hpp>

#include "packtk/bench.hpp"
#include "packtk/gen.hpp"
#include "packtk/io.hpp"
#include "packtk/strip.hpp"
#include "packtk/svg.hpp"

using namespace packtk;

namespace {

constexpr int kExitInfeasible = 2;
constexpr int kExitBudget = 3;

int cmd_solve(const std::string& instance_path, const std::string& solver,
              const std::string& eps_text, bool rotations_override, std::int64_t budget,
              const std::string& layout_path, const std::string& out_path,
              const std::string& svg_path) {
  Instance inst = load_instance(instance_path);
  if (rotations_override) {
    if (auto* k = std::get_if<KnapsackInstance>(&inst)) k->rotations = true;
  }
  const Rat eps = Rat::parse(eps_text);

  SolveOutcome outcome;
  if (!layout_path.empty()) {
    // fixed-layout solve
    Layout layout = load_layout(layout_path);
    if (auto* k = std::get_if<KnapsackInstance>(&inst)) {
      auto res = solver == "layout-exact" ? solve_for_layout_exact(*k, layout, eps)
                                          : solve_for_layout(*k, layout, eps);
      outcome.packing = res.packing;
      outcome.value = res.profit;
      outcome.detail = "layout";
    } else if (auto* s = std::get_if<StripInstance>(&inst)) {
      auto res = solve_strip_container(*s, layout, eps);
      if (!res.feasible) {
        std::cerr << "layout infeasible for this strip instance\n";
        return kExitInfeasible;
      }
      outcome.packing = res.packing;
      outcome.value = res.height;
      outcome.is_height = true;
      outcome.detail = "layout";
    } else {
      std::cerr << "--layout applies to knapsack and strip instances\n";
      return 1;
    }
  } else {
    Knap2dOptions opts;
    opts.layout_budget = budget > 0 ? budget : opts.layout_budget;
    outcome = run_solver(inst, solver, eps, opts);
  }

  auto report = validate_packing(inst, outcome.packing);
  if (!report.feasible()) {
    std::cerr << "solver produced an infeasible packing\n";
    return kExitInfeasible;
  }
  std::cout << (outcome.is_height ? "height " : "profit ") << outcome.value << " ("
            << outcome.detail << ")"
            << (outcome.budget_exhausted ? " [layout budget exhausted]" : "") << "\n";
  if (!out_path.empty()) write_file(out_path, serialize_packing(outcome.packing));
  if (!svg_path.empty()) write_file(svg_path, render_svg(inst, outcome.packing));
  return outcome.budget_exhausted ? kExitBudget : 0;
}

int cmd_validate(const std::string& instance_path, const std::string& packing_path) {
  Instance inst = load_instance(instance_path);
  Packing packing = load_packing(packing_path, inst);
  auto report = validate_packing(inst, packing);
  for (const auto& s : report.structural) std::cout << "structural: " << s << "\n";
  for (const auto& v : report.violations) std::cout << "violation: " << v.detail << "\n";
  if (!report.feasible()) return kExitInfeasible;
  std::cout << "feasible (" << packing.placements.size() << " placements, profit "
            << packing_profit(instance_items(inst), packing) << ")\n";
  return 0;
}

int cmd_render(const std::string& instance_path, const std::string& packing_path,
               const std::string& svg_path, bool no_labels) {
  Instance inst = load_instance(instance_path);
  Packing packing = load_packing(packing_path, inst);
  SvgStyle style;
  style.labels = !no_labels;
  write_file(svg_path, render_svg(inst, packing, style));
  return 0;
}

int cmd_gen(const GenSpec& spec, const std::string& out_path) {
  auto inst = generate_instance(spec);
  const std::string text = serialize_instance(inst);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return 0;
}

int cmd_bench(const std::string& spec_path, const std::string& out_path, bool timing) {
  BenchOptions opts;
  opts.timing = timing;
  const std::string csv = run_bench(read_file(spec_path), opts);
  if (out_path.empty())
    std::cout << csv;
  else
    write_file(out_path, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"packtk: 2-D rectangle packing toolkit"};
  app.require_subcommand(1);

  std::string instance_path, packing_path, layout_path, out_path, svg_path, spec_path;
  std::string solver = "lc";
  std::string eps = "1/3";
  std::int64_t budget = 0;
  bool rotations = false, no_labels = false, timing = false;
  GenSpec gen_spec;

  auto* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("--instance", instance_path, "instance file")->required();
  solve->add_option("--solver", solver,
                    "lc|cardinality|brute-force|nfdh|ffdh|steinberg|strip-best|strip-oracle|"
                    "lpack-exact|lpack-ptas|layout|layout-exact");
  solve->add_option("--eps", eps, "accuracy parameter, e.g. 1/4");
  solve->add_flag("--rotations", rotations, "enable 90-degree rotations");
  solve->add_option("--budget", budget, "layout search budget");
  solve->add_option("--layout", layout_path, "fixed layout file");
  solve->add_option("--out", out_path, "write the packing JSON here");
  solve->add_option("--svg", svg_path, "write an SVG rendering here");

  auto* validate = app.add_subcommand("validate", "validate a packing");
  validate->add_option("--instance", instance_path, "instance file")->required();
  validate->add_option("--packing", packing_path, "packing file")->required();

  auto* render = app.add_subcommand("render", "render a packing to SVG");
  render->add_option("--instance", instance_path, "instance file")->required();
  render->add_option("--packing", packing_path, "packing file")->required();
  render->add_option("--svg", svg_path, "output SVG path")->required();
  render->add_flag("--no-labels", no_labels, "suppress id/profit labels");

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--kind", gen_spec.kind, "knapsack|strip|lpack");
  gen->add_option("--dist", gen_spec.dist, "uniform|long-mix|small|corridor");
  gen->add_option("--items", gen_spec.n_items, "item count");
  gen->add_option("--region", gen_spec.region, "N or W");
  gen->add_option("--max-profit", gen_spec.max_profit, "profit upper bound");
  gen->add_flag("--rotations", gen_spec.rotations, "rotations allowed");
  gen->add_option("--seed", gen_spec.seed, "PRNG seed");
  gen->add_option("--out", out_path, "output path (stdout otherwise)");

  auto* bench = app.add_subcommand("bench", "run a benchmark spec");
  bench->add_option("--spec", spec_path, "bench spec JSON")->required();
  bench->add_option("--out", out_path, "output CSV path (stdout otherwise)");
  bench->add_flag("--timing", timing, "fill the wall-time column (non-deterministic)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return cmd_solve(instance_path, solver, eps, rotations, budget, layout_path, out_path,
                       svg_path);
    if (validate->parsed()) return cmd_validate(instance_path, packing_path);
    if (render->parsed()) return cmd_render(instance_path, packing_path, svg_path, no_labels);
    if (gen->parsed()) return cmd_gen(gen_spec, out_path);
    if (bench->parsed()) return cmd_bench(spec_path, out_path, timing);
  } catch (const BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
