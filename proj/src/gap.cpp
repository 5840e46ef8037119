// Copyright 2026 The packtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "packtk/gap.hpp"

#include <algorithm>
#include <functional>

namespace packtk {

void GapInstance::check() const {
  if (sizes.size() != profits.size())
    throw PreconditionError("gap: sizes/profits element count mismatch");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i].size() != bins() || profits[i].size() != bins())
      throw PreconditionError("gap: per-element bin count mismatch");
    for (std::size_t j = 0; j < bins(); ++j) {
      if (sizes[i][j] && *sizes[i][j] <= 0)
        throw PreconditionError("gap: sizes must be positive");
      if (profits[i][j] < 0) throw PreconditionError("gap: profits must be non-negative");
    }
  }
  for (auto c : capacities)
    if (c < 0) throw PreconditionError("gap: negative capacity");
}

GapAssignment gap_exact_dp(const GapInstance& inst, const GapBudget& budget) {
  inst.check();
  const std::size_t k = inst.bins();
  const std::size_t n = inst.elements();
  if (static_cast<std::int64_t>(k) > budget.max_bins)
    throw BudgetError("gap_exact_dp: bin count exceeds the configured constant");

  std::int64_t cells = 1;
  for (auto c : inst.capacities) {
    if (c + 1 > budget.max_cells / cells)  // overflow-safe product guard
      throw BudgetError("gap_exact_dp: capacity table too large");
    cells *= (c + 1);
  }
  if (n > 0 && cells > budget.max_cells / static_cast<std::int64_t>(n))
    throw BudgetError("gap_exact_dp: DP table exceeds budget");

  std::vector<std::int64_t> stride(k, 1);
  for (std::size_t j = 1; j < k; ++j) stride[j] = stride[j - 1] * (inst.capacities[j - 1] + 1);

  std::vector<std::int64_t> prev(cells, 0), cur(cells, 0);
  std::vector<std::uint8_t> choice(n * cells, 0);  // 0 = skip, j+1 = bin j

  std::vector<std::int64_t> dvec(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(dvec.begin(), dvec.end(), 0);
    for (std::int64_t cell = 0; cell < cells; ++cell) {
      std::int64_t best = prev[cell];
      std::uint8_t best_choice = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (!inst.sizes[i][j]) continue;
        const std::int64_t s = *inst.sizes[i][j];
        if (dvec[j] < s) continue;
        const std::int64_t cand = inst.profits[i][j] + prev[cell - s * stride[j]];
        if (cand > best) {
          best = cand;
          best_choice = static_cast<std::uint8_t>(j + 1);
        }
      }
      cur[cell] = best;
      choice[i * cells + cell] = best_choice;
      // advance the mixed-radix capacity vector
      for (std::size_t j = 0; j < k; ++j) {
        if (++dvec[j] <= inst.capacities[j]) break;
        dvec[j] = 0;
      }
    }
    std::swap(prev, cur);
  }

  GapAssignment out;
  out.bin_of.assign(n, -1);
  out.profit = n == 0 ? 0 : prev[cells - 1];
  std::int64_t cell = cells - 1;
  for (std::size_t ii = n; ii-- > 0;) {
    const std::uint8_t ch = choice[ii * cells + cell];
    if (ch != 0) {
      const std::size_t j = ch - 1;
      out.bin_of[ii] = static_cast<int>(j);
      cell -= *inst.sizes[ii][j] * stride[j];
    }
  }
  return out;
}

std::vector<std::int64_t> gap_loads(const GapInstance& inst, const GapAssignment& a) {
  std::vector<std::int64_t> loads(inst.bins(), 0);
  for (std::size_t i = 0; i < a.bin_of.size(); ++i) {
    if (a.bin_of[i] >= 0) loads[a.bin_of[i]] += *inst.sizes[i][a.bin_of[i]];
  }
  return loads;
}

GapAssignment gap_resource_augmented(const GapInstance& inst, const Rat& eps,
                                     const GapBudget& budget) {
  inst.check();
  if (!(eps > Rat(0))) throw PreconditionError("gap_resource_augmented: eps must be positive");
  const std::size_t k = inst.bins();
  const std::size_t n = inst.elements();
  if (n == 0) {
    GapAssignment out;
    out.augmented = true;
    out.augment_factor = Rat(1) + eps;
    return out;
  }

  // mu_j = eps*c_j/n ; s' = ceil(s/mu_j) ; c' = floor((1+eps)n/eps).
  GapInstance rounded;
  rounded.profits = inst.profits;
  const std::int64_t cap = ((Rat(1) + eps) * Rat(static_cast<std::int64_t>(n)) / eps).floor();
  rounded.capacities.assign(k, cap);
  rounded.sizes.resize(n, std::vector<std::optional<std::int64_t>>(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!inst.sizes[i][j]) continue;
      if (inst.capacities[j] == 0) continue;  // nothing fits a zero bin
      const Rat mu = eps * Rat(inst.capacities[j]) / Rat(static_cast<std::int64_t>(n));
      const std::int64_t s = (Rat(*inst.sizes[i][j]) / mu).ceil();
      if (s <= cap) rounded.sizes[i][j] = s;
    }
  }
  GapAssignment out = gap_exact_dp(rounded, budget);
  out.augmented = true;
  out.augment_factor = Rat(1) + eps;
  // Recompute profit against the original pairs (identical profit matrix).
  std::int64_t p = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (out.bin_of[i] >= 0) p += inst.profits[i][out.bin_of[i]];
  out.profit = p;
  return out;
}

namespace {

// Enumerates disjoint per-bin guess sets X_j (|X_j| <= cap, fitting the bin)
// and calls fn for each complete choice.
struct GuessEnumerator {
  const GapInstance& inst;
  int cap;
  std::int64_t budget;
  std::int64_t used = 0;
  std::vector<int> pick;               // -1 none, else bin
  std::vector<int> count;              // per bin
  std::vector<std::int64_t> load;      // per bin
  std::function<void(const std::vector<int>&)> fn;

  void run(std::size_t i) {
    if (used > budget) throw BudgetError("gap_ptas: guess enumeration exceeds budget");
    if (i == inst.elements()) {
      ++used;
      fn(pick);
      return;
    }
    pick[i] = -1;
    run(i + 1);
    for (std::size_t j = 0; j < inst.bins(); ++j) {
      if (!inst.sizes[i][j]) continue;
      if (count[j] >= cap) continue;
      if (load[j] + *inst.sizes[i][j] > inst.capacities[j]) continue;
      pick[i] = static_cast<int>(j);
      ++count[j];
      load[j] += *inst.sizes[i][j];
      run(i + 1);
      --count[j];
      load[j] -= *inst.sizes[i][j];
      pick[i] = -1;
    }
  }
};

}  // namespace

GapAssignment gap_ptas(const GapInstance& inst, const Rat& eps, int guess_cap,
                       const GapBudget& budget) {
  inst.check();
  if (!(eps > Rat(0))) throw PreconditionError("gap_ptas: eps must be positive");
  const std::size_t k = inst.bins();
  const std::size_t n = inst.elements();

  GapAssignment best;
  best.bin_of.assign(n, -1);
  best.profit = -1;

  GuessEnumerator en{inst, guess_cap, budget.max_guesses, 0,
                     std::vector<int>(n, -1), std::vector<int>(k, 0),
                     std::vector<std::int64_t>(k, 0), {}};
  en.fn = [&](const std::vector<int>& pick) {
    // Residual instance on the unguessed elements with capacities shrunk to
    // floor((1-eps) * (c_j - s(X_j))); the (1+eps) augmentation then lands
    // back under the true residual capacity.
    std::vector<std::int64_t> residual(k);
    std::int64_t guessed_profit = 0;
    for (std::size_t j = 0; j < k; ++j) residual[j] = inst.capacities[j];
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i] >= 0) {
        residual[pick[i]] -= *inst.sizes[i][pick[i]];
        guessed_profit += inst.profits[i][pick[i]];
      }
    }
    GapInstance sub;
    sub.capacities.resize(k);
    for (std::size_t j = 0; j < k; ++j)
      sub.capacities[j] = ((Rat(1) - eps) * Rat(residual[j])).floor();
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i] < 0) rest.push_back(i);
    sub.sizes.reserve(rest.size());
    sub.profits.reserve(rest.size());
    for (auto i : rest) {
      sub.sizes.push_back(inst.sizes[i]);
      sub.profits.push_back(inst.profits[i]);
    }
    GapAssignment aug = gap_resource_augmented(sub, eps, budget);
    // Safety: the (1+eps)(1-eps) algebra keeps loads within the residual
    // capacities; verify and drop the guess when rounding bites.
    std::vector<std::int64_t> loads(k, 0);
    for (std::size_t r = 0; r < rest.size(); ++r)
      if (aug.bin_of[r] >= 0) loads[aug.bin_of[r]] += *inst.sizes[rest[r]][aug.bin_of[r]];
    for (std::size_t j = 0; j < k; ++j)
      if (loads[j] > residual[j]) return;
    const std::int64_t total = guessed_profit + aug.profit;
    if (total > best.profit) {
      best.profit = total;
      best.bin_of.assign(n, -1);
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i] >= 0) best.bin_of[i] = pick[i];
      for (std::size_t r = 0; r < rest.size(); ++r)
        if (aug.bin_of[r] >= 0) best.bin_of[rest[r]] = aug.bin_of[r];
    }
  };
  en.run(0);

  if (best.profit < 0) best.profit = 0;
  best.augmented = false;
  best.augment_factor = Rat(1);
  const std::int64_t need = (Rat(1) / (eps * eps)).ceil();
  best.guaranteed = guess_cap >= need;
  return best;
}

}  // namespace packtk
