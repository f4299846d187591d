#pragma once

// Shared fixtures, random instance generators and independent oracles for
// the unit and acceptance suites. Nothing here calls into the solver's root
// search; oracles recompute the budget equation from the raw fields.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "eqrisk/domain.hpp"

namespace eqrisk::testing {

// Frozen from a 40-digit mpmath bisection on the budget equation of the
// three-project sample instance (B = 295, c' = (3, 7, 3)).
inline constexpr double kSampleRoot = 8.281031031728963;
inline constexpr double kSampleUnits[3] = {15.335806574318265, 65.948367318544715,
                                          66.483284895729325};
inline constexpr double kSampleSpendAt8_3 = 294.47608932329278;
inline constexpr double kSampleSlopeAtRoot = -27.668569246327311;
// (20, 60, 66.4) scaled to spend exactly 295
inline constexpr double kSamplePerturbedMaxRisk = 8.9932203389830508;
// 1350 / 295 - 1
inline constexpr double kSampleRootAtZeroDelay = 3.5762711864406780;

inline InstanceData sample_data() {
  return {{{"P1", 100.0, 2.0, 0.1, 10.0},
           {"P2", 300.0, 3.0, 0.4, 10.0},
           {"P3", 250.0, 1.0, 0.2, 10.0}},
          295.0};
}

inline ProblemInstance sample_instance() { return validate_instance(sample_data()); }

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
  return std::exp(d(rng));
}

/// n projects with every parameter log-uniform in [lo, hi] and B uniform
/// in (0, sum c_i V_i).
inline ProblemInstance random_underfunded(std::mt19937_64& rng, std::size_t n,
                                          double lo = 0.1, double hi = 10.0) {
  InstanceData data;
  double planned = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Project p{"p" + std::to_string(i), log_uniform(rng, lo, hi), log_uniform(rng, lo, hi),
              log_uniform(rng, lo, hi), log_uniform(rng, lo, hi)};
    planned += p.base_cost * p.volume;
    data.projects.push_back(p);
  }
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  double f = 0.0;
  while (f <= 0.0) f = frac(rng);
  data.budget = f * planned;
  return validate_instance(std::move(data));
}

/// Budget equation evaluated from raw fields in long double.
inline long double oracle_spend(const ProblemInstance& inst, long double r) {
  long double total = 0.0L;
  for (const auto& p : inst.projects()) {
    const long double c = p.base_cost;
    const long double ce = c + static_cast<long double>(p.inflation_rate) * p.delay;
    total += c * ce * p.volume / (ce + c * r);
  }
  return total;
}

/// Plain bisection for spend(r) = B; no Newton, no tolerance tricks.
inline double oracle_root(const ProblemInstance& inst) {
  const long double budget = inst.budget();
  long double lo = 0.0L, hi = 1.0L;
  while (oracle_spend(inst, hi) > budget) hi *= 2.0L;
  for (int i = 0; i < 200; ++i) {
    const long double mid = (lo + hi) / 2.0L;
    if (mid == lo || mid == hi) break;
    (oracle_spend(inst, mid) > budget ? lo : hi) = mid;
  }
  return static_cast<double>((lo + hi) / 2.0L);
}

/// Two-level grid scan of r: unit steps from 0 to find the straddling
/// interval, then `step` within it. Returns the grid point nearest the
/// budget crossing.
inline double oracle_grid_root(const ProblemInstance& inst, double step) {
  const long double budget = inst.budget();
  double lo = 0.0;
  while (oracle_spend(inst, lo + 1.0) > budget) lo += 1.0;
  double prev = lo;
  for (long k = 1;; ++k) {
    const double r = lo + static_cast<double>(k) * step;
    if (oracle_spend(inst, r) <= budget) {
      const auto e_prev = std::abs(oracle_spend(inst, prev) - budget);
      const auto e_cur = std::abs(oracle_spend(inst, r) - budget);
      return e_prev < e_cur ? prev : r;
    }
    prev = r;
  }
}

/// Max per-project risk from raw fields; +inf if any allocation is <= 0.
inline double oracle_max_risk(const ProblemInstance& inst, const std::vector<double>& u) {
  double worst = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto& p = inst.project(i);
    if (u[i] <= 0.0) return std::numeric_limits<double>::infinity();
    const double ce = p.base_cost + p.inflation_rate * p.delay;
    worst = std::max(worst, ce * (p.volume - u[i]) / (p.base_cost * u[i]));
  }
  return worst;
}

/// Brute-force minimax over budget-feasible allocations (n <= 3). The first
/// n-1 coordinates walk a grid of `steps` points each; the last absorbs the
/// remaining budget exactly, so every visited allocation spends B.
inline double oracle_grid_minimax(const ProblemInstance& inst, int steps) {
  const auto n = inst.size();
  const double budget = inst.budget();
  const auto& ps = inst.projects();
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> u(n);

  const auto finish = [&](double spent) {
    const auto& last = ps[n - 1];
    u[n - 1] = (budget - spent) / last.base_cost;
    if (u[n - 1] <= 0.0 || u[n - 1] > last.volume) return;
    best = std::min(best, oracle_max_risk(inst, u));
  };
  const auto axis = [&](std::size_t i, double spent, int k) {
    const double cap = std::min(ps[i].volume, (budget - spent) / ps[i].base_cost);
    return cap * static_cast<double>(k) / steps;
  };

  if (n == 1) {
    finish(0.0);
  } else if (n == 2) {
    for (int a = 1; a <= steps; ++a) {
      u[0] = axis(0, 0.0, a);
      finish(ps[0].base_cost * u[0]);
    }
  } else if (n == 3) {
    for (int a = 1; a <= steps; ++a) {
      u[0] = axis(0, 0.0, a);
      const double s0 = ps[0].base_cost * u[0];
      for (int b = 1; b <= steps; ++b) {
        u[1] = axis(1, s0, b);
        finish(s0 + ps[1].base_cost * u[1]);
      }
    }
  }
  return best;
}

inline double rel_err(double got, double want) {
  const double scale = std::max(std::abs(want), std::numeric_limits<double>::min());
  return std::abs(got - want) / scale;
}

}  // namespace eqrisk::testing
