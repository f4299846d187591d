#include "eqrisk/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "eqrisk/error.hpp"
#include "eqrisk/pricing.hpp"

namespace eqrisk {

namespace {

void check_risk(double r) {
  if (!(r >= 0.0)) throw Error(ErrorCode::NegativeRisk, "r", "risk level must be >= 0");
}

void check_costs(const ProblemInstance& instance, const EffectiveCostVector& costs) {
  if (costs.size() != instance.size())
    throw Error(ErrorCode::SizeMismatch, "costs",
                std::to_string(costs.size()) + " costs for " +
                    std::to_string(instance.size()) + " projects");
}

// Unchecked kernels shared by the public entry points and the root search.
double spend_at(std::span<const Project> projects, std::span<const double> costs,
                double r) {
  double total = 0.0;
  for (std::size_t i = 0; i < projects.size(); ++i) {
    const auto& p = projects[i];
    total += p.base_cost * (costs[i] * p.volume / (costs[i] + p.base_cost * r));
  }
  return total;
}

double slope_at(std::span<const Project> projects, std::span<const double> costs,
                double r) {
  double total = 0.0;
  for (std::size_t i = 0; i < projects.size(); ++i) {
    const auto& p = projects[i];
    const double denom = costs[i] + p.base_cost * r;
    total += p.base_cost * p.base_cost * costs[i] * p.volume / (denom * denom);
  }
  return -total;
}

}  // namespace

void validate_config(const SolverConfig& config) {
  if (!(config.risk_tolerance > 0.0))
    throw Error(ErrorCode::InvalidConfig, "risk_tolerance", "must be > 0");
  if (config.budget_tolerance && !(*config.budget_tolerance > 0.0))
    throw Error(ErrorCode::InvalidConfig, "budget_tolerance", "must be > 0");
  if (config.max_iterations <= 0)
    throw Error(ErrorCode::InvalidConfig, "max_iterations", "must be > 0");
}

Allocation allocation_from_risk(const ProblemInstance& instance,
                                const EffectiveCostVector& costs, double r) {
  check_risk(r);
  check_costs(instance, costs);
  Allocation out;
  out.units.reserve(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const auto& p = instance.project(i);
    out.units.push_back(costs[i] * p.volume / (costs[i] + p.base_cost * r));
  }
  return out;
}

double budget_spend(const ProblemInstance& instance,
                    const EffectiveCostVector& costs, double r) {
  check_risk(r);
  check_costs(instance, costs);
  return spend_at(instance.projects(), costs.values(), r);
}

double budget_spend_slope(const ProblemInstance& instance,
                          const EffectiveCostVector& costs, double r) {
  check_risk(r);
  check_costs(instance, costs);
  return slope_at(instance.projects(), costs.values(), r);
}

Solution solve_equal_risk(const ProblemInstance& instance, const SolverConfig& config) {
  validate_config(config);
  const auto costs = effective_costs(instance);
  const auto projects = instance.projects();
  const double budget = instance.budget();
  const double planned = total_planned_cost(instance);

  Solution sol;
  if (budget >= planned) {
    sol.feasibility = Feasibility::FullyFunded;
    sol.risk_level = 0.0;
    for (const auto& p : projects) sol.allocation.units.push_back(p.volume);
    sol.spend = planned;
    sol.residual = budget - planned;
    return sol;
  }

  const double budget_tol = config.budget_tolerance_for(budget);
  const auto excess = [&](double r) { return spend_at(projects, costs.values(), r) - budget; };
  int iterations = 0;
  const auto tick = [&] {
    if (++iterations > config.max_iterations)
      throw Error(ErrorCode::MaxIterationsExceeded, "solve_equal_risk",
                  "no convergence within " + std::to_string(config.max_iterations) +
                      " iterations");
  };

  // Invariant from here on: excess(lo) > 0 >= excess(hi).
  double lo = 0.0;
  double hi = 1.0;
  while (excess(hi) > 0.0) {
    tick();
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi))
      throw Error(ErrorCode::MaxIterationsExceeded, "solve_equal_risk",
                  "risk bracket overflowed");
  }

  while (hi - lo > config.risk_tolerance * std::max(1.0, hi)) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    tick();
    if (excess(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }

  double r = lo + 0.5 * (hi - lo);
  double g = excess(r);
  // Newton polish inside the final bracket.
  for (int step = 0; step < 8 && std::abs(g) > 0.0; ++step) {
    const double slope = slope_at(projects, costs.values(), r);
    if (!(slope < 0.0)) break;
    const double next = r - g / slope;
    if (!(next >= lo && next <= hi) || next == r) break;
    tick();
    const double g_next = excess(next);
    if (std::abs(g_next) >= std::abs(g)) break;
    r = next;
    g = g_next;
  }

  if (!(std::abs(g) <= budget_tol))
    throw Error(ErrorCode::MaxIterationsExceeded, "solve_equal_risk",
                "budget residual " + std::to_string(-g) + " exceeds tolerance " +
                    std::to_string(budget_tol));

  sol.feasibility = Feasibility::Underfunded;
  sol.risk_level = r;
  sol.allocation = allocation_from_risk(instance, costs, r);
  sol.spend = spend_at(projects, costs.values(), r);
  sol.residual = budget - sol.spend;
  sol.iterations = iterations;
  return sol;
}

}  // namespace eqrisk
