#pragma once

#include <optional>

#include "eqrisk/domain.hpp"

namespace eqrisk {

struct SolverConfig {
  /// Bracket width in r at which bisection stops, scaled by max(1, r).
  double risk_tolerance = 1e-12;
  /// Accepted |spend - B| in money units. Unset means 1e-9 * B.
  std::optional<double> budget_tolerance;
  int max_iterations = 200;

  double budget_tolerance_for(double budget) const {
    return budget_tolerance.value_or(1e-9 * budget);
  }
};

/// Throws InvalidConfig unless every field is strictly positive.
void validate_config(const SolverConfig& config);

/// u_i = c'_i V_i / (c'_i + c_i r).
Allocation allocation_from_risk(const ProblemInstance& instance,
                                const EffectiveCostVector& costs, double r);

/// Spend sum_i c_i u_i(r) implied by a common risk level r. Strictly
/// decreasing and convex in r, equal to the total planned cost at r = 0.
double budget_spend(const ProblemInstance& instance,
                    const EffectiveCostVector& costs, double r);

/// d(budget_spend)/dr = -sum_i c_i^2 c'_i V_i / (c'_i + c_i r)^2.
double budget_spend_slope(const ProblemInstance& instance,
                          const EffectiveCostVector& costs, double r);

/// Finds the common risk level that spends exactly the budget, then the
/// allocation it implies. Budgets at or above the total planned cost give a
/// FullyFunded solution with r = 0.
Solution solve_equal_risk(const ProblemInstance& instance,
                          const SolverConfig& config = {});

}  // namespace eqrisk
