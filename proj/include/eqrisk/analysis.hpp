#pragma once

#include <span>
#include <vector>

#include "eqrisk/domain.hpp"
#include "eqrisk/solver.hpp"

namespace eqrisk {

/// First-order response of an Underfunded solution.
struct Sensitivities {
  double dr_dB = 0.0;          // d r* / d budget, < 0
  std::vector<double> du_dB;   // d u_i / d budget, each > 0
  std::vector<double> dr_dT;   // d r* / d T_j with the other delays held fixed
};

/// One row of a delay sweep: every project delayed by the same t.
struct SweepRow {
  double t = 0.0;
  double risk_level = 0.0;
  Allocation allocation;
  double spend = 0.0;
  double residual = 0.0;
  Feasibility feasibility = Feasibility::Underfunded;
  int iterations = 0;
};

/// S_i, S'_i and r_i for an arbitrary allocation. Throws ZeroAllocation if
/// any u_i <= 0 and AllocationOutOfRange if u_i > V_i or is not finite.
RiskProfile risk_profile(const ProblemInstance& instance,
                         const EffectiveCostVector& costs,
                         const Allocation& allocation);

/// Largest per-project risk of an allocation.
double max_risk(const ProblemInstance& instance, const EffectiveCostVector& costs,
                const Allocation& allocation);

/// Analytic sensitivities by implicit differentiation of the budget
/// equation at r*. Throws FullyFundedNoSensitivity when r* = 0.
Sensitivities sensitivities(const ProblemInstance& instance, const Solution& solution);

// Data-parallel drivers. Each output element is an independent solve, so
// the OpenMP versions produce the same bytes as the serial references
// regardless of thread count. Errors are rethrown for the first failing
// element in input order.

std::vector<SweepRow> sweep_delay(const ProblemInstance& instance,
                                  std::span<const double> t_values,
                                  const SolverConfig& config = {});
std::vector<SweepRow> sweep_delay_serial(const ProblemInstance& instance,
                                         std::span<const double> t_values,
                                         const SolverConfig& config = {});

std::vector<Solution> solve_batch(std::span<const ProblemInstance> instances,
                                  const SolverConfig& config = {});
std::vector<Solution> solve_batch_serial(std::span<const ProblemInstance> instances,
                                         const SolverConfig& config = {});

}  // namespace eqrisk
