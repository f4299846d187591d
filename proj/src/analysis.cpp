#include "eqrisk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "eqrisk/error.hpp"
#include "eqrisk/pricing.hpp"

namespace eqrisk {

namespace {

void check_shapes(const ProblemInstance& instance, const EffectiveCostVector& costs,
                  const Allocation& allocation) {
  if (costs.size() != instance.size() || allocation.units.size() != instance.size())
    throw Error(ErrorCode::SizeMismatch, "allocation",
                "costs and allocation must have one entry per project");
}

SweepRow sweep_row(const ProblemInstance& instance, double t, const SolverConfig& config) {
  if (!(t >= 0.0))
    throw Error(ErrorCode::NegativeTime, "t", "sweep times must be >= 0");
  auto sol = solve_equal_risk(instance.with_uniform_delay(t), config);
  return {t, sol.risk_level, std::move(sol.allocation), sol.spend, sol.residual,
          sol.feasibility, sol.iterations};
}

void check_sweep(std::span<const double> t_values, const SolverConfig& config) {
  if (t_values.empty())
    throw Error(ErrorCode::EmptySweep, "t", "at least one sweep time is required");
  validate_config(config);
}

// Runs fn(i) for every index on the OpenMP team, storing the first
// exception per slot; the lowest failing index is rethrown.
template <class Fn>
void parallel_for_each_index(std::size_t n, Fn fn) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

RiskProfile risk_profile(const ProblemInstance& instance, const EffectiveCostVector& costs,
                         const Allocation& allocation) {
  check_shapes(instance, costs, allocation);
  RiskProfile out;
  const auto n = instance.size();
  out.initial_costs.reserve(n);
  out.completion_costs.reserve(n);
  out.risks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = instance.project(i);
    const double u = allocation.units[i];
    if (!(u > 0.0) && !std::isnan(u))
      throw Error(ErrorCode::ZeroAllocation, p.id, "risk is undefined for u <= 0");
    if (!std::isfinite(u) || u > p.volume)
      throw Error(ErrorCode::AllocationOutOfRange, p.id, "allocation must lie in (0, volume]");
    const double initial = p.base_cost * u;
    const double completion = costs[i] * (p.volume - u);
    out.initial_costs.push_back(initial);
    out.completion_costs.push_back(completion);
    out.risks.push_back(completion / initial);
  }
  return out;
}

double max_risk(const ProblemInstance& instance, const EffectiveCostVector& costs,
                const Allocation& allocation) {
  const auto profile = risk_profile(instance, costs, allocation);
  return *std::max_element(profile.risks.begin(), profile.risks.end());
}

Sensitivities sensitivities(const ProblemInstance& instance, const Solution& solution) {
  if (solution.feasibility == Feasibility::FullyFunded || !(solution.risk_level > 0.0))
    throw Error(ErrorCode::FullyFundedNoSensitivity, "risk_level",
                "sensitivities are undefined at r* = 0");
  const auto costs = effective_costs(instance);
  const double r = solution.risk_level;
  const double slope = budget_spend_slope(instance, costs, r);

  Sensitivities out;
  out.dr_dB = 1.0 / slope;
  out.du_dB.reserve(instance.size());
  out.dr_dT.reserve(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const auto& p = instance.project(i);
    const double denom = costs[i] + p.base_cost * r;
    const double denom2 = denom * denom;
    const double du_dr = -p.base_cost * costs[i] * p.volume / denom2;
    out.du_dB.push_back(du_dr * out.dr_dB);
    // d f / d T_j through c'_j = c_j + k_j T_j
    const double df_dT = p.inflation_rate * p.base_cost * p.volume * p.base_cost * r / denom2;
    out.dr_dT.push_back(-df_dT / slope);
  }
  return out;
}

std::vector<SweepRow> sweep_delay(const ProblemInstance& instance,
                                  std::span<const double> t_values,
                                  const SolverConfig& config) {
  check_sweep(t_values, config);
  std::vector<SweepRow> rows(t_values.size());
  parallel_for_each_index(t_values.size(), [&](std::size_t i) {
    rows[i] = sweep_row(instance, t_values[i], config);
  });
  return rows;
}

std::vector<SweepRow> sweep_delay_serial(const ProblemInstance& instance,
                                         std::span<const double> t_values,
                                         const SolverConfig& config) {
  check_sweep(t_values, config);
  std::vector<SweepRow> rows;
  rows.reserve(t_values.size());
  for (double t : t_values) rows.push_back(sweep_row(instance, t, config));
  return rows;
}

std::vector<Solution> solve_batch(std::span<const ProblemInstance> instances,
                                  const SolverConfig& config) {
  validate_config(config);
  std::vector<Solution> out(instances.size());
  parallel_for_each_index(instances.size(), [&](std::size_t i) {
    out[i] = solve_equal_risk(instances[i], config);
  });
  return out;
}

std::vector<Solution> solve_batch_serial(std::span<const ProblemInstance> instances,
                                         const SolverConfig& config) {
  validate_config(config);
  std::vector<Solution> out;
  out.reserve(instances.size());
  for (const auto& inst : instances) out.push_back(solve_equal_risk(inst, config));
  return out;
}

}  // namespace eqrisk
