#include "eqrisk/pricing.hpp"

#include <cmath>
#include <vector>

#include "eqrisk/error.hpp"

namespace eqrisk {

double effective_cost(const Project& project, double t) {
  if (!(t >= 0.0)) throw Error(ErrorCode::NegativeTime, project.id, "time must be >= 0");
  return project.base_cost + project.inflation_rate * t;
}

EffectiveCostVector effective_costs(const ProblemInstance& instance) {
  std::vector<double> costs;
  costs.reserve(instance.size());
  for (const auto& p : instance.projects()) costs.push_back(effective_cost(p, p.delay));
  return EffectiveCostVector(std::move(costs));
}

double total_planned_cost(const ProblemInstance& instance) noexcept {
  double total = 0.0;
  for (const auto& p : instance.projects()) total += p.base_cost * p.volume;
  return total;
}

}  // namespace eqrisk
