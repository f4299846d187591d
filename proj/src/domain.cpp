#include "eqrisk/domain.hpp"

#include <cmath>
#include <string>
#include <unordered_set>

#include "eqrisk/error.hpp"

namespace eqrisk {

namespace {

// NaN compares false everywhere, so the checks are phrased as "must hold".
void check_project(const Project& p) {
  if (p.id.empty()) throw Error(ErrorCode::EmptyId, "", "project id must be nonempty");
  if (!(p.volume > 0.0) || !std::isfinite(p.volume))
    throw Error(ErrorCode::NonPositiveVolume, p.id + ".volume",
                "volume must be a finite number > 0");
  if (!(p.base_cost > 0.0) || !std::isfinite(p.base_cost))
    throw Error(ErrorCode::NonPositiveCost, p.id + ".base_cost",
                "base_cost must be a finite number > 0");
  if (!(p.inflation_rate >= 0.0) || !std::isfinite(p.inflation_rate))
    throw Error(ErrorCode::NegativeRate, p.id + ".inflation_rate",
                "inflation_rate must be a finite number >= 0");
  if (!(p.delay >= 0.0) || !std::isfinite(p.delay))
    throw Error(ErrorCode::NegativeDelay, p.id + ".delay",
                "delay must be a finite number >= 0");
}

}  // namespace

ProblemInstance validate_instance(InstanceData raw) {
  if (raw.projects.empty())
    throw Error(ErrorCode::EmptyProjectList, "projects", "at least one project is required");
  std::unordered_set<std::string> seen;
  for (const auto& p : raw.projects) {
    check_project(p);
    if (!seen.insert(p.id).second)
      throw Error(ErrorCode::DuplicateId, p.id, "project ids must be unique");
  }
  if (!(raw.budget > 0.0) || !std::isfinite(raw.budget))
    throw Error(ErrorCode::NonPositiveBudget, "budget", "budget must be a finite number > 0");
  return ProblemInstance(std::move(raw.projects), raw.budget);
}

ProblemInstance ProblemInstance::with_budget(double budget) const {
  return validate_instance({projects_, budget});
}

ProblemInstance ProblemInstance::with_delay(std::size_t i, double delay) const {
  auto projects = projects_;
  projects.at(i).delay = delay;
  return validate_instance({std::move(projects), budget_});
}

ProblemInstance ProblemInstance::with_uniform_delay(double delay) const {
  auto projects = projects_;
  for (auto& p : projects) p.delay = delay;
  return validate_instance({std::move(projects), budget_});
}

const char* to_string(Feasibility f) noexcept {
  return f == Feasibility::FullyFunded ? "fully_funded" : "underfunded";
}

}  // namespace eqrisk
