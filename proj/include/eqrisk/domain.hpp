#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace eqrisk {

/// One delayed investment project.
struct Project {
  std::string id;
  double volume = 0.0;          // labour-force volume V, > 0
  double base_cost = 0.0;       // unit cost c at t = 0, > 0
  double inflation_rate = 0.0;  // unit cost growth k per unit time, >= 0
  double delay = 0.0;           // delay term T, >= 0

  bool operator==(const Project&) const = default;
};

/// Unvalidated instance data, as read from a file or built by hand.
struct InstanceData {
  std::vector<Project> projects;
  double budget = 0.0;
};

/// A validated set of projects plus the budget available now. Immutable;
/// the only way to obtain one is through validate_instance().
class ProblemInstance {
 public:
  std::span<const Project> projects() const noexcept { return projects_; }
  const Project& project(std::size_t i) const { return projects_.at(i); }
  std::size_t size() const noexcept { return projects_.size(); }
  double budget() const noexcept { return budget_; }

  ProblemInstance with_budget(double budget) const;
  ProblemInstance with_delay(std::size_t i, double delay) const;
  ProblemInstance with_uniform_delay(double delay) const;

  bool operator==(const ProblemInstance&) const = default;

 private:
  friend ProblemInstance validate_instance(InstanceData raw);
  ProblemInstance(std::vector<Project> projects, double budget)
      : projects_(std::move(projects)), budget_(budget) {}

  std::vector<Project> projects_;
  double budget_;
};

/// Checks every field and id uniqueness; throws eqrisk::Error naming the
/// first offending project or field.
ProblemInstance validate_instance(InstanceData raw);

/// Delay-inflated unit costs c'_i, one per project.
class EffectiveCostVector {
 public:
  EffectiveCostVector() = default;
  explicit EffectiveCostVector(std::vector<double> costs)
      : costs_(std::move(costs)) {}

  std::span<const double> values() const noexcept { return costs_; }
  double operator[](std::size_t i) const { return costs_[i]; }
  std::size_t size() const noexcept { return costs_.size(); }

  bool operator==(const EffectiveCostVector&) const = default;

 private:
  std::vector<double> costs_;
};

/// Labour volume funded now, per project. Expected range is (0, V_i].
struct Allocation {
  std::vector<double> units;

  bool operator==(const Allocation&) const = default;
};

/// Per-project spend now, spend needed later, and their ratio.
struct RiskProfile {
  std::vector<double> initial_costs;     // S_i  = c_i u_i
  std::vector<double> completion_costs;  // S'_i = c'_i (V_i - u_i)
  std::vector<double> risks;             // r_i  = S'_i / S_i
};

enum class Feasibility { Underfunded, FullyFunded };

const char* to_string(Feasibility f) noexcept;

struct Solution {
  double risk_level = 0.0;
  Allocation allocation;
  double spend = 0.0;
  double residual = 0.0;  // budget - spend
  Feasibility feasibility = Feasibility::Underfunded;
  int iterations = 0;
};

}  // namespace eqrisk
