#pragma once

#include "eqrisk/domain.hpp"

namespace eqrisk {

/// Unit cost after time t under linear inflation: c + k t. Throws
/// NegativeTime for t < 0.
double effective_cost(const Project& project, double t);

/// c'_i = c_i + k_i T_i for every project, each at its own delay.
EffectiveCostVector effective_costs(const ProblemInstance& instance);

/// Sum of c_i V_i: what full funding of every project costs today.
double total_planned_cost(const ProblemInstance& instance) noexcept;

}  // namespace eqrisk
