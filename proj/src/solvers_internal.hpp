#pragma once

#include "fairhaul/solvers.hpp"

namespace fairhaul {

/// Internal-vertex solver on an instance whose hub is already internal.
SolveReport solve_internal_ilp_reduced(const Instance& instance, const Budgets& budgets);

/// Runs `core` on the hub-reduced instance and lifts share and witness back.
template <typename Core>
SolveReport with_hub_reduction(const Instance& instance, Core&& core) {
  const auto red = preprocess_hub_leaf(instance);
  SolveReport report = core(red.reduced);
  report.share += red.offset;
  report.allocation = lift_by_leaves(instance, red.reduced, report.allocation);
  if (red.steps > 0) report.stats["hub_reductions"] = red.steps;
  return report;
}

}  // namespace fairhaul
