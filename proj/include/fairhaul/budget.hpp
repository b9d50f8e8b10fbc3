#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fairhaul {

/// Size limits for the exponential algorithms. Exceeding one raises
/// BudgetExceeded; nothing is ever truncated silently.
struct Budgets {
  std::int64_t brute_leaves = 12;
  std::int64_t brute_agents = 5;
  /// Cap on the number of allocations an enumerating oracle may visit.
  std::int64_t enumeration = 20'000'000;
  std::int64_t leaf_dp_witness_leaves = 16;
  std::int64_t leaf_dp_share_leaves = 20;
  std::int64_t ilp_internal = 4;
  std::int64_t ilp_weights = 3;
  /// Nodes of the integer feasibility search, summed over all candidate shares.
  std::int64_t ilp_nodes = 20'000'000;
  std::int64_t star_agents = 4;
  /// In weight units (value times 10^decimals).
  std::int64_t star_max_weight = 100;
  std::int64_t pvc = 3;

  /// (name, field) pairs; names are used as --budget-<name> with dashes and as
  /// FAIRHAUL_BUDGET_<NAME> with underscores.
  std::vector<std::pair<const char*, std::int64_t*>> fields();

  /// Applies FAIRHAUL_BUDGET_* environment variables; malformed values throw InputError.
  void apply_environment();
};

}  // namespace fairhaul
