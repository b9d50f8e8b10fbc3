#include <algorithm>

#include "fairhaul/kernels.hpp"
#include "fairhaul/solvers.hpp"

namespace fairhaul {

namespace {

struct LeafTable {
  LeafMasks masks;
  std::vector<Cost> cost;
};

LeafTable leaf_table(const Topology& t) {
  LeafTable lt{leaf_masks(t), {}};
  lt.cost.assign(std::size_t{1} << lt.masks.leaves.size(), 0);
  kernels::subset_costs(lt.masks.edge_mask, lt.masks.edge_weight, lt.cost);
  return lt;
}

void check_leaves(const Instance& instance, std::int64_t limit, const char* what) {
  const auto L = static_cast<std::int64_t>(instance.topology.leaves().size());
  if (L > limit) {
    throw BudgetExceeded("leaf-dp", std::string("leaf DP ") + what + " is limited to L <= " +
                                        std::to_string(limit) + " (got L = " + std::to_string(L) + ")");
  }
}

}  // namespace

// F_1 = cost and F_i[S] = min over Q of max(F_{i-1}[S \ Q], cost[Q]): the best
// split of leaf set S among i agents. Only agents that can receive a leaf matter.
SolveReport solve_leaf_dp(const Instance& instance, const Budgets& budgets) {
  check_leaves(instance, budgets.leaf_dp_witness_leaves, "with witness");
  SolveReport report;
  report.algorithm = "leaf-dp";
  const auto& t = instance.topology;
  const std::size_t L = t.leaves().size();
  if (L == 0) {
    report.allocation = Allocation::uniform(instance);
    return report;
  }
  const auto table = leaf_table(t);
  const std::size_t subsets = table.cost.size();
  const int layers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(instance.agents), L));

  std::vector<std::vector<std::uint32_t>> choice(static_cast<std::size_t>(layers));
  std::vector<Cost> prev = table.cost, next(subsets);
  for (int i = 1; i < layers; ++i) {
    choice[static_cast<std::size_t>(i)].assign(subsets, 0);
    kernels::minmax_relax(prev, table.cost, next, choice[static_cast<std::size_t>(i)]);
    prev.swap(next);
  }
  const std::uint64_t full = table.masks.full();
  report.share = prev[full];

  std::vector<int> leaf_owner(L, 0);
  std::uint64_t rest = full;
  for (int i = layers - 1; i >= 1 && rest != 0; --i) {
    const std::uint64_t q = choice[static_cast<std::size_t>(i)][rest];
    for (std::size_t b = 0; b < L; ++b) {
      if (q >> b & 1) leaf_owner[b] = i;
    }
    rest ^= q;
  }
  report.allocation = complete_from_leaves(instance, leaf_owner);
  report.stats["leaves"] = static_cast<std::int64_t>(L);
  report.stats["layers"] = layers;
  report.stats["table_cells"] = static_cast<std::int64_t>(subsets) * layers;
  return report;
}

Cost leaf_dp_share(const Instance& instance, const Budgets& budgets) {
  check_leaves(instance, budgets.leaf_dp_share_leaves, "for the share");
  const auto& t = instance.topology;
  const std::size_t L = t.leaves().size();
  if (L == 0) return 0;
  const auto table = leaf_table(t);
  const int layers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(instance.agents), L));
  std::vector<Cost> prev = table.cost, next(table.cost.size());
  for (int i = 1; i < layers; ++i) {
    kernels::minmax_relax(prev, table.cost, next, {});
    prev.swap(next);
  }
  return prev[table.masks.full()];
}

}  // namespace fairhaul
