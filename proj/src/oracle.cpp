#include "fairhaul/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "fairhaul/nonwaste.hpp"

namespace fairhaul {

namespace {

/// base^exp, saturating at cap + 1.
std::int64_t capped_pow(std::int64_t base, std::size_t exp, std::int64_t cap) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r) || r > cap) return cap + 1;
  }
  return r;
}

void require_enumeration(const Instance& instance, const Budgets& budgets) {
  const auto count = capped_pow(instance.agents, instance.m(), budgets.enumeration);
  if (count > budgets.enumeration) {
    throw BudgetExceeded("enumeration", "n^m = " + std::to_string(instance.agents) + "^" +
                                            std::to_string(instance.m()) + " exceeds the enumeration budget of " +
                                            std::to_string(budgets.enumeration));
  }
}

}  // namespace

const char* to_string(Welfare welfare) { return welfare == Welfare::Util ? "UTIL" : "EGAL"; }

SolveReport brute_force_mms(const Instance& instance, const Budgets& budgets) {
  const auto& t = instance.topology;
  const auto leaves = t.leaves();
  const auto L = static_cast<int>(leaves.size());
  if (L > budgets.brute_leaves || instance.agents > budgets.brute_agents) {
    throw BudgetExceeded("brute", "brute force is limited to L <= " + std::to_string(budgets.brute_leaves) +
                                      " and n <= " + std::to_string(budgets.brute_agents) + " (got L = " +
                                      std::to_string(L) + ", n = " + std::to_string(instance.agents) + ")");
  }
  SolveReport report;
  report.algorithm = "brute";
  if (L == 0) {
    report.allocation = Allocation::uniform(instance);
    return report;
  }

  // Cost of every leaf subset, straight from the cost function.
  const std::size_t subsets = std::size_t{1} << L;
  std::vector<Cost> cost(subsets, 0);
  std::vector<Vertex> members;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    members.clear();
    for (int i = 0; i < L; ++i) {
      if (mask >> i & 1) members.push_back(leaves[static_cast<std::size_t>(i)]);
    }
    cost[mask] = bundle_cost(t, members);
  }

  const int agents = std::min(instance.agents, L);
  std::vector<std::uint64_t> held(static_cast<std::size_t>(agents), 0);
  std::vector<int> assign(static_cast<std::size_t>(L), 0), best_assign;
  Cost best = std::numeric_limits<Cost>::max();
  std::int64_t nodes = 0;

  // Partial maxima only grow as leaves are added, so a branch at or above the
  // incumbent cannot improve it.
  std::function<void(int, int, Cost)> rec = [&](int i, int used, Cost partial) {
    ++nodes;
    if (partial >= best) return;
    if (i == L) {
      best = partial;
      best_assign = assign;
      return;
    }
    const int limit = std::min(used + 1, agents);
    for (int a = 0; a < limit; ++a) {
      auto& h = held[static_cast<std::size_t>(a)];
      h |= std::uint64_t{1} << i;
      assign[static_cast<std::size_t>(i)] = a;
      rec(i + 1, std::max(used, a + 1), std::max(partial, cost[h]));
      h &= ~(std::uint64_t{1} << i);
    }
  };
  rec(0, 0, 0);

  std::vector<int> owner(t.size(), 0);
  owner[t.hub()] = kNoVertex;
  for (int i = 0; i < L; ++i) owner[leaves[static_cast<std::size_t>(i)]] = best_assign[static_cast<std::size_t>(i)];
  report.allocation = repair_to_nonwasteful(instance, Allocation(std::move(owner), instance.agents));
  report.share = best;
  report.stats["nodes"] = nodes;
  report.stats["subsets"] = static_cast<std::int64_t>(subsets);
  return report;
}

std::int64_t enumerate_nonwasteful(const Instance& instance, const AllocationVisitor& visit, const Budgets& budgets) {
  require_enumeration(instance, budgets);
  const auto& t = instance.topology;
  const int n = instance.agents;
  const auto leaves = t.leaves();
  std::vector<Vertex> internal;
  for (Vertex v : t.orders()) {
    if (!t.is_leaf(v)) internal.push_back(v);
  }

  std::vector<int> owner(t.size(), 0);
  owner[t.hub()] = kNoVertex;
  std::vector<int> leaf_agent(leaves.size(), 0);
  std::vector<std::vector<int>> options(internal.size());
  std::vector<std::size_t> pick(internal.size(), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::int64_t visits = 0;

  while (true) {
    for (std::size_t i = 0; i < leaves.size(); ++i) owner[leaves[i]] = leaf_agent[i];
    for (std::size_t j = 0; j < internal.size(); ++j) {
      auto& opt = options[j];
      opt.clear();
      std::fill(seen.begin(), seen.end(), 0);
      std::vector<Vertex> stack{internal[j]};
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        if (t.is_leaf(u)) {
          seen[static_cast<std::size_t>(owner[u])] = 1;
        } else {
          for (Vertex c : t.children(u)) stack.push_back(c);
        }
      }
      for (int a = 0; a < n; ++a) {
        if (seen[static_cast<std::size_t>(a)]) opt.push_back(a);
      }
      pick[j] = 0;
    }
    while (true) {
      for (std::size_t j = 0; j < internal.size(); ++j) owner[internal[j]] = options[j][pick[j]];
      ++visits;
      if (!visit(Allocation(owner, n))) return visits;
      std::size_t j = 0;
      while (j < internal.size() && ++pick[j] == options[j].size()) pick[j++] = 0;
      if (j == internal.size()) break;
    }
    std::size_t i = 0;
    while (i < leaves.size() && ++leaf_agent[i] == n) leaf_agent[i++] = 0;
    if (i == leaves.size()) break;
  }
  return visits;
}

std::int64_t enumerate_allocations(const Instance& instance, const AllocationVisitor& visit, const Budgets& budgets) {
  require_enumeration(instance, budgets);
  const auto& t = instance.topology;
  const auto orders = t.orders();
  std::vector<int> owner(t.size(), 0);
  owner[t.hub()] = kNoVertex;
  std::int64_t visits = 0;
  while (true) {
    ++visits;
    if (!visit(Allocation(owner, instance.agents))) return visits;
    std::size_t i = 0;
    while (i < orders.size() && ++owner[orders[i]] == instance.agents) owner[orders[i++]] = 0;
    if (i == orders.size()) return visits;
  }
}

Cost egalitarian_opt(const Instance& instance, const Budgets& budgets) {
  Cost best = std::numeric_limits<Cost>::max();
  enumerate_allocations(
      instance,
      [&](const Allocation& a) {
        const auto costs = allocation_costs(instance, a);
        best = std::min(best, *std::max_element(costs.begin(), costs.end()));
        return true;
      },
      budgets);
  return best;
}

Cost utilitarian_opt(const Instance& instance) { return instance.topology.total_weight(); }

bool is_pareto_optimal(const Instance& instance, const Allocation& allocation, const Budgets& budgets) {
  const auto base = allocation_costs(instance, allocation);
  bool dominated = false;
  enumerate_allocations(
      instance,
      [&](const Allocation& a) {
        const auto costs = allocation_costs(instance, a);
        bool weakly = true, strictly = false;
        for (std::size_t i = 0; i < costs.size() && weakly; ++i) {
          weakly = costs[i] <= base[i];
          strictly = strictly || costs[i] < base[i];
        }
        dominated = weakly && strictly;
        return !dominated;
      },
      budgets);
  return !dominated;
}

PonwReport ponw(const Instance& instance, Welfare benchmark, const Budgets& budgets) {
  const auto welfare = [&](const Allocation& a) {
    const auto costs = allocation_costs(instance, a);
    return benchmark == Welfare::Util ? std::accumulate(costs.begin(), costs.end(), Cost{0})
                                      : *std::max_element(costs.begin(), costs.end());
  };
  PonwReport r;
  r.benchmark = benchmark;
  r.opt = std::numeric_limits<Cost>::max();
  enumerate_allocations(
      instance,
      [&](const Allocation& a) {
        r.opt = std::min(r.opt, welfare(a));
        return true;
      },
      budgets);
  r.best_nw = std::numeric_limits<Cost>::max();
  r.worst_nw = 0;
  enumerate_nonwasteful(
      instance,
      [&](const Allocation& a) {
        const Cost w = welfare(a);
        r.best_nw = std::min(r.best_nw, w);
        r.worst_nw = std::max(r.worst_nw, w);
        return true;
      },
      budgets);
  if (r.opt == 0) throw std::domain_error("price of non-wastefulness is undefined when the optimum is 0");
  r.optimistic_ratio = Rational(r.best_nw, r.opt);
  r.pessimistic_ratio = Rational(r.worst_nw, r.opt);
  return r;
}

}  // namespace fairhaul
