#include "fairhaul/fairness.hpp"

#include <algorithm>
#include <numeric>

#include "fairhaul/nonwaste.hpp"
#include "fairhaul/report.hpp"
#include "fairhaul/solvers.hpp"

namespace fairhaul {

namespace {

// Largest cost drop obtainable by removing one order from `bundle`. An order
// v only saves something when it is the sole bundle member in its subtree;
// the saving is then the path from v up to the first ancestor that still
// covers another bundle member.
Cost best_single_removal(const Topology& t, std::span<const Vertex> bundle, std::vector<int>& below,
                         std::vector<Vertex>& touched) {
  touched.clear();
  for (Vertex v : bundle) {
    for (Vertex u = v; u != t.hub(); u = t.parent(u)) {
      if (below[u] == 0) touched.push_back(u);
      below[u] += 1;
    }
  }
  Cost best = 0;
  for (Vertex v : bundle) {
    Cost saving = 0;
    for (Vertex u = v; u != t.hub() && below[u] == 1; u = t.parent(u)) saving += t.parent_weight(u);
    best = std::max(best, saving);
  }
  for (Vertex u : touched) below[u] = 0;
  return best;
}

std::vector<std::size_t> rank_of(std::span<const int> order, std::size_t size) {
  std::vector<std::size_t> rank(size);
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  if (order.empty()) return rank;
  if (order.size() != size) throw std::invalid_argument("priority list has the wrong length");
  std::vector<char> seen(size, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int x = order[i];
    if (x < 0 || static_cast<std::size_t>(x) >= size || seen[x]) {
      throw std::invalid_argument("priority list is not a permutation");
    }
    seen[x] = 1;
    rank[x] = i;
  }
  return rank;
}

std::vector<Vertex> leaf_sequence(const Topology& t, std::span<const Vertex> order) {
  std::vector<Vertex> leaves(t.leaves().begin(), t.leaves().end());
  if (order.empty()) return leaves;
  std::vector<Vertex> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != leaves) throw std::invalid_argument("leaf order must list every leaf exactly once");
  return {order.begin(), order.end()};
}

// Bundle costs grown one leaf at a time.
class Growth {
 public:
  Growth(const Topology& t, int agents) : t_(t), covered_(static_cast<std::size_t>(agents)), cost_(agents, 0) {
    for (auto& c : covered_) c.assign(t.size(), 0);
  }

  Cost marginal(int agent, Vertex leaf) const {
    Cost add = 0;
    for (Vertex u = leaf; u != t_.hub() && !covered_[agent][u]; u = t_.parent(u)) add += t_.parent_weight(u);
    return add;
  }

  void take(int agent, Vertex leaf) {
    cost_[agent] += marginal(agent, leaf);
    for (Vertex u = leaf; u != t_.hub() && !covered_[agent][u]; u = t_.parent(u)) covered_[agent][u] = 1;
  }

  Cost cost(int agent) const { return cost_[agent]; }

 private:
  const Topology& t_;
  std::vector<std::vector<char>> covered_;
  std::vector<Cost> cost_;
};

Allocation finish(const Instance& instance, const std::vector<int>& leaf_owner) {
  const auto& t = instance.topology;
  std::vector<int> owner(t.size(), 0);
  owner[t.hub()] = kNoVertex;
  for (std::size_t i = 0; i < t.leaves().size(); ++i) owner[t.leaves()[i]] = leaf_owner[i];
  return repair_to_nonwasteful(instance, Allocation(std::move(owner), instance.agents));
}

bool hub_star(const Topology& t) {
  return std::all_of(t.orders().begin(), t.orders().end(), [&](Vertex v) { return t.parent(v) == t.hub(); });
}

// Round-robin leaf owners on the hub-reduced star, lifted back.
std::optional<Allocation> balanced_star(const Instance& instance, bool require_divisible) {
  const auto red = preprocess_hub_leaf(instance);
  const auto& r = red.reduced.topology;
  if (!hub_star(r) || !r.is_unweighted()) throw NotApplicable("expected an unweighted star");
  const int n = instance.agents;
  if (r.order_count() == 0) {
    if (require_divisible && instance.m() > 0 && n > 1) return std::nullopt;
    return Allocation::uniform(instance);
  }
  if (require_divisible && r.order_count() % static_cast<std::size_t>(n) != 0) return std::nullopt;
  std::vector<int> leaf_owner(r.leaves().size());
  for (std::size_t i = 0; i < leaf_owner.size(); ++i) leaf_owner[i] = static_cast<int>(i % static_cast<std::size_t>(n));
  const Allocation reduced = complete_from_leaves(red.reduced, leaf_owner);
  return lift_by_leaves(instance, red.reduced, reduced);
}

Instance named_tree(const std::string& hub, std::initializer_list<std::pair<const char*, const char*>> edges,
                    int agents) {
  std::vector<Topology::Edge> list;
  for (const auto& [u, v] : edges) list.push_back({u, v, 1});
  return Instance(Topology::build(hub, list), agents);
}

}  // namespace

bool is_ef(const Instance& instance, const Allocation& allocation) {
  const auto costs = allocation_costs(instance, allocation);
  return std::adjacent_find(costs.begin(), costs.end(), std::not_equal_to<>()) == costs.end();
}

bool is_ef1(const Instance& instance, const Allocation& allocation) {
  const auto costs = allocation_costs(instance, allocation);
  const auto& t = instance.topology;
  const int n = instance.agents;
  if (n < 2) return true;
  // Smallest and second smallest cost, to get min over j != i quickly.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::partial_sort(idx.begin(), idx.begin() + 2, idx.end(), [&](int a, int b) { return costs[a] < costs[b]; });
  std::vector<int> below(t.size(), 0);
  std::vector<Vertex> touched;
  for (int i = 0; i < n; ++i) {
    const Cost other = costs[i == idx[0] ? idx[1] : idx[0]];
    if (costs[i] <= other) continue;
    const auto bundle = allocation.bundle(i);
    if (bundle.empty()) continue;
    if (costs[i] - best_single_removal(t, bundle, below, touched) > other) return false;
  }
  return true;
}

Allocation round_robin(const Instance& instance, std::span<const int> agent_order,
                       std::span<const Vertex> leaf_priority) {
  const auto& t = instance.topology;
  const int n = instance.agents;
  const auto agent_rank = rank_of(agent_order, static_cast<std::size_t>(n));
  std::vector<int> turn(n);
  for (int a = 0; a < n; ++a) turn[agent_rank[a]] = a;
  const auto leaves = leaf_sequence(t, leaf_priority);

  Growth growth(t, n);
  std::vector<char> taken(leaves.size(), 0);
  std::vector<int> owner_of(t.size(), 0);
  for (std::size_t round = 0; round < leaves.size(); ++round) {
    const int agent = turn[round % static_cast<std::size_t>(n)];
    std::size_t pick = leaves.size();
    Cost best = 0;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (taken[i]) continue;
      const Cost add = growth.marginal(agent, leaves[i]);
      if (pick == leaves.size() || add < best) {
        pick = i;
        best = add;
      }
    }
    taken[pick] = 1;
    growth.take(agent, leaves[pick]);
    owner_of[leaves[pick]] = agent;
  }
  std::vector<int> leaf_owner;
  for (Vertex leaf : t.leaves()) leaf_owner.push_back(owner_of[leaf]);
  return finish(instance, leaf_owner);
}

Allocation envy_cycle(const Instance& instance, std::span<const Vertex> leaf_order,
                      std::span<const int> agent_priority) {
  const auto& t = instance.topology;
  const int n = instance.agents;
  const auto agent_rank = rank_of(agent_priority, static_cast<std::size_t>(n));
  const auto leaves = leaf_sequence(t, leaf_order);

  Growth growth(t, n);
  std::vector<int> owner_of(t.size(), 0);
  for (Vertex leaf : leaves) {
    // With identical costs an agent envies nobody iff its cost is minimal.
    int pick = 0;
    for (int a = 1; a < n; ++a) {
      if (growth.cost(a) < growth.cost(pick) ||
          (growth.cost(a) == growth.cost(pick) && agent_rank[a] < agent_rank[pick])) {
        pick = a;
      }
    }
    growth.take(pick, leaf);
    owner_of[leaf] = pick;
  }
  std::vector<int> leaf_owner;
  for (Vertex leaf : t.leaves()) leaf_owner.push_back(owner_of[leaf]);
  return finish(instance, leaf_owner);
}

std::optional<Allocation> star_ef(const Instance& instance) { return balanced_star(instance, true); }

Allocation star_ef1(const Instance& instance) { return *balanced_star(instance, false); }

IncompatibilityInstances incompatibility_instances() {
  return {named_tree("h", {{"u", "h"}, {"h", "x"}, {"x", "v"}}, 2),
          named_tree("h", {{"u", "h"}, {"h", "x"}, {"x", "v"}, {"v", "w"}}, 2)};
}

Instance mechanism_counterexample() {
  return named_tree("h",
                    {{"h", "a"}, {"a", "l1"},
                     {"h", "b1"}, {"b1", "b2"}, {"b2", "b3"}, {"b3", "l2"},
                     {"b2", "c1"}, {"c1", "c2"}, {"c2", "c3"}, {"c3", "l3"}},
                    2);
}

}  // namespace fairhaul
