#include <algorithm>
#include <map>

#include "fairhaul/classify.hpp"
#include "fairhaul/solvers.hpp"
#include "solvers_internal.hpp"

namespace fairhaul {

namespace {

bool hub_star(const Topology& t) {
  return std::all_of(t.orders().begin(), t.orders().end(), [&](Vertex v) { return t.parent(v) == t.hub(); });
}

SolveReport star_unweighted_core(const Instance& instance) {
  const auto& t = instance.topology;
  if (!hub_star(t)) throw NotApplicable("star solver needs every order adjacent to the hub");
  if (!t.is_unweighted()) throw NotApplicable("unweighted star solver needs equal edge weights");
  SolveReport report;
  report.algorithm = "star-unweighted";
  const auto m = static_cast<Cost>(t.order_count());
  const int n = instance.agents;
  report.share = (m + n - 1) / n * t.max_weight();
  std::vector<int> leaf_owner(t.leaves().size());
  for (std::size_t i = 0; i < leaf_owner.size(); ++i) leaf_owner[i] = static_cast<int>(i % static_cast<std::size_t>(n));
  report.allocation = complete_from_leaves(instance, leaf_owner);
  return report;
}

// Multiway number partitioning: reachable sorted tuples of part sums, item by
// item (largest first), discarding tuples whose largest part exceeds the
// greedy bound.
SolveReport star_weighted_core(const Instance& instance, const Budgets& budgets) {
  const auto& t = instance.topology;
  if (!hub_star(t)) throw NotApplicable("star solver needs every order adjacent to the hub");
  if (instance.agents > budgets.star_agents || t.max_weight() > budgets.star_max_weight) {
    throw BudgetExceeded("star", "weighted star solver is limited to n <= " + std::to_string(budgets.star_agents) +
                                     " and weights <= " + std::to_string(budgets.star_max_weight) + " units");
  }
  SolveReport report;
  report.algorithm = "star-weighted";
  std::vector<Vertex> items(t.leaves().begin(), t.leaves().end());
  std::stable_sort(items.begin(), items.end(),
                   [&](Vertex a, Vertex b) { return t.parent_weight(a) > t.parent_weight(b); });
  const std::size_t m = items.size();
  if (m == 0) {
    report.allocation = Allocation::uniform(instance);
    return report;
  }
  const auto parts = static_cast<std::size_t>(std::min<std::int64_t>(instance.agents, static_cast<std::int64_t>(m)));

  // Longest-processing-time bound.
  std::vector<Cost> greedy(parts, 0);
  for (Vertex v : items) *std::min_element(greedy.begin(), greedy.end()) += t.parent_weight(v);
  const Cost bound = *std::max_element(greedy.begin(), greedy.end());

  using State = std::vector<Cost>;  // ascending part sums
  struct Back {
    std::size_t prev = 0;  // index into the previous layer
    std::size_t part = 0;  // position in the previous state that received the item
  };
  std::vector<std::vector<State>> layer_states(m + 1);
  std::vector<std::vector<Back>> layer_back(m + 1);
  layer_states[0].push_back(State(parts, 0));
  layer_back[0].push_back({});
  std::int64_t states = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const Cost w = t.parent_weight(items[i]);
    std::map<State, std::size_t> seen;
    for (std::size_t si = 0; si < layer_states[i].size(); ++si) {
      const State& s = layer_states[i][si];
      for (std::size_t p = 0; p < parts; ++p) {
        if (p > 0 && s[p] == s[p - 1]) continue;
        State next = s;
        next[p] += w;
        if (next[p] > bound) continue;
        std::sort(next.begin(), next.end());
        if (seen.emplace(next, layer_states[i + 1].size()).second) {
          layer_states[i + 1].push_back(std::move(next));
          layer_back[i + 1].push_back({si, p});
        }
      }
    }
    states += static_cast<std::int64_t>(layer_states[i + 1].size());
  }
  const auto& last = layer_states[m];
  std::size_t best = 0;
  for (std::size_t si = 1; si < last.size(); ++si) {
    if (last[si].back() < last[best].back()) best = si;
  }
  report.share = last[best].back();

  // Walk back, keeping an agent label for each position of the current state.
  std::vector<int> label(parts);
  for (std::size_t p = 0; p < parts; ++p) label[p] = static_cast<int>(p);
  std::map<Vertex, int> owner_of;
  std::size_t cur = best;
  for (std::size_t i = m; i > 0; --i) {
    const Back b = layer_back[i][cur];
    const State& now = layer_states[i][cur];
    const State& before = layer_states[i - 1][b.prev];
    const Cost target = before[b.part] + t.parent_weight(items[i - 1]);
    const auto pos = static_cast<std::size_t>(std::find(now.begin(), now.end(), target) - now.begin());
    owner_of[items[i - 1]] = label[pos];
    std::vector<int> rest;
    for (std::size_t p = 0; p < parts; ++p) {
      if (p != pos) rest.push_back(label[p]);
    }
    std::vector<int> prev_label(parts);
    for (std::size_t p = 0, r = 0; p < parts; ++p) prev_label[p] = p == b.part ? label[pos] : rest[r++];
    label = std::move(prev_label);
    cur = b.prev;
  }
  std::vector<int> leaf_owner;
  for (Vertex leaf : t.leaves()) leaf_owner.push_back(owner_of.at(leaf));
  report.allocation = complete_from_leaves(instance, leaf_owner);
  report.stats["states"] = states;
  return report;
}

SolveReport path_core(const Instance& instance) {
  const auto& t = instance.topology;
  if (!is_path(t)) throw NotApplicable("path solver needs a path topology");
  SolveReport report;
  report.algorithm = "path";
  if (t.order_count() == 0) {
    report.allocation = Allocation::uniform(instance);
    return report;
  }
  if (instance.agents == 1) {
    report.share = t.total_weight();
    report.allocation = Allocation::uniform(instance);
    return report;
  }
  std::vector<int> leaf_owner;
  for (Vertex leaf : t.leaves()) {
    report.share = std::max(report.share, t.dist(leaf));
    leaf_owner.push_back(static_cast<int>(leaf_owner.size()));
  }
  report.allocation = complete_from_leaves(instance, leaf_owner);
  return report;
}

}  // namespace

SolveReport solve_star_unweighted(const Instance& instance) {
  return with_hub_reduction(instance, [](const Instance& reduced) { return star_unweighted_core(reduced); });
}

SolveReport solve_star_weighted(const Instance& instance, const Budgets& budgets) {
  return with_hub_reduction(instance,
                            [&](const Instance& reduced) { return star_weighted_core(reduced, budgets); });
}

SolveReport solve_path(const Instance& instance) {
  return with_hub_reduction(instance, [](const Instance& reduced) { return path_core(reduced); });
}

}  // namespace fairhaul
