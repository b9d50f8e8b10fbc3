#include <algorithm>

#include "fairhaul/classify.hpp"
#include "fairhaul/solvers.hpp"
#include "solvers_internal.hpp"

namespace fairhaul {

PvcReduction reduce_3pvc(const Instance& instance) {
  const auto& t = instance.topology;
  PvcReduction r;
  r.cover = make_leaf_free(t, min_3pvc(t));
  std::vector<char> keep(t.size(), 0);
  for (Vertex v : r.cover) keep[v] = 1;
  for (Vertex v : t.orders()) {
    if (keep[v] || !keep[t.parent(v)]) continue;
    const auto ch = t.children(v);
    if (std::any_of(ch.begin(), ch.end(), [&](Vertex c) { return keep[c] != 0; })) r.kept.push_back(v);
  }
  for (Vertex v : r.kept) keep[v] = 1;
  r.kept.insert(r.kept.end(), r.cover.begin(), r.cover.end());
  std::sort(r.kept.begin(), r.kept.end());

  const auto contracted = [&](Vertex v) { return v != t.hub() && !keep[v] && t.children(v).size() == 1; };
  std::vector<Topology::Edge> edges;
  for (Vertex v : t.orders()) {
    if (contracted(v)) continue;
    Vertex up = t.parent(v);
    while (contracted(up)) up = t.parent(up);
    edges.push_back({t.name(up), t.name(v), t.dist(v) - t.dist(up)});
  }
  r.reduced = Instance(Topology::build(t.name(t.hub()), edges, t.decimals()), instance.agents);
  return r;
}

SolveReport solve_3pvc(const Instance& instance, const Budgets& budgets) {
  return with_hub_reduction(instance, [&](const Instance& reduced) {
    const auto cover = make_leaf_free(reduced.topology, min_3pvc(reduced.topology));
    if (static_cast<std::int64_t>(cover.size()) > budgets.pvc) {
      throw BudgetExceeded("pvc", "3-path vertex cover number " + std::to_string(cover.size()) +
                                      " exceeds the budget of " + std::to_string(budgets.pvc));
    }
    const auto pvc = reduce_3pvc(reduced);
    SolveReport report = solve_internal_ilp_reduced(pvc.reduced, budgets);
    report.allocation = lift_by_leaves(reduced, pvc.reduced, report.allocation);
    report.algorithm = "3pvc+internal-ilp";
    report.stats["three_pvc"] = static_cast<std::int64_t>(pvc.cover.size());
    report.stats["contracted"] =
        static_cast<std::int64_t>(reduced.topology.size() - pvc.reduced.topology.size());
    return report;
  });
}

}  // namespace fairhaul
