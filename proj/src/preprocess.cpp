#include <algorithm>
#include <map>

#include "fairhaul/solvers.hpp"

namespace fairhaul {

std::optional<HubReduction> reduce_hub_leaf_once(const Instance& instance) {
  const auto& t = instance.topology;
  if (t.degree(t.hub()) != 1) return std::nullopt;
  const Vertex next = t.children(t.hub())[0];
  std::vector<Topology::Edge> edges;
  for (const auto& e : t.edges()) {
    if (e.u != t.name(t.hub())) edges.push_back(e);
  }
  HubReduction r{Instance(Topology::build(t.name(next), edges, t.decimals()), instance.agents),
                 t.parent_weight(next), 1};
  return r;
}

HubReduction preprocess_hub_leaf(const Instance& instance) {
  HubReduction acc{instance, 0, 0};
  while (auto step = reduce_hub_leaf_once(acc.reduced)) {
    acc.offset += step->offset;
    acc.steps += 1;
    acc.reduced = std::move(step->reduced);
  }
  return acc;
}

Allocation lift_by_leaves(const Instance& original, const Instance& reduced, const Allocation& allocation) {
  const auto& t = original.topology;
  const auto& r = reduced.topology;
  int fallback = r.orders().empty() ? 0 : allocation.owner(r.orders()[0]);
  for (Vertex v : r.orders()) fallback = std::min(fallback, allocation.owner(v));
  std::vector<int> leaf_owner;
  leaf_owner.reserve(t.leaves().size());
  for (Vertex leaf : t.leaves()) {
    const auto v = r.find(t.name(leaf));
    leaf_owner.push_back(v && r.is_order(*v) ? allocation.owner(*v) : fallback);
  }
  return complete_from_leaves(original, leaf_owner);
}

LeafTypeTable leaf_types(const Topology& t) {
  LeafTypeTable table;
  std::map<std::pair<Vertex, Cost>, std::size_t> index;
  for (Vertex leaf : t.leaves()) {
    const auto key = std::make_pair(t.parent(leaf), t.parent_weight(leaf));
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, table.types.size()).first;
      table.types.push_back({key.first, key.second, t.dist(key.first), {}});
    }
    table.types[it->second].leaves.push_back(leaf);
  }
  std::sort(table.types.begin(), table.types.end(), [](const LeafType& a, const LeafType& b) {
    return std::tie(a.parent, a.weight) < std::tie(b.parent, b.weight);
  });
  table.k = static_cast<int>(t.size() - t.leaves().size());
  table.psi = t.distinct_weight_count();
  return table;
}

}  // namespace fairhaul
