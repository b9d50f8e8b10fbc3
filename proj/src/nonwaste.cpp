#include "fairhaul/nonwaste.hpp"

#include <algorithm>
#include <unordered_set>

namespace fairhaul {

NonwasteResult verify_nonwasteful(const Instance& instance, const Allocation& allocation) {
  allocation.validate(instance);
  const auto& t = instance.topology;
  const auto n = static_cast<std::uint64_t>(instance.agents);
  std::unordered_set<std::uint64_t> present;
  for (Vertex leaf : t.leaves()) {
    const auto agent = static_cast<std::uint64_t>(allocation.owner(leaf));
    for (Vertex v = leaf; v != t.hub(); v = t.parent(v)) {
      if (!present.insert(static_cast<std::uint64_t>(v) * n + agent).second) break;
    }
  }
  for (Vertex v : t.preorder()) {
    if (v == t.hub()) continue;
    const int agent = allocation.owner(v);
    if (!present.contains(static_cast<std::uint64_t>(v) * n + static_cast<std::uint64_t>(agent))) {
      return {false, WasteWitness{v, agent}};
    }
  }
  return {};
}

NonwasteResult verify_nonwasteful_naive(const Instance& instance, const Allocation& allocation) {
  allocation.validate(instance);
  const auto& t = instance.topology;
  for (Vertex v : t.preorder()) {
    if (v == t.hub()) continue;
    const int agent = allocation.owner(v);
    bool found = false;
    std::vector<Vertex> stack{v};
    while (!stack.empty() && !found) {
      const Vertex u = stack.back();
      stack.pop_back();
      if (t.is_leaf(u)) {
        found = allocation.owner(u) == agent;
      } else {
        for (Vertex c : t.children(u)) stack.push_back(c);
      }
    }
    if (!found) return {false, WasteWitness{v, agent}};
  }
  return {};
}

Allocation repair_to_nonwasteful(const Instance& instance, const Allocation& allocation) {
  allocation.validate(instance);
  const auto& t = instance.topology;
  std::vector<Vertex> leaves(t.leaves().begin(), t.leaves().end());
  std::stable_sort(leaves.begin(), leaves.end(),
                   [&](Vertex a, Vertex b) { return allocation.owner(a) < allocation.owner(b); });
  std::vector<int> owner(allocation.owners().begin(), allocation.owners().end());
  std::vector<char> claimed(t.size(), 0);
  for (Vertex leaf : leaves) {
    const int agent = allocation.owner(leaf);
    for (Vertex v = leaf; v != t.hub() && !claimed[v]; v = t.parent(v)) {
      claimed[v] = 1;
      owner[v] = agent;
    }
  }
  return Allocation(std::move(owner), instance.agents);
}

}  // namespace fairhaul
