#include "fairhaul/model.hpp"

#include <algorithm>
#include <set>

namespace fairhaul {

const char* to_string(InputErrorCode code) {
  switch (code) {
    case InputErrorCode::Syntax: return "syntax";
    case InputErrorCode::DuplicateEdge: return "duplicate_edge";
    case InputErrorCode::NotATree: return "not_a_tree";
    case InputErrorCode::NonpositiveWeight: return "nonpositive_weight";
    case InputErrorCode::UnknownHub: return "unknown_hub";
    case InputErrorCode::BadAgentCount: return "bad_agent_count";
    case InputErrorCode::UnknownVertex: return "unknown_vertex";
    case InputErrorCode::AllocationMismatch: return "allocation_mismatch";
  }
  return "unknown";
}

std::int64_t pow10(int decimals) {
  std::int64_t p = 1;
  for (int i = 0; i < decimals; ++i) p *= 10;
  return p;
}

std::string format_units(Cost units, int decimals) {
  if (decimals == 0) return std::to_string(units);
  const std::int64_t scale = pow10(decimals);
  const bool negative = units < 0;
  const Cost a = negative ? -units : units;
  std::string frac = std::to_string(a % scale);
  frac.insert(0, static_cast<std::size_t>(decimals) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (negative ? "-" : "") + std::to_string(a / scale);
  if (!frac.empty()) out += "." + frac;
  return out;
}

Topology Topology::build(const std::string& hub, const std::vector<Edge>& edges, int decimals) {
  Topology t;
  t.decimals_ = decimals;

  std::set<std::string> name_set{hub};
  for (const auto& e : edges) {
    name_set.insert(e.u);
    name_set.insert(e.v);
  }
  if (!edges.empty()) {
    const bool hub_used = std::any_of(edges.begin(), edges.end(),
                                      [&](const Edge& e) { return e.u == hub || e.v == hub; });
    if (!hub_used) throw InputError(InputErrorCode::UnknownHub, "hub '" + hub + "' is not an endpoint of any edge");
  }
  t.names_.assign(name_set.begin(), name_set.end());
  for (std::size_t i = 0; i < t.names_.size(); ++i) t.index_.emplace(t.names_[i], static_cast<Vertex>(i));
  const std::size_t n = t.names_.size();
  t.hub_ = t.index_.at(hub);

  std::vector<std::vector<std::pair<Vertex, Cost>>> adj(n);
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& e : edges) {
    if (e.weight <= 0) {
      throw InputError(InputErrorCode::NonpositiveWeight,
                       "edge " + e.u + "-" + e.v + " has nonpositive weight");
    }
    const Vertex a = t.index_.at(e.u);
    const Vertex b = t.index_.at(e.v);
    if (a == b) throw InputError(InputErrorCode::NotATree, "not a tree: self-loop at " + e.u);
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      throw InputError(InputErrorCode::DuplicateEdge, "duplicate edge " + e.u + "-" + e.v);
    }
    adj[a].emplace_back(b, e.weight);
    adj[b].emplace_back(a, e.weight);
  }
  if (edges.size() + 1 != n) {
    throw InputError(InputErrorCode::NotATree,
                     "not a tree: " + std::to_string(edges.size()) + " edges on " + std::to_string(n) + " vertices");
  }

  t.parent_.assign(n, kNoVertex);
  t.parent_weight_.assign(n, 0);
  t.depth_.assign(n, 0);
  t.dist_.assign(n, 0);
  std::vector<std::vector<Vertex>> kids(n);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> stack{t.hub_};
  visited[t.hub_] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    t.preorder_.push_back(v);
    std::sort(adj[v].begin(), adj[v].end());
    // Reverse push so that children pop in ascending index order.
    for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it) {
      const auto [u, w] = *it;
      if (u == t.parent_[v]) continue;
      if (visited[u]) throw InputError(InputErrorCode::NotATree, "not a tree: cycle through " + t.names_[u]);
      visited[u] = 1;
      t.parent_[u] = v;
      t.parent_weight_[u] = w;
      t.depth_[u] = t.depth_[v] + 1;
      t.dist_[u] = t.dist_[v] + w;
      t.total_weight_ += w;
      stack.push_back(u);
    }
    for (const auto& [u, w] : adj[v]) {
      if (u != t.parent_[v]) kids[v].push_back(u);
    }
  }
  if (t.preorder_.size() != n) throw InputError(InputErrorCode::NotATree, "not a tree: graph is disconnected");

  t.child_offset_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    t.child_offset_[v + 1] = t.child_offset_[v] + kids[v].size();
    t.children_.insert(t.children_.end(), kids[v].begin(), kids[v].end());
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto vv = static_cast<Vertex>(v);
    if (vv == t.hub_) continue;
    t.orders_.push_back(vv);
    if (kids[v].empty()) t.leaves_.push_back(vv);
  }
  return t;
}

int Topology::degree(Vertex v) const {
  return static_cast<int>(children(v).size()) + (parent_[v] == kNoVertex ? 0 : 1);
}

std::optional<Vertex> Topology::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Topology::at(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError(InputErrorCode::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
}

bool Topology::is_unweighted() const { return distinct_weight_count() <= 1; }

int Topology::distinct_weight_count() const {
  std::set<Cost> w;
  for (Vertex v : orders_) w.insert(parent_weight_[v]);
  return static_cast<int>(w.size());
}

Cost Topology::max_weight() const {
  Cost best = 0;
  for (Vertex v : orders_) best = std::max(best, parent_weight_[v]);
  return best;
}

std::vector<Topology::Edge> Topology::edges() const {
  std::vector<Edge> out;
  out.reserve(orders_.size());
  for (Vertex v : orders_) out.push_back({names_[parent_[v]], names_[v], parent_weight_[v]});
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return out;
}

Instance::Instance(Topology t, int n) : topology(std::move(t)), agents(n) {
  if (n < 1) throw InputError(InputErrorCode::BadAgentCount, "agent count must be at least 1, got " + std::to_string(n));
}

Allocation Allocation::uniform(const Instance& instance, int agent) {
  std::vector<int> owner(instance.topology.size(), agent);
  owner[instance.topology.hub()] = kNoVertex;
  return Allocation(std::move(owner), instance.agents);
}

std::vector<Vertex> Allocation::bundle(int agent) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < owner_.size(); ++v) {
    if (owner_[v] == agent) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

void Allocation::validate(const Instance& instance) const {
  const auto& t = instance.topology;
  if (agents_ != instance.agents) {
    throw InputError(InputErrorCode::AllocationMismatch,
                     "allocation has " + std::to_string(agents_) + " agents, instance has " +
                         std::to_string(instance.agents));
  }
  if (owner_.size() != t.size()) {
    throw InputError(InputErrorCode::AllocationMismatch, "allocation does not cover the instance's vertex set");
  }
  for (std::size_t v = 0; v < owner_.size(); ++v) {
    const auto vv = static_cast<Vertex>(v);
    if (vv == t.hub()) {
      if (owner_[v] != kNoVertex) throw InputError(InputErrorCode::AllocationMismatch, "the hub cannot be assigned");
    } else if (owner_[v] < 0 || owner_[v] >= agents_) {
      throw InputError(InputErrorCode::AllocationMismatch, "order '" + t.name(vv) + "' has no valid agent");
    }
  }
}

Cost dist_to_hub(const Topology& topology, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= topology.size()) {
    throw InputError(InputErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
  }
  return topology.dist(v);
}

namespace {

void check_orders(const Topology& topology, std::span<const Vertex> orders) {
  for (Vertex v : orders) {
    if (!topology.is_order(v)) {
      throw InputError(InputErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " is not an order");
    }
  }
}

}  // namespace

std::vector<Vertex> closure(const Topology& topology, std::span<const Vertex> orders) {
  check_orders(topology, orders);
  std::vector<char> marked(topology.size(), 0);
  for (Vertex v : orders) {
    while (v != topology.hub() && !marked[v]) {
      marked[v] = 1;
      v = topology.parent(v);
    }
  }
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < marked.size(); ++v) {
    if (marked[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

Cost bundle_cost(const Topology& topology, std::span<const Vertex> orders) {
  check_orders(topology, orders);
  std::vector<char> marked(topology.size(), 0);
  Cost total = 0;
  for (Vertex v : orders) {
    while (v != topology.hub() && !marked[v]) {
      marked[v] = 1;
      total += topology.parent_weight(v);
      v = topology.parent(v);
    }
  }
  return total;
}

std::vector<Cost> allocation_costs(const Instance& instance, const Allocation& allocation) {
  allocation.validate(instance);
  std::vector<Cost> costs(static_cast<std::size_t>(instance.agents), 0);
  for (int i = 0; i < instance.agents; ++i) {
    const auto b = allocation.bundle(i);
    costs[static_cast<std::size_t>(i)] = bundle_cost(instance.topology, b);
  }
  return costs;
}

std::vector<std::vector<Vertex>> leaf_sets(const Instance& instance, const Allocation& allocation) {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(instance.agents));
  for (Vertex l : instance.topology.leaves()) out[static_cast<std::size_t>(allocation.owner(l))].push_back(l);
  return out;
}

LeafMasks leaf_masks(const Topology& topology) {
  LeafMasks lm;
  lm.leaves.assign(topology.leaves().begin(), topology.leaves().end());
  if (lm.leaves.size() > 63) throw BudgetExceeded("leaves", "more than 63 leaves cannot be represented as a bitmask");
  lm.subtree.assign(topology.size(), 0);
  for (std::size_t i = 0; i < lm.leaves.size(); ++i) lm.subtree[lm.leaves[i]] = std::uint64_t{1} << i;
  const auto pre = topology.preorder();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    const Vertex p = topology.parent(*it);
    if (p != kNoVertex) lm.subtree[p] |= lm.subtree[*it];
  }
  for (Vertex v : topology.orders()) {
    lm.edge_mask.push_back(lm.subtree[v]);
    lm.edge_weight.push_back(topology.parent_weight(v));
  }
  return lm;
}

Allocation complete_from_leaves(const Instance& instance, std::span<const int> leaf_owner) {
  const auto& t = instance.topology;
  const auto leaves = t.leaves();
  if (leaf_owner.size() != leaves.size()) {
    throw InputError(InputErrorCode::AllocationMismatch, "leaf owner list does not match the leaf count");
  }
  std::vector<int> owner(t.size(), instance.agents);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaf_owner[i] < 0 || leaf_owner[i] >= instance.agents) {
      throw InputError(InputErrorCode::AllocationMismatch, "leaf owner out of range");
    }
    owner[leaves[i]] = leaf_owner[i];
  }
  const auto pre = t.preorder();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    const Vertex p = t.parent(*it);
    if (p != kNoVertex) owner[p] = std::min(owner[p], owner[*it]);
  }
  owner[t.hub()] = kNoVertex;
  return Allocation(std::move(owner), instance.agents);
}

}  // namespace fairhaul
