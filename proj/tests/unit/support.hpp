#pragma once

#include <algorithm>
#include <filesystem>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fairhaul/model.hpp"
#include "fairhaul/nonwaste.hpp"
#include "fairhaul/report.hpp"

namespace fh_test {

using namespace fairhaul;

struct E {
  const char* u;
  const char* v;
  Cost w = 1;
};

inline Instance make(const char* hub, std::initializer_list<E> edges, int agents) {
  std::vector<Topology::Edge> list;
  for (const auto& e : edges) list.push_back({e.u, e.v, e.w});
  return Instance(Topology::build(hub, list), agents);
}

inline Instance unit_star(int m, int n) {
  std::vector<Topology::Edge> edges;
  for (int i = 0; i < m; ++i) edges.push_back({"h", "x" + std::to_string(100 + i), 1});
  return Instance(Topology::build("h", edges), n);
}

inline Instance weighted_star(std::vector<Cost> w, int n) {
  std::vector<Topology::Edge> edges;
  for (std::size_t i = 0; i < w.size(); ++i) edges.push_back({"h", "x" + std::to_string(100 + i), w[i]});
  return Instance(Topology::build("h", edges), n);
}

// Two branches: h-v1-v5 and h-v2-v3-{v4,v6}, three agents.
inline Instance two_branch() {
  return make("h", {{"h", "v1"}, {"v1", "v5"}, {"h", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v3", "v6"}}, 3);
}

inline Allocation by_names(const Instance& inst, std::initializer_list<std::pair<const char*, int>> owners) {
  std::vector<int> owner(inst.topology.size(), 0);
  owner[inst.topology.hub()] = kNoVertex;
  for (const auto& [name, agent] : owners) owner[inst.topology.at(name)] = agent;
  return Allocation(std::move(owner), inst.agents);
}

// Cost of a set of orders, computed independently from the library: the
// number of distinct edges on the union of hub paths, weighted.
inline Cost reference_cost(const Topology& t, const std::vector<Vertex>& bundle) {
  std::set<Vertex> edges;
  for (Vertex v : bundle) {
    for (Vertex u = v; u != t.hub(); u = t.parent(u)) edges.insert(u);
  }
  Cost total = 0;
  for (Vertex u : edges) total += t.parent_weight(u);
  return total;
}

// MMS-share over all n^m allocations of every order (no leaf reasoning).
inline Cost reference_share_all(const Instance& inst) {
  const auto& t = inst.topology;
  const std::vector<Vertex> orders(t.orders().begin(), t.orders().end());
  std::vector<int> assign(orders.size(), 0);
  Cost best = -1;
  while (true) {
    Cost worst = 0;
    for (int a = 0; a < inst.agents; ++a) {
      std::vector<Vertex> b;
      for (std::size_t i = 0; i < orders.size(); ++i)
        if (assign[i] == a) b.push_back(orders[i]);
      worst = std::max(worst, reference_cost(t, b));
    }
    if (best < 0 || worst < best) best = worst;
    std::size_t i = 0;
    while (i < assign.size() && ++assign[i] == inst.agents) assign[i++] = 0;
    if (i == assign.size()) break;
  }
  return best < 0 ? 0 : best;
}

// MMS-share over assignments of leaves only (internal orders follow their
// leaves), each leaf set costed with reference_cost.
inline Cost reference_share_leaves(const Instance& inst) {
  const auto& t = inst.topology;
  const std::vector<Vertex> leaves(t.leaves().begin(), t.leaves().end());
  if (leaves.empty()) return 0;
  std::vector<int> assign(leaves.size(), 0);
  Cost best = -1;
  while (true) {
    Cost worst = 0;
    for (int a = 0; a < inst.agents; ++a) {
      std::vector<Vertex> b;
      for (std::size_t i = 0; i < leaves.size(); ++i)
        if (assign[i] == a) b.push_back(leaves[i]);
      worst = std::max(worst, reference_cost(t, b));
    }
    if (best < 0 || worst < best) best = worst;
    std::size_t i = 0;
    while (i < assign.size() && ++assign[i] == inst.agents) assign[i++] = 0;
    if (i == assign.size()) break;
  }
  return best;
}

inline Cost max_cost(const Instance& inst, const Allocation& a) {
  const auto c = allocation_costs(inst, a);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end());
}

// Witness contract shared by every solver.
inline bool witness_ok(const Instance& inst, const SolveReport& r) {
  r.allocation.validate(inst);
  return verify_nonwasteful(inst, r.allocation).nonwasteful && max_cost(inst, r.allocation) == r.share;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("fairhaul_unit_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace fh_test
