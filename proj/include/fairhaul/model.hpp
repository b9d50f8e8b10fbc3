#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fairhaul/types.hpp"

namespace fairhaul {

/// An edge-weighted tree rooted at a hub.
///
/// Vertices are named by opaque strings in files and mapped to dense indices
/// in lexicographic name order. The rooted structure (parent, children,
/// depth, hub distance, leaves) is computed once at construction; the object
/// is immutable afterwards.
class Topology {
 public:
  struct Edge {
    std::string u;
    std::string v;
    Cost weight = 1;  // fixed-point units
  };

  Topology() = default;

  /// Validates and roots the tree. Throws InputError on duplicate edges,
  /// nonpositive weights, cycles/disconnection, or a hub outside the vertex set.
  /// With no edges the topology is the single vertex `hub`.
  static Topology build(const std::string& hub, const std::vector<Edge>& edges, int decimals = 0);

  std::size_t size() const { return names_.size(); }
  /// m: every vertex except the hub is an order.
  std::size_t order_count() const { return names_.empty() ? 0 : names_.size() - 1; }

  Vertex hub() const { return hub_; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  Cost parent_weight(Vertex v) const { return parent_weight_[v]; }
  std::span<const Vertex> children(Vertex v) const {
    return {children_.data() + child_offset_[v], children_.data() + child_offset_[v + 1]};
  }
  int degree(Vertex v) const;
  int depth(Vertex v) const { return depth_[v]; }
  Cost dist(Vertex v) const { return dist_[v]; }

  /// A leaf is an order without children in the hub-rooted tree.
  bool is_leaf(Vertex v) const { return v != hub_ && children(v).empty(); }
  bool is_order(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < size() && v != hub_; }
  std::span<const Vertex> leaves() const { return leaves_; }
  std::span<const Vertex> orders() const { return orders_; }
  /// Hub first, parents before children.
  std::span<const Vertex> preorder() const { return preorder_; }

  const std::string& name(Vertex v) const { return names_[v]; }
  std::optional<Vertex> find(std::string_view name) const;
  /// Like find() but throws InputError(UnknownVertex).
  Vertex at(std::string_view name) const;

  int decimals() const { return decimals_; }
  Cost total_weight() const { return total_weight_; }
  /// True when all edges carry the same weight (vacuously true without edges).
  bool is_unweighted() const;
  int distinct_weight_count() const;
  Cost max_weight() const;

  /// Canonical edge list: (parent, child) pairs sorted by names.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  Vertex hub_ = kNoVertex;
  std::vector<Vertex> parent_;
  std::vector<Cost> parent_weight_;
  std::vector<std::size_t> child_offset_;
  std::vector<Vertex> children_;
  std::vector<int> depth_;
  std::vector<Cost> dist_;
  std::vector<Vertex> leaves_;
  std::vector<Vertex> orders_;
  std::vector<Vertex> preorder_;
  int decimals_ = 0;
  Cost total_weight_ = 0;
};

/// A topology together with n identical agents.
struct Instance {
  Topology topology;
  int agents = 1;

  Instance() = default;
  Instance(Topology t, int n);

  std::size_t m() const { return topology.order_count(); }
};

/// A total assignment of orders to agents 0..n-1 (files use 1..n).
class Allocation {
 public:
  Allocation() = default;
  /// owner[v] for every vertex; the hub entry must be kNoVertex (-1).
  Allocation(std::vector<int> owner, int agents) : owner_(std::move(owner)), agents_(agents) {}

  /// Every order assigned to `agent`.
  static Allocation uniform(const Instance& instance, int agent = 0);

  int agents() const { return agents_; }
  int owner(Vertex v) const { return owner_[v]; }
  void set_owner(Vertex v, int agent) { owner_[v] = agent; }
  std::span<const int> owners() const { return owner_; }
  /// pi_i in ascending vertex order.
  std::vector<Vertex> bundle(int agent) const;

  /// Throws InputError(AllocationMismatch) unless this is a total allocation for `instance`.
  void validate(const Instance& instance) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<int> owner_;
  int agents_ = 0;
};

/// Sum of weights on the hub-to-v path; 0 for the hub.
Cost dist_to_hub(const Topology& topology, Vertex v);

/// All orders on hub paths of S (W_S without the hub), ascending.
std::vector<Vertex> closure(const Topology& topology, std::span<const Vertex> orders);

/// Total weight of the minimal subtree spanning S and the hub, i.e. half the
/// shortest closed walk from the hub that visits every order of S.
Cost bundle_cost(const Topology& topology, std::span<const Vertex> orders);

/// Per-agent bundle costs.
std::vector<Cost> allocation_costs(const Instance& instance, const Allocation& allocation);

/// Leaves of each agent's bundle, ascending.
std::vector<std::vector<Vertex>> leaf_sets(const Instance& instance, const Allocation& allocation);

/// Bitmask view of the leaves (at most 63), used by the subset algorithms.
struct LeafMasks {
  std::vector<Vertex> leaves;           // bit i <-> leaves[i]
  std::vector<std::uint64_t> subtree;   // per vertex: leaves in its subtree
  std::vector<std::uint64_t> edge_mask; // per order, in orders() order
  std::vector<Cost> edge_weight;        // per order, weight of its parent edge

  std::uint64_t full() const {
    return leaves.empty() ? 0 : (~std::uint64_t{0} >> (64 - leaves.size()));
  }
};

LeafMasks leaf_masks(const Topology& topology);

/// Builds a full allocation from leaf owners (indexed like LeafMasks::leaves or
/// Topology::leaves()), giving each internal order to the smallest agent owning
/// a leaf below it. The result is non-wasteful and each bundle costs exactly
/// the spanning cost of its leaf set.
Allocation complete_from_leaves(const Instance& instance, std::span<const int> leaf_owner);

}  // namespace fairhaul
