#pragma once

#include <vector>

#include "fairhaul/model.hpp"

namespace fairhaul {

struct Classification {
  bool is_path = false;
  bool is_star = false;
  bool is_caterpillar = false;
  int L = 0;          // childless orders
  int k = 0;          // non-leaf vertices, hub included
  int psi = 0;        // distinct edge weights
  int three_pvc = 0;  // size of a minimum 3-path vertex cover
  int depth = 0;      // edges from the hub to the deepest vertex
  int diameter = 0;   // edges on the longest path
};

Classification classify(const Topology& topology);

/// Maximum degree at most two.
bool is_path(const Topology& topology);
/// Some vertex is adjacent to every other vertex.
bool is_star(const Topology& topology);
/// The vertices of degree at least two induce a path (or nothing).
bool is_caterpillar(const Topology& topology);

/// A minimum vertex set whose removal leaves maximum degree at most one,
/// by dynamic programming over the rooted tree. Ascending vertex order.
std::vector<Vertex> min_3pvc(const Topology& topology);

/// Replaces every cover vertex of degree one by its neighbour; the result is
/// still a cover and no larger.
std::vector<Vertex> make_leaf_free(const Topology& topology, std::vector<Vertex> cover);

/// True if removing `cover` leaves maximum degree at most one.
bool is_3pvc(const Topology& topology, const std::vector<Vertex>& cover);

}  // namespace fairhaul
