#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fairhaul/model.hpp"

namespace fairhaul {

/// Unit path of m-n orders from the hub with n pendant leaves at its far end; n agents.
Instance gen_ponw_util(int m, int n);

/// n unit paths of `len` orders hanging from the hub; n agents.
Instance gen_spider(int n, int len);

/// Weighted star, one leaf per element with edge weight a; |A|/3 agents.
Instance gen_3partition_star(std::vector<std::int64_t> a);

/// Weighted star, one leaf per element; two agents.
Instance gen_equitable_star(std::vector<std::int64_t> a);

/// Hub with one center per element, center i carrying a_i unit leaves; |A|/3 agents.
Instance gen_3partition_depth2(std::vector<std::int64_t> a);

/// One unit path of a_i orders per element, all hanging from the hub; k agents.
Instance gen_binpacking_paths(std::vector<std::int64_t> a, int k);

/// Vertex i (1..m) attaches to a uniformly random earlier vertex (the hub is
/// vertex 0); weights uniform in [1, max_weight].
Instance gen_random_tree(int m, int max_weight, int agents, std::uint64_t seed);

/// Unit-weight caterpillar: a spine path, each spine vertex with a uniform
/// number of legs in [0, max_legs]. The hub is the spine vertex `hub_index`,
/// or a random one.
Instance gen_random_caterpillar(int spine, int max_legs, int agents, std::uint64_t seed,
                                std::optional<int> hub_index = std::nullopt);

}  // namespace fairhaul
