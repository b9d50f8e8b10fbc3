#pragma once

#include <optional>
#include <span>

#include "fairhaul/model.hpp"

namespace fairhaul {

/// Envy-free; with identical cost functions this means all costs are equal.
bool is_ef(const Instance& instance, const Allocation& allocation);

/// For every pair (i, j): pi_i is empty or dropping one order from pi_i brings
/// its cost down to cost(pi_j).
bool is_ef1(const Instance& instance, const Allocation& allocation);

/// Agents take turns in `agent_order` (default 0..n-1); each picks the leaf
/// that raises its bundle cost the least. Ties go to the leaf listed first in
/// `leaf_priority` (default: ascending vertex index). Internal orders are then
/// placed by repair_to_nonwasteful.
Allocation round_robin(const Instance& instance, std::span<const int> agent_order = {},
                       std::span<const Vertex> leaf_priority = {});

/// Leaves in `leaf_order` (default ascending) each go to an agent who envies
/// no one, i.e. one of minimum current cost; ties go to the agent listed first
/// in `agent_priority` (default 0..n-1). Internal orders by repair_to_nonwasteful.
Allocation envy_cycle(const Instance& instance, std::span<const Vertex> leaf_order = {},
                      std::span<const int> agent_priority = {});

/// Balanced allocation of an unweighted star when n divides m, else nullopt.
/// Throws NotApplicable for other topologies.
std::optional<Allocation> star_ef(const Instance& instance);

/// Round-robin allocation of an unweighted star; always EF1.
Allocation star_ef1(const Instance& instance);

struct IncompatibilityInstances {
  Instance ef;   // path u - h - x - v, two agents
  Instance ef1;  // the same path with an extra order w below v
};

IncompatibilityInstances incompatibility_instances();

/// Two agents; leaves at distances 2, 4 and 6, the last two sharing the
/// first two edges of their paths.
Instance mechanism_counterexample();

}  // namespace fairhaul
