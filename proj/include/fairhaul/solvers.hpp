#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairhaul/budget.hpp"
#include "fairhaul/report.hpp"

namespace fairhaul {

/// Result of repeatedly deleting a leaf hub and re-rooting at its neighbour.
struct HubReduction {
  Instance reduced;
  Cost offset = 0;   // summed weight of the deleted hub edges
  int steps = 0;
};

/// One deletion step, or nullopt when the hub is not a leaf.
std::optional<HubReduction> reduce_hub_leaf_once(const Instance& instance);

/// Deletes leaf hubs until the hub is internal or the tree is a single vertex.
HubReduction preprocess_hub_leaf(const Instance& instance);

/// Maps an allocation of a reduced instance (same leaf names) back to `original`.
/// Leaves keep their agents; a leaf that vanished goes to the smallest agent with
/// a nonempty bundle (agent 0 if there is none); internal orders are completed
/// with complete_from_leaves.
Allocation lift_by_leaves(const Instance& original, const Instance& reduced, const Allocation& allocation);

/// Leaves grouped by (parent, weight of the leaf edge).
struct LeafType {
  Vertex parent = kNoVertex;
  Cost weight = 0;
  Cost d = 0;  // distance from the hub to the parent
  std::vector<Vertex> leaves;
};

struct LeafTypeTable {
  std::vector<LeafType> types;  // sorted by (parent, weight)
  int k = 0;                    // non-leaf vertices, hub included
  int psi = 0;                  // distinct edge weights
};

LeafTypeTable leaf_types(const Topology& topology);

SolveReport solve_leaf_dp(const Instance& instance, const Budgets& budgets = {});

/// Share only; needs no choice table and therefore allows more leaves.
Cost leaf_dp_share(const Instance& instance, const Budgets& budgets = {});

SolveReport solve_internal_ilp(const Instance& instance, const Budgets& budgets = {});

struct PvcReduction {
  Instance reduced;
  std::vector<Vertex> cover;  // minimum leaf-free 3-path vertex cover, original indices
  std::vector<Vertex> kept;   // cover plus vertices with parent and child in the cover
};

/// Contracts every degree-2 order outside the augmented cover into one edge of
/// the summed weight. Expects a hub that is not a leaf.
PvcReduction reduce_3pvc(const Instance& instance);

SolveReport solve_3pvc(const Instance& instance, const Budgets& budgets = {});
SolveReport solve_star_unweighted(const Instance& instance);
SolveReport solve_star_weighted(const Instance& instance, const Budgets& budgets = {});
SolveReport solve_caterpillar(const Instance& instance);
SolveReport solve_path(const Instance& instance);

enum class Algorithm { Auto, Brute, LeafDp, InternalIlp, Star, Caterpillar, Path, Pvc };

const char* to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Runs the requested solver, or for Auto the first applicable one in the
/// order path, star, caterpillar, leaf-dp, internal-ilp, 3pvc, brute.
SolveReport solve(const Instance& instance, Algorithm algorithm = Algorithm::Auto, const Budgets& budgets = {});

/// solve(instance).share <= q.
bool decide_share_at_most(const Instance& instance, Cost q, const Budgets& budgets = {});

}  // namespace fairhaul
