#include "fairhaul/classify.hpp"
#include "fairhaul/oracle.hpp"
#include "fairhaul/solvers.hpp"

namespace fairhaul {

namespace {

constexpr std::pair<Algorithm, const char*> kNames[] = {
    {Algorithm::Auto, "auto"},
    {Algorithm::Brute, "brute"},
    {Algorithm::LeafDp, "leaf-dp"},
    {Algorithm::InternalIlp, "internal-ilp"},
    {Algorithm::Star, "star"},
    {Algorithm::Caterpillar, "caterpillar"},
    {Algorithm::Path, "path"},
    {Algorithm::Pvc, "3pvc"},
};

bool hub_star(const Topology& t) {
  return static_cast<std::size_t>(t.degree(t.hub())) + 1 == t.size();
}

SolveReport solve_auto(const Instance& instance, const Budgets& budgets) {
  const auto red = preprocess_hub_leaf(instance);
  const auto& t = red.reduced.topology;
  if (is_path(t)) return solve_path(instance);
  if (hub_star(t)) {
    if (t.is_unweighted()) return solve_star_unweighted(instance);
    if (instance.agents <= budgets.star_agents && t.max_weight() <= budgets.star_max_weight) {
      return solve_star_weighted(instance, budgets);
    }
  }
  if (t.is_unweighted() && is_caterpillar(t)) return solve_caterpillar(instance);
  if (static_cast<std::int64_t>(t.leaves().size()) <= budgets.leaf_dp_witness_leaves) {
    return solve_leaf_dp(instance, budgets);
  }
  const auto types = leaf_types(t);
  if (types.k <= budgets.ilp_internal && types.psi <= budgets.ilp_weights) {
    try {
      return solve_internal_ilp(instance, budgets);
    } catch (const BudgetExceeded&) {
    }
  }
  if (static_cast<std::int64_t>(min_3pvc(t).size()) <= budgets.pvc) {
    try {
      return solve_3pvc(instance, budgets);
    } catch (const BudgetExceeded&) {
    }
  }
  if (static_cast<std::int64_t>(t.leaves().size()) <= budgets.brute_leaves &&
      instance.agents <= budgets.brute_agents) {
    return brute_force_mms(instance, budgets);
  }
  throw BudgetExceeded("all", "no solver applies within the configured budgets (L = " +
                                  std::to_string(t.leaves().size()) + ", n = " + std::to_string(instance.agents) +
                                  ")");
}

}  // namespace

const char* to_string(Algorithm algorithm) {
  for (const auto& [a, name] : kNames) {
    if (a == algorithm) return name;
  }
  return "auto";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [a, n] : kNames) {
    if (name == n) return a;
  }
  return std::nullopt;
}

SolveReport solve(const Instance& instance, Algorithm algorithm, const Budgets& budgets) {
  switch (algorithm) {
    case Algorithm::Auto: return solve_auto(instance, budgets);
    case Algorithm::Brute: return brute_force_mms(instance, budgets);
    case Algorithm::LeafDp: return solve_leaf_dp(instance, budgets);
    case Algorithm::InternalIlp: return solve_internal_ilp(instance, budgets);
    case Algorithm::Star: {
      const auto red = preprocess_hub_leaf(instance);
      return red.reduced.topology.is_unweighted() ? solve_star_unweighted(instance)
                                                  : solve_star_weighted(instance, budgets);
    }
    case Algorithm::Caterpillar: return solve_caterpillar(instance);
    case Algorithm::Path: return solve_path(instance);
    case Algorithm::Pvc: return solve_3pvc(instance, budgets);
  }
  return solve_auto(instance, budgets);
}

bool decide_share_at_most(const Instance& instance, Cost q, const Budgets& budgets) {
  return solve(instance, Algorithm::Auto, budgets).share <= q;
}

}  // namespace fairhaul
