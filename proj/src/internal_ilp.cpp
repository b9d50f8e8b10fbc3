#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "fairhaul/solvers.hpp"
#include "solvers_internal.hpp"

namespace fairhaul {

namespace {

// A bundle touching at least two leaf types.
struct Important {
  std::uint32_t structure = 0;  // bitmask over leaf types
  std::vector<Cost> count;      // leaves taken per type (0 outside the structure)
};

class Feasibility {
 public:
  Feasibility(const Instance& instance, const LeafTypeTable& table, std::int64_t node_budget)
      : n_(instance.agents), types_(table.types), node_budget_(node_budget) {
    const auto& t = instance.topology;
    const std::size_t T = types_.size();
    size_.resize(T);
    for (std::size_t i = 0; i < T; ++i) size_[i] = static_cast<Cost>(types_[i].leaves.size());
    // D[S]: cost of reaching every parent in S.
    path_.assign(std::size_t{1} << T, 0);
    std::vector<Vertex> parents;
    for (std::size_t s = 1; s < path_.size(); ++s) {
      parents.clear();
      for (std::size_t i = 0; i < T; ++i) {
        if ((s >> i & 1) && types_[i].parent != t.hub()) parents.push_back(types_[i].parent);
      }
      path_[s] = bundle_cost(t, parents);
    }
    std::vector<Vertex> distinct_parents;
    for (const auto& ty : types_) distinct_parents.push_back(ty.parent);
    std::sort(distinct_parents.begin(), distinct_parents.end());
    distinct_parents.erase(std::unique(distinct_parents.begin(), distinct_parents.end()), distinct_parents.end());
    const auto K = static_cast<std::int64_t>(T);
    // With one weight class a nice allocation has at most C(K, 2) agents that
    // touch two or more types. With several classes an agent may touch one
    // type per class without conflicts, so every agent may be important.
    eta_max_ = table.psi <= 1 ? std::min<std::int64_t>(n_, K * (K - 1) / 2) : n_;
  }

  std::int64_t nodes() const { return nodes_; }
  std::int64_t guesses() const { return guesses_; }

  /// Leaf owners (indexed like types then leaves) achieving max cost <= q, if any.
  std::optional<std::vector<std::vector<int>>> run(Cost q) {
    q_ = q;
    const std::size_t T = types_.size();
    cap_.assign(T, 0);
    for (std::size_t i = 0; i < T; ++i) {
      if (types_[i].d + types_[i].weight <= q) cap_[i] = (q - types_[i].d) / types_[i].weight;
    }
    structures_.clear();
    for (std::uint32_t s = 1; s < path_.size(); ++s) {
      if (std::popcount(s) < 2) continue;
      Cost base = path_[s];
      for (std::size_t i = 0; i < T; ++i) {
        if (s >> i & 1) base += types_[i].weight;
      }
      if (base <= q) structures_.push_back(s);
    }
    rem_ = size_;
    chosen_.clear();
    if (!search(0)) return std::nullopt;
    return build();
  }

 private:
  std::int64_t standard_agents_needed() const {
    std::int64_t need = 0;
    for (std::size_t i = 0; i < rem_.size(); ++i) {
      if (rem_[i] == 0) continue;
      if (cap_[i] == 0) return std::numeric_limits<std::int64_t>::max();
      need += (rem_[i] + cap_[i] - 1) / cap_[i];
    }
    return need;
  }

  bool nice_with_chosen(std::uint32_t s) const {
    for (const auto& other : chosen_) {
      const std::uint32_t shared = s & other.structure;
      for (std::size_t i = 0; i < types_.size(); ++i) {
        if (!(shared >> i & 1)) continue;
        for (std::size_t j = i + 1; j < types_.size(); ++j) {
          if ((shared >> j & 1) && types_[i].weight == types_[j].weight) return false;
        }
      }
    }
    return true;
  }

  bool search(std::size_t first) {
    if (++nodes_ > node_budget_) {
      throw BudgetExceeded("ilp-nodes", "integer feasibility search exceeded " + std::to_string(node_budget_) +
                                            " nodes");
    }
    ++guesses_;
    if (standard_agents_needed() <= n_ - static_cast<std::int64_t>(chosen_.size())) return true;
    if (static_cast<std::int64_t>(chosen_.size()) >= eta_max_) return false;
    for (std::size_t si = first; si < structures_.size(); ++si) {
      const std::uint32_t s = structures_[si];
      bool available = true;
      for (std::size_t i = 0; i < types_.size() && available; ++i) {
        if (s >> i & 1) available = rem_[i] > 0;
      }
      if (!available || !nice_with_chosen(s)) continue;
      Cost slack = q_ - path_[s];
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < types_.size(); ++i) {
        if (s >> i & 1) {
          members.push_back(i);
          slack -= types_[i].weight;
        }
      }
      chosen_.push_back({s, std::vector<Cost>(types_.size(), 0)});
      for (std::size_t i : members) {
        chosen_.back().count[i] = 1;
        rem_[i] -= 1;
      }
      if (extend(members, 0, slack, si)) return true;
      for (std::size_t i : members) rem_[i] += 1;
      chosen_.pop_back();
    }
    return false;
  }

  // Distributes extra leaves of the newest important bundle, largest first.
  bool extend(const std::vector<std::size_t>& members, std::size_t pos, Cost slack, std::size_t si) {
    if (pos == members.size()) return search(si);
    const std::size_t i = members[pos];
    auto& count = chosen_.back().count[i];
    const Cost most = std::min(rem_[i], slack / types_[i].weight);
    for (Cost extra = most; extra >= 0; --extra) {
      count += extra;
      rem_[i] -= extra;
      const bool ok = extend(members, pos + 1, slack - extra * types_[i].weight, si);
      rem_[i] += extra;
      count -= extra;
      if (ok) {
        count += extra;
        rem_[i] -= extra;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> build() const {
    std::vector<std::vector<int>> owner(types_.size());
    std::vector<std::size_t> next(types_.size(), 0);
    for (std::size_t i = 0; i < types_.size(); ++i) owner[i].assign(types_[i].leaves.size(), 0);
    int agent = 0;
    for (const auto& imp : chosen_) {
      for (std::size_t i = 0; i < types_.size(); ++i) {
        for (Cost c = 0; c < imp.count[i]; ++c) owner[i][next[i]++] = agent;
      }
      ++agent;
    }
    for (std::size_t i = 0; i < types_.size(); ++i) {
      while (next[i] < owner[i].size()) {
        for (Cost c = 0; c < cap_[i] && next[i] < owner[i].size(); ++c) owner[i][next[i]++] = agent;
        ++agent;
      }
    }
    return owner;
  }

  std::int64_t n_;
  const std::vector<LeafType>& types_;
  std::int64_t node_budget_;
  std::int64_t eta_max_ = 0;
  std::vector<Cost> size_;
  std::vector<Cost> path_;
  Cost q_ = 0;
  std::vector<Cost> cap_;
  std::vector<std::uint32_t> structures_;
  std::vector<Cost> rem_;
  std::vector<Important> chosen_;
  std::int64_t nodes_ = 0;
  std::int64_t guesses_ = 0;
};

SolveReport internal_ilp_core(const Instance& instance, const Budgets& budgets) {
  const auto& t = instance.topology;
  const auto table = leaf_types(t);
  if (table.k > budgets.ilp_internal || table.psi > budgets.ilp_weights) {
    throw BudgetExceeded("ilp", "internal-vertex solver is limited to k <= " + std::to_string(budgets.ilp_internal) +
                                    " and psi <= " + std::to_string(budgets.ilp_weights) + " (got k = " +
                                    std::to_string(table.k) + ", psi = " + std::to_string(table.psi) + ")");
  }
  if (table.types.size() > 20) throw BudgetExceeded("ilp", "more than 20 leaf types");
  SolveReport report;
  report.algorithm = "internal-ilp";
  if (t.leaves().empty()) {
    report.allocation = Allocation::uniform(instance);
    return report;
  }

  Feasibility feas(instance, table, budgets.ilp_nodes);
  Cost lo = 0;
  for (Vertex leaf : t.leaves()) lo = std::max(lo, t.dist(leaf));
  lo = std::max(lo, (t.total_weight() + instance.agents - 1) / instance.agents);
  const Cost hi = t.total_weight();
  std::int64_t candidates = 0;
  std::optional<std::vector<std::vector<int>>> found;
  Cost share = hi;
  if (table.psi <= 1) {
    // Every bundle cost is a multiple of the common weight.
    const Cost w = t.max_weight();
    for (Cost q = (lo + w - 1) / w * w; q <= hi; q += w) {
      ++candidates;
      if ((found = feas.run(q))) {
        share = q;
        break;
      }
    }
  } else {
    Cost a = lo, b = hi;
    while (a < b) {
      const Cost mid = a + (b - a) / 2;
      ++candidates;
      if (feas.run(mid)) {
        b = mid;
      } else {
        a = mid + 1;
      }
    }
    share = a;
    ++candidates;
    found = feas.run(a);
  }
  if (!found) throw std::logic_error("internal-vertex solver found no feasible share");

  std::vector<int> leaf_owner(t.leaves().size(), 0);
  std::vector<std::size_t> position(t.size(), 0);
  for (std::size_t i = 0; i < t.leaves().size(); ++i) position[t.leaves()[i]] = i;
  for (std::size_t ty = 0; ty < table.types.size(); ++ty) {
    for (std::size_t j = 0; j < table.types[ty].leaves.size(); ++j) {
      leaf_owner[position[table.types[ty].leaves[j]]] = (*found)[ty][j];
    }
  }
  report.share = share;
  report.allocation = complete_from_leaves(instance, leaf_owner);
  report.stats["candidates"] = candidates;
  report.stats["nodes"] = feas.nodes();
  report.stats["types"] = static_cast<std::int64_t>(table.types.size());
  return report;
}

}  // namespace

SolveReport solve_internal_ilp(const Instance& instance, const Budgets& budgets) {
  return with_hub_reduction(instance, [&](const Instance& reduced) { return internal_ilp_core(reduced, budgets); });
}

SolveReport solve_internal_ilp_reduced(const Instance& instance, const Budgets& budgets) {
  return internal_ilp_core(instance, budgets);
}

}  // namespace fairhaul
