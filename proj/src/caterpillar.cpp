#include <algorithm>
#include <numeric>

#include "fairhaul/classify.hpp"
#include "fairhaul/solvers.hpp"
#include "solvers_internal.hpp"

namespace fairhaul {

namespace {

// Leaves hanging from one spine vertex, with that vertex's depth.
struct Group {
  Cost depth = 0;
  std::vector<Vertex> leaves;
};

using Take = std::vector<std::pair<Vertex, int>>;  // (leaf, agent slot)

// One-sided greedy on groups ordered far to near: every agent starts at the
// farthest group that still has leaves and fills its bundle toward the hub,
// taking whole groups while they fit and a partial group when they don't.
// Groups left empty are passed over at no cost.
bool greedy(const std::vector<Group>& far_to_near, int agents, Cost q, Take* take) {
  const std::size_t G = far_to_near.size();
  std::vector<std::size_t> used(G, 0);
  std::size_t j = 0;
  const auto left = [&](std::size_t g) { return far_to_near[g].leaves.size() - used[g]; };
  for (int slot = 0; slot < agents; ++slot) {
    while (j < G && left(j) == 0) ++j;
    if (j == G) break;
    Cost c = far_to_near[j].depth;
    while (c < q && j < G) {
      if (left(j) == 0) {
        ++j;
        continue;
      }
      const Cost s = q - c;
      const auto avail = static_cast<Cost>(left(j));
      const Cost n = std::min(avail, s);
      for (Cost i = 0; i < n; ++i) take->emplace_back(far_to_near[j].leaves[used[j]++], slot);
      c += n;
      if (n == avail) ++j;
    }
  }
  while (j < G && left(j) == 0) ++j;
  return j == G;
}

struct Shape {
  std::vector<Group> arm[2];  // near to far
  std::vector<Vertex> hub_leaves;
};

Shape shape_of(const Topology& t) {
  Shape s;
  int arms = 0;
  for (Vertex c : t.children(t.hub())) {
    if (t.is_leaf(c)) {
      s.hub_leaves.push_back(c);
      continue;
    }
    auto& arm = s.arm[arms++];
    for (Vertex v = c; v != kNoVertex;) {
      Group g{t.depth(v), {}};
      Vertex next = kNoVertex;
      for (Vertex ch : t.children(v)) {
        if (t.is_leaf(ch)) {
          g.leaves.push_back(ch);
        } else {
          next = ch;
        }
      }
      arm.push_back(std::move(g));
      v = next;
    }
  }
  return s;
}

std::vector<Group> far_to_near(const std::vector<Group>& near_to_far, std::size_t from, std::size_t skip_first,
                               std::vector<Vertex> hub_part) {
  std::vector<Group> out;
  for (std::size_t i = near_to_far.size(); i > from; --i) {
    Group g = near_to_far[i - 1];
    if (i - 1 == from) g.leaves.erase(g.leaves.begin(), g.leaves.begin() + static_cast<std::ptrdiff_t>(skip_first));
    out.push_back(std::move(g));
  }
  if (!hub_part.empty()) out.push_back({0, std::move(hub_part)});
  return out;
}

struct Attempt {
  std::int64_t runs = 0;
};

// Leaf owners with every bundle costing at most q edges, if possible.
std::optional<std::vector<std::pair<Vertex, int>>> feasible(const Shape& s, int n, Cost q, Attempt& stats) {
  const std::size_t H = s.hub_leaves.size();
  // No bundle crosses the hub: split the hub leaves and the agents between the arms.
  for (std::size_t hl = 0; hl <= H; ++hl) {
    const auto left = far_to_near(s.arm[0], 0, 0, {s.hub_leaves.begin(), s.hub_leaves.begin() + static_cast<std::ptrdiff_t>(hl)});
    const auto right = far_to_near(s.arm[1], 0, 0, {s.hub_leaves.begin() + static_cast<std::ptrdiff_t>(hl), s.hub_leaves.end()});
    for (int nl = 0; nl <= n; ++nl) {
      Take a, b;
      ++stats.runs;
      if (!greedy(left, nl, q, &a)) continue;
      ++stats.runs;
      if (!greedy(right, n - nl, q, &b)) continue;
      for (auto& [leaf, slot] : b) slot += nl;
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
  }
  if (s.arm[0].empty() || s.arm[1].empty()) return std::nullopt;

  // One bundle (the last agent's) crosses the hub: it holds all hub leaves,
  // whole groups up to group jl (resp. jr) and a nonempty part of that group.
  Cost prefix_l = 0;
  for (std::size_t jl = 0; jl < s.arm[0].size(); prefix_l += static_cast<Cost>(s.arm[0][jl].leaves.size()), ++jl) {
    const auto& gl = s.arm[0][jl];
    if (gl.leaves.empty()) continue;
    Cost prefix_r = 0;
    for (std::size_t jr = 0; jr < s.arm[1].size(); prefix_r += static_cast<Cost>(s.arm[1][jr].leaves.size()), ++jr) {
      const auto& gr = s.arm[1][jr];
      if (gr.leaves.empty()) continue;
      const Cost room = q - gl.depth - gr.depth - static_cast<Cost>(H) - prefix_l - prefix_r;
      if (room < 2) continue;
      const auto sl = static_cast<Cost>(gl.leaves.size());
      const auto sr = static_cast<Cost>(gr.leaves.size());
      for (Cost tl = 1; tl <= std::min(sl, room - 1); ++tl) {
        const Cost tr = std::min(sr, room - tl);
        const auto left = far_to_near(s.arm[0], jl, static_cast<std::size_t>(tl), {});
        const auto right = far_to_near(s.arm[1], jr, static_cast<std::size_t>(tr), {});
        for (int nl = 0; nl <= n - 1; ++nl) {
          Take a, b;
          ++stats.runs;
          if (!greedy(left, nl, q, &a)) continue;
          ++stats.runs;
          if (!greedy(right, n - 1 - nl, q, &b)) continue;
          for (auto& [leaf, slot] : b) slot += nl;
          a.insert(a.end(), b.begin(), b.end());
          const int span = n - 1;
          for (Vertex v : s.hub_leaves) a.emplace_back(v, span);
          for (std::size_t i = 0; i < jl; ++i) {
            for (Vertex v : s.arm[0][i].leaves) a.emplace_back(v, span);
          }
          for (std::size_t i = 0; i < jr; ++i) {
            for (Vertex v : s.arm[1][i].leaves) a.emplace_back(v, span);
          }
          for (Cost i = 0; i < tl; ++i) a.emplace_back(gl.leaves[static_cast<std::size_t>(i)], span);
          for (Cost i = 0; i < tr; ++i) a.emplace_back(gr.leaves[static_cast<std::size_t>(i)], span);
          return a;
        }
      }
    }
  }
  return std::nullopt;
}

SolveReport caterpillar_core(const Instance& instance) {
  const auto& t = instance.topology;
  if (!is_caterpillar(t)) throw NotApplicable("caterpillar solver needs a caterpillar topology");
  if (!t.is_unweighted()) throw NotApplicable("caterpillar solver needs equal edge weights");
  SolveReport report;
  report.algorithm = "caterpillar";
  if (t.order_count() == 0) {
    report.allocation = Allocation::uniform(instance);
    return report;
  }
  const Shape shape = shape_of(t);
  const auto m = static_cast<Cost>(t.order_count());
  const int n = instance.agents;
  Cost lo = (m + n - 1) / n;
  for (Vertex leaf : t.leaves()) lo = std::max<Cost>(lo, t.depth(leaf));
  Attempt stats;
  std::int64_t candidates = 0;
  for (Cost q = lo; q <= m; ++q) {
    ++candidates;
    if (auto take = feasible(shape, n, q, stats)) {
      std::vector<int> owner_of(t.size(), 0);
      for (const auto& [leaf, slot] : *take) owner_of[leaf] = slot;
      std::vector<int> leaf_owner;
      for (Vertex leaf : t.leaves()) leaf_owner.push_back(owner_of[leaf]);
      report.share = q * t.max_weight();
      report.allocation = complete_from_leaves(instance, leaf_owner);
      report.stats["candidates"] = candidates;
      report.stats["greedy_runs"] = stats.runs;
      return report;
    }
  }
  throw std::logic_error("caterpillar solver found no feasible share");
}

}  // namespace

SolveReport solve_caterpillar(const Instance& instance) {
  return with_hub_reduction(instance, [](const Instance& reduced) { return caterpillar_core(reduced); });
}

}  // namespace fairhaul
