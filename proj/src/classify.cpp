#include "fairhaul/classify.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace fairhaul {

bool is_path(const Topology& topology) {
  for (std::size_t v = 0; v < topology.size(); ++v) {
    if (topology.degree(static_cast<Vertex>(v)) > 2) return false;
  }
  return true;
}

bool is_star(const Topology& topology) {
  const auto n = static_cast<int>(topology.size());
  if (n < 2) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (topology.degree(v) == n - 1) return true;
  }
  return false;
}

bool is_caterpillar(const Topology& topology) {
  // The non-leaf vertices of a tree induce a subtree; it is a path iff every
  // such vertex has at most two non-leaf neighbours.
  const auto n = static_cast<Vertex>(topology.size());
  const auto inner = [&](Vertex v) { return topology.degree(v) >= 2; };
  for (Vertex v = 0; v < n; ++v) {
    if (!inner(v)) continue;
    int spine = 0;
    if (topology.parent(v) != kNoVertex && inner(topology.parent(v))) ++spine;
    for (Vertex c : topology.children(v)) spine += inner(c) ? 1 : 0;
    if (spine > 2) return false;
  }
  return true;
}

namespace {

// dp[v] = {v in cover, v out with no uncovered child, v out with exactly one
// uncovered child (which itself has none)}.
using Triple = std::array<int, 3>;

std::vector<Triple> pvc_table(const Topology& t) {
  std::vector<Triple> dp(t.size());
  const auto pre = t.preorder();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    const Vertex v = *it;
    int in = 1, out0 = 0, swing = 1 << 29;
    for (Vertex c : t.children(v)) {
      const auto& d = dp[c];
      in += std::min({d[0], d[1], d[2]});
      out0 += d[0];
      swing = std::min(swing, d[1] - d[0]);
    }
    dp[v] = {in, out0, t.children(v).empty() ? 1 << 29 : out0 + swing};
  }
  return dp;
}

}  // namespace

std::vector<Vertex> min_3pvc(const Topology& t) {
  if (t.size() == 0) return {};
  const auto dp = pvc_table(t);
  std::vector<Vertex> cover;
  std::vector<std::pair<Vertex, int>> stack;
  const auto& r = dp[t.hub()];
  stack.emplace_back(t.hub(), static_cast<int>(std::min_element(r.begin(), r.end()) - r.begin()));
  while (!stack.empty()) {
    const auto [v, state] = stack.back();
    stack.pop_back();
    if (state == 0) {
      cover.push_back(v);
      for (Vertex c : t.children(v)) {
        const auto& d = dp[c];
        stack.emplace_back(c, static_cast<int>(std::min_element(d.begin(), d.end()) - d.begin()));
      }
    } else if (state == 1) {
      for (Vertex c : t.children(v)) stack.emplace_back(c, 0);
    } else {
      Vertex free_child = kNoVertex;
      int best = 1 << 30;
      for (Vertex c : t.children(v)) {
        if (dp[c][1] - dp[c][0] < best) {
          best = dp[c][1] - dp[c][0];
          free_child = c;
        }
      }
      for (Vertex c : t.children(v)) stack.emplace_back(c, c == free_child ? 1 : 0);
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

std::vector<Vertex> make_leaf_free(const Topology& t, std::vector<Vertex> cover) {
  std::set<Vertex> c(cover.begin(), cover.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : std::vector<Vertex>(c.begin(), c.end())) {
      if (t.degree(v) != 1) continue;
      const Vertex u = t.parent(v) != kNoVertex ? t.parent(v) : t.children(v)[0];
      if (t.degree(u) == 1) continue;  // a single edge: nothing to swap towards
      c.erase(v);
      c.insert(u);
      changed = true;
    }
  }
  return {c.begin(), c.end()};
}

bool is_3pvc(const Topology& t, const std::vector<Vertex>& cover) {
  std::vector<char> in(t.size(), 0);
  for (Vertex v : cover) in[v] = 1;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (in[v]) continue;
    int deg = 0;
    const auto vv = static_cast<Vertex>(v);
    if (t.parent(vv) != kNoVertex && !in[t.parent(vv)]) ++deg;
    for (Vertex c : t.children(vv)) deg += in[c] ? 0 : 1;
    if (deg > 1) return false;
  }
  return true;
}

Classification classify(const Topology& t) {
  Classification c;
  c.is_path = is_path(t);
  c.is_star = is_star(t);
  c.is_caterpillar = is_caterpillar(t);
  c.L = static_cast<int>(t.leaves().size());
  c.k = static_cast<int>(t.size()) - c.L;
  c.psi = t.distinct_weight_count();
  c.three_pvc = static_cast<int>(min_3pvc(t).size());
  for (Vertex v : t.orders()) c.depth = std::max(c.depth, t.depth(v));
  // Longest path: deepest pair of child heights through each vertex.
  std::vector<int> height(t.size(), 0);
  const auto pre = t.preorder();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    int first = 0, second = 0;
    for (Vertex ch : t.children(*it)) {
      const int h = height[ch] + 1;
      if (h > first) {
        second = first;
        first = h;
      } else if (h > second) {
        second = h;
      }
    }
    height[*it] = first;
    c.diameter = std::max(c.diameter, first + second);
  }
  return c;
}

}  // namespace fairhaul
