#include "fairhaul/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace fairhaul {

namespace {

// Zero-padded so that name order follows numeric order.
std::string label(const std::string& prefix, std::int64_t i, std::int64_t count) {
  const auto width = std::to_string(std::max<std::int64_t>(count, 1)).size();
  std::string digits = std::to_string(i);
  return prefix + std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

std::vector<std::int64_t> sorted_elements(std::vector<std::int64_t> a) {
  for (auto x : a) require(x >= 1, "gadget elements must be positive");
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

Instance weighted_star(const std::vector<std::int64_t>& a, int agents) {
  std::vector<Topology::Edge> edges;
  for (std::size_t i = 0; i < a.size(); ++i) {
    edges.push_back({"h", label("v", static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(a.size())), a[i]});
  }
  return Instance(Topology::build("h", edges), agents);
}

std::int64_t sum(const std::vector<std::int64_t>& a) { return std::accumulate(a.begin(), a.end(), std::int64_t{0}); }

}  // namespace

Instance gen_ponw_util(int m, int n) {
  require(n >= 1 && m > n, "ponw-util needs m > n >= 1");
  const int len = m - n;
  std::vector<Topology::Edge> edges;
  std::string prev = "h";
  for (int i = 1; i <= len; ++i) {
    const auto v = label("p", i, len);
    edges.push_back({prev, v, 1});
    prev = v;
  }
  for (int i = 1; i <= n; ++i) edges.push_back({prev, label("q", i, n), 1});
  return Instance(Topology::build("h", edges), n);
}

Instance gen_spider(int n, int len) {
  require(n >= 1 && len >= 1, "spider needs n, len >= 1");
  std::vector<Topology::Edge> edges;
  for (int i = 1; i <= n; ++i) {
    std::string prev = "h";
    for (int j = 1; j <= len; ++j) {
      const auto v = label("s", i, n) + "_" + label("", j, len);
      edges.push_back({prev, v, 1});
      prev = v;
    }
  }
  return Instance(Topology::build("h", edges), n);
}

Instance gen_3partition_star(std::vector<std::int64_t> a) {
  a = sorted_elements(std::move(a));
  require(!a.empty() && a.size() % 3 == 0, "3-partition needs 3k elements");
  const auto k = static_cast<std::int64_t>(a.size() / 3);
  require(sum(a) % k == 0, "3-partition elements must sum to k*B");
  return weighted_star(a, static_cast<int>(k));
}

Instance gen_equitable_star(std::vector<std::int64_t> a) {
  a = sorted_elements(std::move(a));
  require(!a.empty() && a.size() % 2 == 0, "equitable partition needs 2k elements");
  require(sum(a) % 2 == 0, "equitable partition elements must sum to 2B");
  return weighted_star(a, 2);
}

Instance gen_3partition_depth2(std::vector<std::int64_t> a) {
  a = sorted_elements(std::move(a));
  require(!a.empty() && a.size() % 3 == 0, "3-partition needs 3k elements");
  const auto k = static_cast<std::int64_t>(a.size() / 3);
  require(sum(a) % k == 0, "3-partition elements must sum to k*B");
  const auto count = static_cast<std::int64_t>(a.size());
  const auto widest = *std::max_element(a.begin(), a.end());
  std::vector<Topology::Edge> edges;
  for (std::int64_t i = 0; i < count; ++i) {
    const auto c = label("c", i + 1, count);
    edges.push_back({"h", c, 1});
    for (std::int64_t j = 1; j <= a[i]; ++j) edges.push_back({c, c + "_" + label("", j, widest), 1});
  }
  return Instance(Topology::build("h", edges), static_cast<int>(k));
}

Instance gen_binpacking_paths(std::vector<std::int64_t> a, int k) {
  a = sorted_elements(std::move(a));
  require(k >= 1, "bin packing needs k >= 1");
  require(!a.empty() && sum(a) % k == 0, "bin packing elements must sum to k*B");
  const auto count = static_cast<std::int64_t>(a.size());
  const auto longest = *std::max_element(a.begin(), a.end());
  std::vector<Topology::Edge> edges;
  for (std::int64_t i = 0; i < count; ++i) {
    std::string prev = "h";
    for (std::int64_t j = 1; j <= a[i]; ++j) {
      const auto v = label("p", i + 1, count) + "_" + label("", j, longest);
      edges.push_back({prev, v, 1});
      prev = v;
    }
  }
  return Instance(Topology::build("h", edges), k);
}

Instance gen_random_tree(int m, int max_weight, int agents, std::uint64_t seed) {
  require(m >= 1, "random tree needs m >= 1");
  require(max_weight >= 1, "random tree needs max_weight >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(1, max_weight);
  std::vector<std::string> names{"h"};
  for (int i = 1; i <= m; ++i) names.push_back(label("v", i, m));
  std::vector<Topology::Edge> edges;
  for (int i = 1; i <= m; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    const int p = pick(rng);
    edges.push_back({names[p], names[i], weight(rng)});
  }
  return Instance(Topology::build("h", edges), agents);
}

Instance gen_random_caterpillar(int spine, int max_legs, int agents, std::uint64_t seed,
                                std::optional<int> hub_index) {
  require(spine >= 1, "caterpillar needs a spine of at least one vertex");
  require(max_legs >= 0, "caterpillar needs max_legs >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> legs(0, max_legs);
  int hub = 0;
  if (hub_index) {
    require(*hub_index >= 0 && *hub_index < spine, "hub index outside the spine");
    hub = *hub_index;
  } else {
    hub = std::uniform_int_distribution<int>(0, spine - 1)(rng);
  }
  std::vector<std::string> spine_names;
  for (int i = 1; i <= spine; ++i) spine_names.push_back(label("s", i, spine));
  std::vector<Topology::Edge> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.push_back({spine_names[i], spine_names[i + 1], 1});
  for (int i = 0; i < spine; ++i) {
    const int count = legs(rng);
    for (int j = 1; j <= count; ++j) edges.push_back({spine_names[i], spine_names[i] + "_" + label("", j, max_legs), 1});
  }
  return Instance(Topology::build(spine_names[hub], edges), agents);
}

}  // namespace fairhaul
