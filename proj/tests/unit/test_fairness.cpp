#include <doctest.h>

#include <algorithm>

#include "fairhaul/fairness.hpp"
#include "fairhaul/generators.hpp"
#include "fairhaul/oracle.hpp"
#include "support.hpp"

using namespace fh_test;

namespace {

std::vector<std::size_t> sizes(const Instance& inst, const Allocation& a) {
  std::vector<std::size_t> out;
  for (int i = 0; i < inst.agents; ++i) out.push_back(a.bundle(i).size());
  return out;
}

// EF1 straight from the definition, using library costs only.
bool reference_ef1(const Instance& inst, const Allocation& a) {
  const auto& t = inst.topology;
  const auto costs = allocation_costs(inst, a);
  for (int i = 0; i < inst.agents; ++i) {
    const auto b = a.bundle(i);
    for (int j = 0; j < inst.agents; ++j) {
      if (i == j || b.empty() || costs[i] <= costs[j]) continue;
      bool fixed = false;
      for (std::size_t x = 0; x < b.size() && !fixed; ++x) {
        auto rest = b;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(x));
        fixed = reference_cost(t, rest) <= costs[j];
      }
      if (!fixed) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("EF on two-branch allocations") {
  const auto f = two_branch();
  CHECK(is_ef(f, by_names(f, {{"v6", 0}, {"v1", 1}, {"v2", 1}, {"v5", 1}, {"v3", 2}, {"v4", 2}})));
  CHECK_FALSE(is_ef(f, by_names(f, {{"v2", 0}, {"v6", 0}, {"v1", 1}, {"v5", 1}, {"v3", 2}, {"v4", 2}})));
  const auto solo = Instance(f.topology, 1);
  CHECK(is_ef(solo, Allocation::uniform(solo)));
}

TEST_CASE("EF1 examples") {
  const auto star = unit_star(5, 2);
  const auto& t = star.topology;
  std::vector<int> owner(t.size(), 0);
  owner[t.hub()] = kNoVertex;
  for (std::size_t i = 0; i < 2; ++i) owner[t.leaves()[i]] = 1;
  CHECK(is_ef1(star, Allocation(owner, 2)));

  const auto path = make("h", {{"h", "a"}, {"a", "b"}}, 2);
  CHECK_FALSE(is_ef1(path, Allocation::uniform(path)));
}

TEST_CASE("EF1 agrees with the definition and EF implies EF1") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto inst = gen_random_tree(6, 3, 2 + static_cast<int>(seed % 2), seed);
    enumerate_allocations(inst, [&](const Allocation& a) {
      const bool ef1 = is_ef1(inst, a);
      CHECK(ef1 == reference_ef1(inst, a));
      if (is_ef(inst, a)) CHECK(ef1);
      return true;
    });
  }
}

TEST_CASE("round-robin") {
  const auto ce = mechanism_counterexample();
  const auto& t = ce.topology;
  const auto a = round_robin(ce);
  CHECK(a.owner(t.at("l1")) == 0);
  CHECK(a.owner(t.at("l2")) == 1);
  CHECK(a.owner(t.at("l3")) == 0);
  CHECK(allocation_costs(ce, a) == std::vector<Cost>{8, 4});
  CHECK_FALSE(is_ef1(ce, a));
  CHECK(verify_nonwasteful(ce, a).nonwasteful);

  const auto star = unit_star(4, 2);
  const auto b = round_robin(star);
  CHECK(sizes(star, b) == std::vector<std::size_t>{2, 2});
  CHECK(is_ef(star, b));

  const auto single = make("h", {{"h", "a"}}, 3);
  CHECK(round_robin(single).owner(single.topology.at("a")) == 0);
  const int order[] = {2, 0, 1};
  CHECK(round_robin(single, order).owner(single.topology.at("a")) == 2);
  const int bad[] = {0, 0, 1};
  CHECK_THROWS_AS(round_robin(single, bad), std::invalid_argument);
}

TEST_CASE("envy-cycle") {
  const auto ce = mechanism_counterexample();
  const auto& t = ce.topology;
  const Vertex order[] = {t.at("l1"), t.at("l2"), t.at("l3")};
  const auto a = envy_cycle(ce, order);
  CHECK(allocation_costs(ce, a) == std::vector<Cost>{8, 4});
  CHECK_FALSE(is_ef1(ce, a));

  const auto star = unit_star(7, 3);
  std::vector<Vertex> leaves(star.topology.leaves().begin(), star.topology.leaves().end());
  std::reverse(leaves.begin(), leaves.end());
  const auto b = envy_cycle(star, leaves);
  auto s = sizes(star, b);
  std::sort(s.begin(), s.end());
  CHECK(s == std::vector<std::size_t>{2, 2, 3});

  const auto solo = Instance(ce.topology, 1);
  CHECK(envy_cycle(solo) == Allocation::uniform(solo));
  const Vertex partial[] = {t.at("l1")};
  CHECK_THROWS_AS(envy_cycle(ce, partial), std::invalid_argument);
}

TEST_CASE("counterexample: an EF and non-wasteful allocation exists") {
  const auto ce = mechanism_counterexample();
  bool found = false;
  Cost ef_cost = -1;
  enumerate_nonwasteful(ce, [&](const Allocation& a) {
    if (is_ef(ce, a)) {
      found = true;
      ef_cost = allocation_costs(ce, a)[0];
      return false;
    }
    return true;
  });
  CHECK(found);
  CHECK(ef_cost == 6);
}

TEST_CASE("star EF") {
  const auto six = unit_star(6, 3);
  const auto a = star_ef(six);
  REQUIRE(a);
  CHECK(allocation_costs(six, *a) == std::vector<Cost>{2, 2, 2});
  CHECK_FALSE(star_ef(unit_star(5, 2)));
  const auto same = star_ef(unit_star(4, 4));
  REQUIRE(same);
  CHECK(sizes(unit_star(4, 4), *same) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK_THROWS_AS(star_ef(two_branch()), NotApplicable);
  CHECK_THROWS_AS(star_ef(weighted_star({1, 2}, 2)), NotApplicable);

  // Hub hanging off the star center: the count of star leaves decides.
  const auto hung = make("h", {{"h", "c"}, {"c", "x"}, {"c", "y"}}, 2);
  const auto b = star_ef(hung);
  REQUIRE(b);
  CHECK(is_ef(hung, *b));
  CHECK_FALSE(star_ef(make("h", {{"h", "c"}, {"c", "x"}, {"c", "y"}, {"c", "z"}}, 2)));
}

TEST_CASE("star EF matches exhaustive search") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const auto inst = unit_star(m, n);
      bool any = false;
      enumerate_allocations(inst, [&](const Allocation& a) {
        any = is_ef(inst, a);
        return !any;
      });
      CHECK(star_ef(inst).has_value() == any);
    }
  }
}

TEST_CASE("star EF1") {
  const auto five = unit_star(5, 2);
  const auto a = star_ef1(five);
  CHECK(sizes(five, a) == std::vector<std::size_t>{3, 2});
  CHECK(is_ef1(five, a));
  const auto one = unit_star(1, 1);
  CHECK(sizes(one, star_ef1(one)) == std::vector<std::size_t>{1});
  const auto seven = unit_star(7, 3);
  CHECK(sizes(seven, star_ef1(seven)) == std::vector<std::size_t>{3, 2, 2});
  for (int m = 1; m <= 12; ++m) {
    for (int n = 1; n <= 5; ++n) {
      const auto inst = unit_star(m, n);
      const auto b = star_ef1(inst);
      CHECK(is_ef1(inst, b));
      CHECK(verify_nonwasteful(inst, b).nonwasteful);
    }
  }
}

TEST_CASE("incompatibility instances") {
  const auto [ef, ef1] = incompatibility_instances();
  CHECK(ef.m() == 3);
  CHECK(ef1.m() == 4);
  CHECK(ef.agents == 2);
  CHECK(ef1.agents == 2);
}
