#include <doctest.h>

#include "fairhaul/classify.hpp"
#include "fairhaul/generators.hpp"
#include "fairhaul/oracle.hpp"
#include "fairhaul/solvers.hpp"
#include "support.hpp"

using namespace fh_test;

TEST_CASE("hub-leaf preprocessing") {
  const auto path = make("h", {{"h", "a"}, {"a", "b"}}, 1);
  const auto once = reduce_hub_leaf_once(path);
  REQUIRE(once);
  CHECK(once->reduced.topology.name(once->reduced.topology.hub()) == "a");
  CHECK(once->offset == 1);
  CHECK(solve(path).share == 2);
  CHECK(brute_force_mms(once->reduced).share + once->offset == 2);

  const auto f = two_branch();
  CHECK_FALSE(reduce_hub_leaf_once(f));
  const auto same = preprocess_hub_leaf(f);
  CHECK(same.offset == 0);
  CHECK(same.steps == 0);

  const auto chain = make("h", {{"h", "a"}, {"a", "b"}, {"b", "c"}}, 2);
  const auto full = preprocess_hub_leaf(chain);
  CHECK(full.reduced.topology.size() == 1);
  CHECK(brute_force_mms(chain).share == full.offset + brute_force_mms(full.reduced).share);
}

TEST_CASE("preprocessing preserves the share on random leaf-hub trees") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto base = gen_random_caterpillar(4, 2, 2 + static_cast<int>(seed % 2), seed, 0);
    const auto red = preprocess_hub_leaf(base);
    if (red.steps == 0) continue;
    CHECK(brute_force_mms(base).share == brute_force_mms(red.reduced).share + red.offset);
  }
}

TEST_CASE("leaf types") {
  const auto inst = make("h", {{"h", "a", 1}, {"h", "b", 2}, {"h", "c", 2}, {"h", "p", 1}, {"p", "x", 1}, {"p", "y", 3}}, 2);
  const auto table = leaf_types(inst.topology);
  CHECK(table.k == 2);
  CHECK(table.psi == 3);
  std::size_t total = 0;
  for (const auto& t : table.types) total += t.leaves.size();
  CHECK(total == inst.topology.leaves().size());
  CHECK(table.types.size() == 4);
}

TEST_CASE("leaf DP examples") {
  CHECK(solve_leaf_dp(two_branch()).share == 3);
  CHECK(solve_leaf_dp(unit_star(6, 2)).share == 3);
  CHECK(leaf_dp_share(two_branch()) == 3);
  CHECK_THROWS_AS(solve_leaf_dp(unit_star(30, 2)), BudgetExceeded);
}

TEST_CASE("internal ILP examples") {
  CHECK(solve_internal_ilp(unit_star(7, 3)).share == 3);
  CHECK(solve_internal_ilp(weighted_star({1, 1, 2, 2}, 2)).share == 3);
  Budgets wide;
  wide.ilp_internal = 8;
  const auto depth2 = gen_3partition_depth2({1, 1, 2, 1, 1, 2});
  CHECK_THROWS_AS(solve_internal_ilp(depth2), BudgetExceeded);
  const auto r = solve_internal_ilp(depth2, wide);
  CHECK(r.share == brute_force_mms(depth2).share);
  CHECK(witness_ok(depth2, r));
}

TEST_CASE("star solvers") {
  CHECK(solve_star_unweighted(unit_star(5, 2)).share == 3);
  CHECK(solve_star_unweighted(unit_star(4, 4)).share == 1);
  CHECK(solve_star_unweighted(unit_star(9, 3)).share == 3);
  CHECK(solve_star_weighted(weighted_star({1, 2, 3, 4}, 2)).share == 5);
  CHECK(solve_star_weighted(weighted_star({9}, 1)).share == 9);
  CHECK(solve_star_weighted(weighted_star({5, 5, 5}, 3)).share == 5);
  CHECK(solve_star_weighted(weighted_star({3, 3, 4}, 2)).share == 6);
  CHECK_THROWS_AS(solve_star_unweighted(two_branch()), NotApplicable);
  CHECK_THROWS_AS(solve_star_weighted(weighted_star({1, 2, 3, 4, 5}, 6)), BudgetExceeded);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::vector<Cost> w;
    for (std::uint64_t i = 0; i < 3 + seed % 6; ++i) w.push_back(static_cast<Cost>(1 + (seed * 7 + i * 13) % 9));
    const auto inst = weighted_star(w, 1 + static_cast<int>(seed % 4));
    const auto r = solve_star_weighted(inst);
    CHECK(r.share == reference_share_leaves(inst));
    CHECK(witness_ok(inst, r));
  }
}

TEST_CASE("path solver") {
  const auto even = make("h", {{"a", "b"}, {"b", "h"}, {"h", "c"}, {"c", "d"}}, 2);
  CHECK(solve_path(even).share == 2);
  CHECK(solve_path(make("h", {{"a", "b"}, {"b", "h"}, {"h", "c"}, {"c", "d"}}, 1)).share == 4);
  const auto arms = make("h", {{"h", "a", 3}, {"h", "b", 7}}, 2);
  const auto r = solve_path(arms);
  CHECK(r.share == 7);
  CHECK(r.algorithm == "path");
  CHECK(witness_ok(arms, r));
  CHECK_THROWS_AS(solve_path(two_branch()), NotApplicable);
}

TEST_CASE("caterpillar solver") {
  // Hub at a spine end, leaf groups (2, 0, 1).
  const auto inst = make("h", {{"h", "s2"}, {"s2", "s3"}, {"h", "x1"}, {"h", "x2"}, {"s3", "y1"}}, 2);
  CHECK(is_caterpillar(inst.topology));
  CHECK(solve_caterpillar(inst).share == brute_force_mms(inst).share);
  CHECK(solve_caterpillar(unit_star(5, 2)).share == 3);
  const auto p = make("h", {{"a", "b"}, {"b", "h"}, {"h", "c"}}, 2);
  CHECK(solve_caterpillar(p).share == 2);
  CHECK_THROWS_AS(solve_caterpillar(weighted_star({1, 2}, 2)), NotApplicable);
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto cat = gen_random_caterpillar(2 + static_cast<int>(seed % 4), 2, 1 + static_cast<int>(seed % 4), seed);
    if (cat.topology.leaves().size() > 10) continue;
    const auto r = solve_caterpillar(cat);
    CHECK(r.share == brute_force_mms(cat).share);
    CHECK(witness_ok(cat, r));
  }
}

TEST_CASE("3-path vertex cover") {
  auto exhaustive = [](const Topology& t) {
    const std::size_t n = t.size();
    std::size_t best = n;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      std::vector<Vertex> cover;
      for (std::size_t v = 0; v < n; ++v)
        if (s >> v & 1) cover.push_back(static_cast<Vertex>(v));
      if (cover.size() < best && is_3pvc(t, cover)) best = cover.size();
    }
    return best;
  };
  const auto p7 = make("a", {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"f", "g"}}, 1);
  CHECK(min_3pvc(p7.topology).size() == 2);
  CHECK(min_3pvc(unit_star(5, 1).topology).size() == 1);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = gen_random_tree(3 + static_cast<int>(seed % 9), 1, 1, seed);
    const auto& t = inst.topology;
    const auto cover = min_3pvc(t);
    CHECK(is_3pvc(t, cover));
    CHECK(cover.size() == exhaustive(t));
    const auto free = make_leaf_free(t, cover);
    CHECK(is_3pvc(t, free));
    CHECK(free.size() <= cover.size());
  }
}

TEST_CASE("3-PVC contraction preserves the share") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto base = gen_random_tree(10, 3, 2 + static_cast<int>(seed % 2), seed);
    const auto red = preprocess_hub_leaf(base);
    if (red.reduced.topology.size() < 3) continue;
    const auto pvc = reduce_3pvc(red.reduced);
    CHECK(pvc.reduced.topology.leaves().size() == red.reduced.topology.leaves().size());
    CHECK(brute_force_mms(pvc.reduced).share == brute_force_mms(red.reduced).share);
    Budgets wide;
    wide.pvc = 10;
    wide.ilp_internal = 30;
    wide.ilp_weights = 30;
    try {
      const auto r = solve_3pvc(base, wide);
      CHECK(r.share == brute_force_mms(base).share);
      CHECK(witness_ok(base, r));
    } catch (const BudgetExceeded&) {
    }
  }
}

TEST_CASE("dispatch") {
  const auto f = two_branch();
  const auto r = solve(f);
  CHECK(r.share == 3);
  CHECK(witness_ok(f, r));
  const auto star = solve(unit_star(100, 7));
  CHECK(star.algorithm == "star-unweighted");
  CHECK(star.share == 15);
  CHECK(solve(make("h", {{"h", "a", 2}, {"h", "b", 5}}, 2)).algorithm == "path");
  CHECK(decide_share_at_most(f, 3));
  CHECK_FALSE(decide_share_at_most(f, 2));
  CHECK(decide_share_at_most(f, f.topology.total_weight()));
  CHECK_FALSE(decide_share_at_most(unit_star(5, 2), 2));
  CHECK(parse_algorithm("3pvc") == Algorithm::Pvc);
  CHECK_FALSE(parse_algorithm("simplex"));
  CHECK(solve(make("h", {}, 3)).share == 0);
}

TEST_CASE("decide_share_at_most is monotone in q") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = gen_random_tree(9, 3, 3, seed);
    bool prev = false;
    for (Cost q = 0; q <= inst.topology.total_weight(); ++q) {
      const bool now = decide_share_at_most(inst, q);
      CHECK((!prev || now));
      prev = now;
    }
    CHECK(prev);
  }
}

TEST_CASE("all solvers agree with brute force on random trees") {
  Budgets wide;
  wide.ilp_internal = 4;
  wide.ilp_weights = 5;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    const auto inst = gen_random_tree(4 + static_cast<int>(seed % 8), seed % 3 == 0 ? 1 : 4, n, seed);
    if (inst.topology.leaves().size() > 8) continue;
    const auto truth = brute_force_mms(inst);
    CHECK(truth.share == reference_share_leaves(inst));
    const auto dp = solve_leaf_dp(inst);
    CHECK(dp.share == truth.share);
    CHECK(witness_ok(inst, dp));
    const auto autor = solve(inst);
    CHECK(autor.share == truth.share);
    CHECK(witness_ok(inst, autor));
    try {
      const auto ilp = solve_internal_ilp(inst, wide);
      CHECK(ilp.share == truth.share);
      CHECK(witness_ok(inst, ilp));
    } catch (const BudgetExceeded&) {
    }
  }
}

TEST_CASE("internal ILP witnesses are nice") {
  Budgets wide;
  wide.ilp_weights = 5;
  wide.ilp_internal = 8;
  const std::vector<std::vector<std::int64_t>> gadgets{{1, 1, 2, 1, 1, 2}, {1, 2, 3, 1, 2, 3}, {2, 2, 2}, {1, 1, 1, 1, 1, 3}};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = gen_3partition_depth2(gadgets[seed % gadgets.size()]);
    for (const auto& base : {inst, gen_random_tree(10, 2, 3, seed)}) {
      SolveReport r;
      try {
        r = solve_internal_ilp(base, wide);
      } catch (const BudgetExceeded&) {
        continue;
      }
      const auto& t = base.topology;
      const auto types = leaf_types(t);
      // Agents sharing two types of one weight class would contradict niceness.
      for (int i = 0; i < base.agents; ++i) {
        for (int j = i + 1; j < base.agents; ++j) {
          std::map<Cost, int> shared;
          for (const auto& type : types.types) {
            bool in_i = false, in_j = false;
            for (Vertex leaf : type.leaves) {
              in_i = in_i || r.allocation.owner(leaf) == i;
              in_j = in_j || r.allocation.owner(leaf) == j;
            }
            if (in_i && in_j) shared[type.weight] += 1;
          }
          for (const auto& [w, count] : shared) CHECK(count <= 1);
        }
      }
    }
  }
}
