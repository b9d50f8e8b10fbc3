#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "fairhaul/cli.hpp"
#include "fairhaul/fairness.hpp"
#include "fairhaul/generators.hpp"
#include "fairhaul/io.hpp"
#include "support.hpp"

using namespace fh_test;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct Files {
  std::filesystem::path dir = scratch_dir("cli");
  std::string put(const std::string& name, const std::string& text) const {
    const auto p = (dir / name).string();
    write_file(p, text);
    return p;
  }
};

}  // namespace

TEST_CASE("solve") {
  Files f;
  const auto tb = f.put("two_branch.json", serialize_instance(two_branch()));
  const auto r = run({"solve", tb});
  REQUIRE(r.code == 0);
  const auto doc = r.doc();
  CHECK(doc["share"] == 3);
  CHECK(doc["allocation"]["assignment"].size() == 6);
  CHECK(doc.contains("stats"));

  const auto w = (f.dir / "witness.json").string();
  CHECK(run({"solve", tb, "--algorithm", "brute", "--witness", w, "--no-allocation"}).code == 0);
  const auto witness = parse_allocation(two_branch(), read_file(w));
  CHECK(max_cost(two_branch(), witness) == 3);

  const auto bad = f.put("bad.json", "{\"hub\": ");
  const auto broken = run({"solve", bad});
  CHECK(broken.code == 1);
  CHECK_FALSE(broken.err.empty());
  CHECK(run({"solve", (f.dir / "missing.json").string()}).code == 1);

  const auto big = f.put("big.json", serialize_instance(unit_star(20, 2)));
  CHECK(run({"solve", big, "--algorithm", "brute"}).code == 2);
  CHECK(run({"solve", big, "--algorithm", "brute", "--budget-brute-leaves", "25"}).code == 0);
  CHECK(run({"solve", tb, "--algorithm", "star"}).code == 1);
  CHECK(run({"solve", tb, "--algorithm", "simplex"}).code == 1);
}

TEST_CASE("solve reports decimal shares exactly") {
  Files f;
  const auto p = f.put("dec.json", R"({"hub":"h","agents":2,"edges":[["h","a","1.5"],["h","b","0.25"],["h","c","1"]]})");
  const auto r = run({"solve", p});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["share"] == "1.5");
}

TEST_CASE("budget overrides from the environment") {
  Files f;
  const auto big = f.put("big.json", serialize_instance(unit_star(14, 2)));
  ::setenv("FAIRHAUL_BUDGET_BRUTE_LEAVES", "3", 1);
  CHECK(run({"solve", big, "--algorithm", "brute"}).code == 2);
  CHECK(run({"solve", big, "--algorithm", "brute", "--budget-brute-leaves", "14"}).code == 0);
  ::setenv("FAIRHAUL_BUDGET_BRUTE_LEAVES", "lots", 1);
  CHECK(run({"solve", big}).code == 1);
  ::unsetenv("FAIRHAUL_BUDGET_BRUTE_LEAVES");
}

TEST_CASE("verify and repair") {
  Files f;
  const auto tb = f.put("two_branch.json", serialize_instance(two_branch()));
  const auto top = f.put("top.json", R"({"assignment":{"v6":1,"v1":2,"v2":2,"v5":2,"v3":3,"v4":3}})");
  const auto bottom = f.put("bottom.json", R"({"assignment":{"v2":1,"v6":1,"v1":2,"v5":2,"v3":3,"v4":3}})");

  const auto good = run({"verify", tb, bottom, "--check", "nw"});
  CHECK(good.code == 0);
  CHECK(good.doc()["nonwasteful"] == true);
  CHECK(good.doc()["costs"] == json::array({3, 2, 3}));
  CHECK(good.doc()["max_cost"] == 3);

  const auto bad = run({"verify", tb, top, "--check", "nw"});
  CHECK(bad.code == 3);
  CHECK(bad.doc()["witness"]["order"] == "v2");
  CHECK(bad.doc()["witness"]["agent"] == 2);
  CHECK(run({"verify", tb, top, "--fairness", "ef"}).code == 0);
  CHECK(run({"verify", tb, bottom, "--fairness", "ef"}).code == 3);
  CHECK(run({"verify", tb, bottom, "--check", "nw,ef1"}).code == 0);

  const auto mismatch = f.put("mm.json", R"({"assignment":{"zz":1}})");
  CHECK(run({"verify", tb, mismatch}).code == 1);

  const auto repaired = run({"repair", tb, top});
  REQUIRE(repaired.code == 0);
  const auto fixed = f.put("fixed.json", repaired.out);
  const auto check = run({"verify", tb, fixed});
  CHECK(check.code == 0);
  CHECK(check.doc()["costs"] == json::array({3, 2, 3}));
}

TEST_CASE("classify") {
  Files f;
  const auto star = run({"classify", f.put("star.json", serialize_instance(unit_star(5, 2)))});
  REQUIRE(star.code == 0);
  CHECK(star.doc()["is_star"] == true);
  CHECK(star.doc()["L"] == 5);
  CHECK(star.doc()["k"] == 1);
  const auto path = run({"classify", f.put("p.json", serialize_instance(gen_spider(1, 5)))});
  CHECK(path.doc()["is_path"] == true);
  CHECK(path.doc()["three_pvc"] == 2);
  const auto tb = run({"classify", f.put("two_branch.json", serialize_instance(two_branch()))});
  CHECK(tb.doc()["L"] == 3);
}

TEST_CASE("gen") {
  const auto a = run({"gen", "--family", "random", "--m", "8", "--max-weight", "3", "--agents", "2", "--seed", "9"});
  REQUIRE(a.code == 0);
  CHECK(a.out == serialize_instance(gen_random_tree(8, 3, 2, 9)));
  CHECK(run({"gen", "--family", "spider", "--n", "2", "--len", "3"}).out == serialize_instance(gen_spider(2, 3)));
  CHECK(run({"gen", "--family", "binpack", "--elements", "2,2,2", "--k", "2"}).out ==
        serialize_instance(gen_binpacking_paths({2, 2, 2}, 2)));
  CHECK(run({"gen", "--family", "3part-depth2", "--elements", "1,1,2,1,1,2"}).code == 0);
  CHECK(run({"gen", "--family", "caterpillar", "--spine", "4", "--seed", "3"}).code == 0);
  CHECK(run({"gen", "--family", "spider", "--n", "2"}).code == 1);
  CHECK(run({"gen", "--family", "3part-star", "--elements", "1,2"}).code == 1);
  CHECK(run({"gen", "--family", "nonsense"}).code == 1);
}

TEST_CASE("bench") {
  const auto r = run({"bench", "--family", "spider", "--n", "1..4", "--len", "1..4", "--no-timing"});
  REQUIRE(r.code == 0);
  std::vector<std::string> lines;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  CHECK(lines.size() == 17);
  CHECK(lines[0] == "instance_id,m,n,L,k,algorithm,share,wall_ms,ratio,stats");
  CHECK(r.out.find('\r') == std::string::npos);
  CHECK(std::is_sorted(lines.begin() + 1, lines.end()));
  CHECK(run({"bench", "--family", "spider", "--n", "1..4", "--len", "1..4", "--no-timing", "--jobs", "3"}).out == r.out);

  const auto ponw = run({"bench", "--family", "ponw-util", "--n", "2", "--m", "3..5", "--no-timing"});
  REQUIRE(ponw.code == 0);
  CHECK(ponw.out.find("ponw-util-n2-m5,5,2,2,") != std::string::npos);
  CHECK(ponw.out.find(",8/5,") != std::string::npos);

  CHECK(run({"bench", "--family", "spider", "--n", "3..1", "--len", "2"}).code == 1);
}

TEST_CASE("mechanism") {
  Files f;
  const auto ce = f.put("ce.json", serialize_instance(mechanism_counterexample()));
  const auto rr = run({"mechanism", "round-robin", ce});
  REQUIRE(rr.code == 0);
  CHECK(rr.doc()["costs"] == json::array({8, 4}));
  CHECK(rr.doc()["ef1"] == false);
  CHECK(rr.doc()["nonwasteful"] == true);
  const auto swapped = run({"mechanism", "round-robin", ce, "--agent-order", "2,1"});
  CHECK(swapped.doc()["costs"] == json::array({4, 8}));
  const auto ec = run({"mechanism", "envy-cycle", ce, "--leaf-order", "l1,l2,l3"});
  CHECK(ec.doc()["costs"] == json::array({8, 4}));
  CHECK(run({"mechanism", "envy-cycle", ce, "--leaf-order", "l1,l2"}).code == 1);
  CHECK(run({"mechanism", "envy-cycle", ce, "--leaf-order", "l1,l2,nope"}).code == 1);
  CHECK(run({"mechanism", "round-robin", ce, "--agent-order", "1,3"}).code == 1);
}
