#include "fairhaul/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "fairhaul/classify.hpp"
#include "fairhaul/fairness.hpp"
#include "fairhaul/generators.hpp"
#include "fairhaul/io.hpp"
#include "fairhaul/nonwaste.hpp"
#include "fairhaul/oracle.hpp"
#include "fairhaul/solvers.hpp"

namespace fairhaul {

namespace {

using nlohmann::json;

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InputError(InputErrorCode::Syntax, "expected an integer, got '" + text + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) parts.push_back(cur);
  }
  return parts;
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> values;
  for (const auto& part : split(text, ',')) values.push_back(parse_int(part));
  return values;
}

// "a..b" (inclusive, empty when b < a) or a comma-separated list.
std::vector<std::int64_t> parse_values(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return parse_list(text);
  const auto lo = parse_int(text.substr(0, dots));
  const auto hi = parse_int(text.substr(dots + 2));
  std::vector<std::int64_t> values;
  for (auto v = lo; v <= hi; ++v) values.push_back(v);
  return values;
}

json costs_json(const Instance& instance, const std::vector<Cost>& costs) {
  json list = json::array();
  for (Cost c : costs) list.push_back(cost_to_json(c, instance.topology.decimals()));
  return list;
}

Cost max_of(const std::vector<Cost>& costs) { return costs.empty() ? 0 : *std::max_element(costs.begin(), costs.end()); }

json witness_json(const Instance& instance, const NonwasteResult& nw) {
  if (!nw.witness) return nullptr;
  return json{{"agent", nw.witness->agent + 1}, {"order", instance.topology.name(nw.witness->order)}};
}

void add_budget_flags(CLI::App* cmd, Budgets& budgets) {
  for (auto [name, field] : budgets.fields()) {
    cmd->add_option(std::string("--budget-") + name, *field)->check(CLI::NonNegativeNumber);
  }
}

std::string stats_cell(const Stats& stats) {
  std::string cell;
  for (const auto& [key, value] : stats) {
    if (!cell.empty()) cell += ';';
    cell += key + "=" + std::to_string(value);
  }
  return cell;
}

struct BenchCase {
  std::string id;
  Instance instance;
  bool ponw_ratio = false;
};

struct BenchRow {
  std::string algorithm;
  std::string share;
  std::string ratio;
  std::string stats;
  double wall_ms = 0;
};

BenchRow bench_one(const BenchCase& c, Algorithm algorithm, const Budgets& budgets) {
  BenchRow row;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto report = solve(c.instance, algorithm, budgets);
    row.algorithm = report.algorithm;
    row.share = format_units(report.share, c.instance.topology.decimals());
    row.stats = stats_cell(report.stats);
  } catch (const BudgetExceeded& e) {
    row.algorithm = "budget-exceeded:" + e.budget();
  } catch (const NotApplicable&) {
    row.algorithm = "not-applicable";
  }
  if (c.ponw_ratio) {
    try {
      row.ratio = ponw(c.instance, Welfare::Util, budgets).pessimistic_ratio.to_string();
    } catch (const BudgetExceeded&) {
      row.ratio = "";
    }
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

struct Options {
  Budgets budgets;
  // solve
  std::string instance_path;
  std::string allocation_path;
  std::string algorithm = "auto";
  std::string witness_path;
  bool no_allocation = false;
  // verify
  std::vector<std::string> checks;
  std::string fairness;
  // output
  std::string out_path;
  // gen / bench
  std::string family;
  std::optional<std::int64_t> m, n, len, k, spine, max_legs, hub_index;
  std::string elements;
  std::int64_t max_weight = 1;
  std::int64_t agents = 2;
  std::uint64_t seed = 0;
  std::string m_values, n_values, len_values, spine_values, seeds = "0";
  int jobs = 1;
  bool no_timing = false;
  // mechanism
  std::string mechanism;
  std::string agent_order;
  std::string leaf_order;
};

template <typename T>
T need(const std::optional<T>& value, const char* flag) {
  if (!value) throw InputError(InputErrorCode::Syntax, std::string("missing required flag ") + flag);
  return *value;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const auto instance = parse_instance(read_file(o.instance_path));
  const auto report = solve(instance, *parse_algorithm(o.algorithm), o.budgets);
  json doc{{"algorithm", report.algorithm},
           {"share", cost_to_json(report.share, instance.topology.decimals())},
           {"stats", report.stats}};
  if (!o.no_allocation) doc["allocation"] = allocation_to_json(instance, report.allocation);
  if (!o.witness_path.empty()) write_file(o.witness_path, serialize_allocation(instance, report.allocation));
  out << dump(doc);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto instance = parse_instance(read_file(o.instance_path));
  const auto allocation = parse_allocation(instance, read_file(o.allocation_path));
  std::vector<std::string> checks = o.checks;
  if (!o.fairness.empty()) checks.push_back(o.fairness);
  if (checks.empty()) checks.push_back("nw");
  std::sort(checks.begin(), checks.end());
  checks.erase(std::unique(checks.begin(), checks.end()), checks.end());

  const auto costs = allocation_costs(instance, allocation);
  const auto nw = verify_nonwasteful(instance, allocation);
  const bool ef = is_ef(instance, allocation);
  const bool ef1 = is_ef1(instance, allocation);
  bool passed = true;
  for (const auto& c : checks) passed = passed && (c == "nw" ? nw.nonwasteful : c == "ef" ? ef : ef1);
  json doc{{"checks", checks},
           {"costs", costs_json(instance, costs)},
           {"ef", ef},
           {"ef1", ef1},
           {"max_cost", cost_to_json(max_of(costs), instance.topology.decimals())},
           {"nonwasteful", nw.nonwasteful},
           {"passed", passed},
           {"witness", witness_json(instance, nw)}};
  out << dump(doc);
  return passed ? kExitOk : kExitPredicate;
}

int cmd_repair(const Options& o, std::ostream& out) {
  const auto instance = parse_instance(read_file(o.instance_path));
  const auto allocation = parse_allocation(instance, read_file(o.allocation_path));
  emit(out, o.out_path, serialize_allocation(instance, repair_to_nonwasteful(instance, allocation)));
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto instance = parse_instance(read_file(o.instance_path));
  const auto c = classify(instance.topology);
  json doc{{"L", c.L},
           {"depth", c.depth},
           {"diameter", c.diameter},
           {"is_caterpillar", c.is_caterpillar},
           {"is_path", c.is_path},
           {"is_star", c.is_star},
           {"k", c.k},
           {"psi", c.psi},
           {"three_pvc", c.three_pvc}};
  out << dump(doc);
  return kExitOk;
}

int as_int(std::int64_t v, const char* flag) {
  if (v < 0 || v > 1'000'000) throw InputError(InputErrorCode::Syntax, std::string(flag) + " is out of range");
  return static_cast<int>(v);
}

Instance generate(const Options& o) {
  const auto& f = o.family;
  if (f == "ponw-util") return gen_ponw_util(as_int(need(o.m, "--m"), "--m"), as_int(need(o.n, "--n"), "--n"));
  if (f == "spider") return gen_spider(as_int(need(o.n, "--n"), "--n"), as_int(need(o.len, "--len"), "--len"));
  if (f == "3part-star") return gen_3partition_star(parse_list(o.elements));
  if (f == "equitable-star") return gen_equitable_star(parse_list(o.elements));
  if (f == "3part-depth2") return gen_3partition_depth2(parse_list(o.elements));
  if (f == "binpack") return gen_binpacking_paths(parse_list(o.elements), as_int(need(o.k, "--k"), "--k"));
  if (f == "random") {
    return gen_random_tree(as_int(need(o.m, "--m"), "--m"), as_int(o.max_weight, "--max-weight"),
                           as_int(o.agents, "--agents"), o.seed);
  }
  std::optional<int> hub;
  if (o.hub_index) hub = as_int(*o.hub_index, "--hub-index");
  return gen_random_caterpillar(as_int(need(o.spine, "--spine"), "--spine"), as_int(o.max_legs.value_or(2), "--max-legs"),
                                as_int(o.agents, "--agents"), o.seed, hub);
}

int cmd_gen(const Options& o, std::ostream& out) {
  emit(out, o.out_path, serialize_instance(generate(o)));
  return kExitOk;
}

std::vector<BenchCase> bench_cases(const Options& o) {
  std::vector<BenchCase> cases;
  auto values = [](const std::string& text, const char* flag) {
    if (text.empty()) throw InputError(InputErrorCode::Syntax, std::string("missing required flag ") + flag);
    return parse_values(text);
  };
  const auto& f = o.family;
  if (f == "spider") {
    for (auto n : values(o.n_values, "--n"))
      for (auto len : values(o.len_values, "--len"))
        if (n >= 1 && len >= 1)
          cases.push_back({"spider-n" + std::to_string(n) + "-len" + std::to_string(len),
                           gen_spider(as_int(n, "--n"), as_int(len, "--len"))});
  } else if (f == "ponw-util") {
    for (auto n : values(o.n_values, "--n"))
      for (auto m : values(o.m_values, "--m"))
        if (n >= 1 && m > n)
          cases.push_back({"ponw-util-n" + std::to_string(n) + "-m" + std::to_string(m),
                           gen_ponw_util(as_int(m, "--m"), as_int(n, "--n")), true});
  } else if (f == "star") {
    for (auto m : values(o.m_values, "--m"))
      for (auto n : values(o.n_values, "--n"))
        if (n >= 1 && m >= n) {
          std::vector<Topology::Edge> edges;
          for (std::int64_t i = 1; i <= m; ++i) edges.push_back({"h", "v" + std::to_string(1000000 + i).substr(1), 1});
          cases.push_back({"star-m" + std::to_string(m) + "-n" + std::to_string(n),
                           Instance(Topology::build("h", edges), as_int(n, "--n"))});
        }
  } else if (f == "random") {
    for (auto m : values(o.m_values, "--m"))
      for (auto n : values(o.n_values, "--n"))
        for (auto s : values(o.seeds, "--seeds"))
          if (m >= 1 && n >= 1)
            cases.push_back({"random-m" + std::to_string(m) + "-n" + std::to_string(n) + "-s" + std::to_string(s),
                             gen_random_tree(as_int(m, "--m"), as_int(o.max_weight, "--max-weight"), as_int(n, "--n"),
                                             static_cast<std::uint64_t>(s))});
  } else {
    for (auto sp : values(o.spine_values, "--spine"))
      for (auto n : values(o.n_values, "--n"))
        for (auto s : values(o.seeds, "--seeds"))
          if (sp >= 1 && n >= 1)
            cases.push_back({"caterpillar-sp" + std::to_string(sp) + "-n" + std::to_string(n) + "-s" + std::to_string(s),
                             gen_random_caterpillar(as_int(sp, "--spine"), as_int(o.max_legs.value_or(2), "--max-legs"),
                                                    as_int(n, "--n"), static_cast<std::uint64_t>(s))});
  }
  return cases;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  const auto cases = bench_cases(o);
  if (cases.empty()) {
    err << "error: the family sweep is empty\n";
    return kExitInput;
  }
  const auto algorithm = *parse_algorithm(o.algorithm);
  std::vector<BenchRow> rows(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) rows[i] = bench_one(cases[i], algorithm, o.budgets);
  };
  const int jobs = std::max(1, std::min<int>(o.jobs, static_cast<int>(cases.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::vector<std::size_t> order(cases.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cases[a].id < cases[b].id; });

  std::ostringstream csv;
  csv << "instance_id,m,n,L,k,algorithm,share,wall_ms,ratio,stats\n";
  for (std::size_t i : order) {
    const auto& c = cases[i];
    const auto cls = classify(c.instance.topology);
    const auto& r = rows[i];
    std::string wall;
    if (!o.no_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", r.wall_ms);
      wall = buf;
    }
    csv << c.id << ',' << c.instance.m() << ',' << c.instance.agents << ',' << cls.L << ',' << cls.k << ','
        << r.algorithm << ',' << r.share << ',' << wall << ',' << r.ratio << ',' << r.stats << '\n';
  }
  emit(out, o.out_path, csv.str());
  return kExitOk;
}

int cmd_mechanism(const Options& o, std::ostream& out) {
  const auto instance = parse_instance(read_file(o.instance_path));
  const auto& t = instance.topology;
  std::vector<int> agents;
  for (auto a : parse_list(o.agent_order)) {
    if (a < 1 || a > instance.agents) throw InputError(InputErrorCode::Syntax, "agent order entry out of range");
    agents.push_back(static_cast<int>(a - 1));
  }
  std::vector<Vertex> leaves;
  for (const auto& name : split(o.leaf_order, ',')) leaves.push_back(t.at(name));
  const Allocation allocation =
      o.mechanism == "round-robin" ? round_robin(instance, agents, leaves) : envy_cycle(instance, leaves, agents);
  const auto costs = allocation_costs(instance, allocation);
  json doc{{"allocation", allocation_to_json(instance, allocation)},
           {"costs", costs_json(instance, costs)},
           {"ef", is_ef(instance, allocation)},
           {"ef1", is_ef1(instance, allocation)},
           {"max_cost", cost_to_json(max_of(costs), t.decimals())},
           {"mechanism", o.mechanism},
           {"nonwasteful", verify_nonwasteful(instance, allocation).nonwasteful}};
  out << dump(doc);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fair and non-wasteful allocation of delivery orders on trees", "fairhaul"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "fairhaul 0.1.0");

  const std::vector<std::string> algorithms{"auto", "brute", "leaf-dp", "internal-ilp", "star", "caterpillar", "path", "3pvc"};

  auto* solve_cmd = app.add_subcommand("solve", "Compute the MMS-share and a non-wasteful witness");
  solve_cmd->add_option("instance", o.instance_path, "Instance JSON file")->required();
  solve_cmd->add_option("--algorithm", o.algorithm, "Solver")->check(CLI::IsMember(algorithms));
  solve_cmd->add_option("--witness", o.witness_path, "Write the witness allocation to this file");
  solve_cmd->add_flag("--no-allocation", o.no_allocation, "Omit the allocation from the output");
  add_budget_flags(solve_cmd, o.budgets);

  auto* verify_cmd = app.add_subcommand("verify", "Check an allocation for non-wastefulness and envy");
  verify_cmd->add_option("instance", o.instance_path, "Instance JSON file")->required();
  verify_cmd->add_option("allocation", o.allocation_path, "Allocation JSON file")->required();
  verify_cmd->add_option("--check", o.checks, "Predicates that must hold (default nw)")
      ->delimiter(',')
      ->check(CLI::IsMember({"nw", "ef", "ef1"}));
  verify_cmd->add_option("--fairness", o.fairness, "Fairness predicate that must hold")->check(CLI::IsMember({"ef", "ef1"}));

  auto* repair_cmd = app.add_subcommand("repair", "Make an allocation non-wasteful without raising any cost");
  repair_cmd->add_option("instance", o.instance_path, "Instance JSON file")->required();
  repair_cmd->add_option("allocation", o.allocation_path, "Allocation JSON file")->required();
  repair_cmd->add_option("--out", o.out_path, "Output file (default stdout)");

  auto* classify_cmd = app.add_subcommand("classify", "Report structural parameters");
  classify_cmd->add_option("instance", o.instance_path, "Instance JSON file")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--family", o.family)
      ->required()
      ->check(CLI::IsMember({"ponw-util", "spider", "3part-star", "3part-depth2", "binpack", "equitable-star", "random",
                             "caterpillar"}));
  gen_cmd->add_option("--m", o.m, "Number of orders");
  gen_cmd->add_option("--n", o.n, "Number of agents");
  gen_cmd->add_option("--len", o.len, "Leg length");
  gen_cmd->add_option("--elements", o.elements, "Comma-separated source elements");
  gen_cmd->add_option("--k", o.k, "Number of bins");
  gen_cmd->add_option("--max-weight", o.max_weight, "Largest random edge weight");
  gen_cmd->add_option("--agents", o.agents, "Agents for random families");
  gen_cmd->add_option("--seed", o.seed, "Random seed");
  gen_cmd->add_option("--spine", o.spine, "Caterpillar spine length");
  gen_cmd->add_option("--max-legs", o.max_legs, "Most legs per spine vertex (default 2)");
  gen_cmd->add_option("--hub-index", o.hub_index, "Spine position of the hub (0-based)");
  gen_cmd->add_option("--out", o.out_path, "Output file (default stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "Solve a family sweep and write CSV");
  bench_cmd->add_option("--family", o.family)
      ->required()
      ->check(CLI::IsMember({"spider", "ponw-util", "star", "random", "caterpillar"}));
  bench_cmd->add_option("--m", o.m_values, "Order counts, a..b or a list");
  bench_cmd->add_option("--n", o.n_values, "Agent counts, a..b or a list");
  bench_cmd->add_option("--len", o.len_values, "Spider leg lengths");
  bench_cmd->add_option("--spine", o.spine_values, "Caterpillar spine lengths");
  bench_cmd->add_option("--seeds", o.seeds, "Seeds for random families (default 0)");
  bench_cmd->add_option("--max-weight", o.max_weight, "Largest random edge weight");
  bench_cmd->add_option("--max-legs", o.max_legs, "Most legs per spine vertex (default 2)");
  bench_cmd->add_option("--algorithm", o.algorithm, "Solver")->check(CLI::IsMember(algorithms));
  bench_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--no-timing", o.no_timing, "Leave the wall_ms column empty");
  bench_cmd->add_option("--out", o.out_path, "Output file (default stdout)");
  add_budget_flags(bench_cmd, o.budgets);

  auto* mech_cmd = app.add_subcommand("mechanism", "Run round-robin or envy-cycle on the leaves");
  mech_cmd->add_option("name", o.mechanism, "Mechanism")->required()->check(CLI::IsMember({"round-robin", "envy-cycle"}));
  mech_cmd->add_option("instance", o.instance_path, "Instance JSON file")->required();
  mech_cmd->add_option("--agent-order", o.agent_order, "Comma-separated agents 1..n");
  mech_cmd->add_option("--leaf-order", o.leaf_order, "Comma-separated leaf names");

  try {
    o.budgets.apply_environment();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitInput;
    }
    if (solve_cmd->parsed()) return cmd_solve(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (repair_cmd->parsed()) return cmd_repair(o, out);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (gen_cmd->parsed()) return cmd_gen(o, out);
    if (bench_cmd->parsed()) return cmd_bench(o, out, err);
    return cmd_mechanism(o, out);
  } catch (const InputError& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded (" << e.budget() << "): " << e.what() << "\n";
    return kExitBudget;
  } catch (const NotApplicable& e) {
    err << "not applicable: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace fairhaul
