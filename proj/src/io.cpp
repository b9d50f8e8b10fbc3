#include "fairhaul/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace fairhaul {

using nlohmann::json;

namespace {

constexpr int kMaxDecimals = 9;

struct Decimal {
  std::string digits;  // integer part followed by fractional part
  int scale = 0;       // number of fractional digits
  bool negative = false;
};

Decimal parse_decimal(const std::string& text, const std::string& where) {
  Decimal d;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) d.negative = text[i++] == '-';
  std::string whole, frac;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) whole += text[i++];
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) frac += text[i++];
  }
  if (i != text.size() || (whole.empty() && frac.empty())) {
    throw InputError(InputErrorCode::Syntax, where + ": weight '" + text + "' is not a decimal number");
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (static_cast<int>(frac.size()) > kMaxDecimals) {
    throw InputError(InputErrorCode::Syntax, where + ": weight '" + text + "' has too many decimals");
  }
  d.digits = whole + frac;
  d.scale = static_cast<int>(frac.size());
  return d;
}

Cost scale_decimal(const Decimal& d, int decimals, const std::string& where) {
  Cost value = 0;
  for (char c : d.digits) {
    if (__builtin_mul_overflow(value, Cost{10}, &value) || __builtin_add_overflow(value, Cost{c - '0'}, &value)) {
      throw InputError(InputErrorCode::Syntax, where + ": weight out of range");
    }
  }
  for (int i = d.scale; i < decimals; ++i) {
    if (__builtin_mul_overflow(value, Cost{10}, &value)) {
      throw InputError(InputErrorCode::Syntax, where + ": weight out of range");
    }
  }
  return d.negative ? -value : value;
}

std::string weight_text(const json& w, const std::string& where) {
  if (w.is_number_integer()) return w.dump();
  if (w.is_number_float()) {
    const std::string s = w.dump();
    if (s.find_first_of("eE") != std::string::npos) {
      throw InputError(InputErrorCode::Syntax, where + ": write weight " + s + " as a decimal string");
    }
    return s;
  }
  if (w.is_string()) return w.get<std::string>();
  throw InputError(InputErrorCode::Syntax, where + ": weight must be a number or a decimal string");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(InputErrorCode::Syntax, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw InputError(InputErrorCode::Syntax, "instance must be a JSON object");
  if (!doc.contains("hub") || !doc["hub"].is_string()) {
    throw InputError(InputErrorCode::Syntax, "instance needs a string field 'hub'");
  }
  if (!doc.contains("agents") || !doc["agents"].is_number_integer()) {
    throw InputError(InputErrorCode::Syntax, "instance needs an integer field 'agents'");
  }
  const auto agents = doc["agents"].get<std::int64_t>();
  if (agents < 1 || agents > 1'000'000) {
    throw InputError(InputErrorCode::BadAgentCount, "agent count must be between 1 and 1000000");
  }
  const json edges = doc.value("edges", json::array());
  if (!edges.is_array()) throw InputError(InputErrorCode::Syntax, "'edges' must be an array");

  struct RawEdge {
    std::string u, v;
    Decimal weight;
    std::string where;
  };
  std::vector<RawEdge> raw;
  int decimals = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const json& e = edges[i];
    const std::string where = "edge " + std::to_string(i);
    if (!e.is_array() || e.size() < 2 || e.size() > 3 || !e[0].is_string() || !e[1].is_string()) {
      throw InputError(InputErrorCode::Syntax, where + ": expected [\"u\", \"v\", weight?]");
    }
    RawEdge r{e[0].get<std::string>(), e[1].get<std::string>(), {}, where};
    r.weight = e.size() == 3 ? parse_decimal(weight_text(e[2], where), where) : parse_decimal("1", where);
    decimals = std::max(decimals, r.weight.scale);
    raw.push_back(std::move(r));
  }
  std::vector<Topology::Edge> out;
  out.reserve(raw.size());
  for (const auto& r : raw) out.push_back({r.u, r.v, scale_decimal(r.weight, decimals, r.where)});
  return Instance(Topology::build(doc["hub"].get<std::string>(), out, decimals), static_cast<int>(agents));
}

json cost_to_json(Cost units, int decimals) {
  if (units % pow10(decimals) == 0) return units / pow10(decimals);
  return format_units(units, decimals);
}

json instance_to_json(const Instance& instance) {
  const auto& t = instance.topology;
  json edges = json::array();
  for (const auto& e : t.edges()) edges.push_back(json::array({e.u, e.v, cost_to_json(e.weight, t.decimals())}));
  json doc;
  doc["agents"] = instance.agents;
  doc["edges"] = std::move(edges);
  doc["hub"] = t.name(t.hub());
  return doc;
}

std::string serialize_instance(const Instance& instance) { return instance_to_json(instance).dump(2) + "\n"; }

Allocation parse_allocation(const Instance& instance, std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("assignment") || !doc["assignment"].is_object()) {
    throw InputError(InputErrorCode::Syntax, "allocation needs an object field 'assignment'");
  }
  const auto& t = instance.topology;
  std::vector<int> owner(t.size(), kNoVertex);
  std::vector<char> seen(t.size(), 0);
  for (const auto& [name, agent] : doc["assignment"].items()) {
    const auto v = t.find(name);
    if (!v || !t.is_order(*v)) {
      throw InputError(InputErrorCode::AllocationMismatch, "'" + name + "' is not an order of the instance");
    }
    if (!agent.is_number_integer()) {
      throw InputError(InputErrorCode::Syntax, "agent of '" + name + "' must be an integer");
    }
    const auto a = agent.get<std::int64_t>();
    if (a < 1 || a > instance.agents) {
      throw InputError(InputErrorCode::AllocationMismatch,
                       "agent " + std::to_string(a) + " of '" + name + "' is outside 1.." +
                           std::to_string(instance.agents));
    }
    owner[*v] = static_cast<int>(a - 1);
    seen[*v] = 1;
  }
  for (Vertex v : t.orders()) {
    if (!seen[v]) throw InputError(InputErrorCode::AllocationMismatch, "order '" + t.name(v) + "' is unassigned");
  }
  Allocation alloc(std::move(owner), instance.agents);
  alloc.validate(instance);
  return alloc;
}

json allocation_to_json(const Instance& instance, const Allocation& allocation) {
  const auto& t = instance.topology;
  json assignment = json::object();
  for (Vertex v : t.orders()) assignment[t.name(v)] = allocation.owner(v) + 1;
  return json{{"assignment", std::move(assignment)}};
}

std::string serialize_allocation(const Instance& instance, const Allocation& allocation) {
  return allocation_to_json(instance, allocation).dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(InputErrorCode::Syntax, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(InputErrorCode::Syntax, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace fairhaul
