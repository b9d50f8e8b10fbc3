#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fairhaul/model.hpp"

namespace fairhaul {

/// Parses the instance JSON format:
///   {"hub": "<id>", "agents": <int>, "edges": [["<u>", "<v>", <weight>], ...]}
/// A weight may be a positive integer, a decimal string such as "2.5", or a
/// JSON number; an omitted weight is 1. All weights are rescaled to a common
/// number of decimals so that solvers work on exact integers.
Instance parse_instance(std::string_view text);

/// Canonical form: sorted keys, (parent, child) edges sorted by names,
/// weights always present. Integral weights are written as JSON integers,
/// fractional ones as decimal strings.
std::string serialize_instance(const Instance& instance);
nlohmann::json instance_to_json(const Instance& instance);

/// {"assignment": {"<order>": <agent 1..n>, ...}}; every order must appear once.
Allocation parse_allocation(const Instance& instance, std::string_view text);
std::string serialize_allocation(const Instance& instance, const Allocation& allocation);
nlohmann::json allocation_to_json(const Instance& instance, const Allocation& allocation);

/// A cost in weight units as JSON: an integer when exact, otherwise a decimal string.
nlohmann::json cost_to_json(Cost units, int decimals);

/// Whole file contents; throws InputError(Syntax) when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace fairhaul
