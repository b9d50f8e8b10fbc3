#include "fairhaul/budget.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "fairhaul/types.hpp"

namespace fairhaul {

std::vector<std::pair<const char*, std::int64_t*>> Budgets::fields() {
  return {
      {"brute-leaves", &brute_leaves},
      {"brute-agents", &brute_agents},
      {"enumeration", &enumeration},
      {"leaf-dp-witness-leaves", &leaf_dp_witness_leaves},
      {"leaf-dp-share-leaves", &leaf_dp_share_leaves},
      {"ilp-internal", &ilp_internal},
      {"ilp-weights", &ilp_weights},
      {"ilp-nodes", &ilp_nodes},
      {"star-agents", &star_agents},
      {"star-max-weight", &star_max_weight},
      {"pvc", &pvc},
  };
}

void Budgets::apply_environment() {
  for (auto& [name, field] : fields()) {
    std::string var = "FAIRHAUL_BUDGET_";
    for (const char* p = name; *p; ++p) {
      var += *p == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(*p)));
    }
    const char* value = std::getenv(var.c_str());
    if (value == nullptr) continue;
    try {
      std::size_t used = 0;
      const long long parsed = std::stoll(value, &used);
      if (used != std::string(value).size() || parsed < 0) throw std::invalid_argument(var);
      *field = parsed;
    } catch (const std::exception&) {
      throw InputError(InputErrorCode::Syntax, var + " must be a nonnegative integer");
    }
  }
}

}  // namespace fairhaul
