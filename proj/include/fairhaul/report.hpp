#pragma once

#include <string>

#include "fairhaul/model.hpp"

namespace fairhaul {

/// Result of an MMS computation. `share` is in weight units of the instance.
struct SolveReport {
  Cost share = 0;
  Allocation allocation;
  std::string algorithm;
  Stats stats;
};

/// units / 10^decimals as an exact ratio.
inline Rational to_rational(Cost units, int decimals) { return Rational(units, pow10(decimals)); }

/// Raised when a solver is asked to run on a topology outside its class.
class NotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fairhaul
