#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fairhaul {

/// Dense vertex index. Index order equals lexicographic order of vertex names.
using Vertex = std::int32_t;

/// Distances and bundle costs, measured in fixed-point weight units.
/// A topology with `decimals() == d` stores every weight as value * 10^d.
using Cost = std::int64_t;

inline constexpr Vertex kNoVertex = -1;

enum class InputErrorCode {
  Syntax,
  DuplicateEdge,
  NotATree,
  NonpositiveWeight,
  UnknownHub,
  BadAgentCount,
  UnknownVertex,
  AllocationMismatch,
};

const char* to_string(InputErrorCode code);

/// Malformed or inconsistent input. Maps to CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  InputError(InputErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  InputErrorCode code() const noexcept { return code_; }

 private:
  InputErrorCode code_;
};

/// A configured search budget would be exceeded. Maps to CLI exit code 2.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string budget, const std::string& message)
      : std::runtime_error(message), budget_(std::move(budget)) {}

  const std::string& budget() const noexcept { return budget_; }

 private:
  std::string budget_;
};

/// Exact nonnegative ratio, always kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw std::domain_error("Rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

  std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

/// Counters reported by solvers and oracles.
using Stats = std::map<std::string, std::int64_t>;

/// Renders `units / 10^decimals` exactly, without trailing zeros.
std::string format_units(Cost units, int decimals);

/// 10^decimals.
std::int64_t pow10(int decimals);

}  // namespace fairhaul
