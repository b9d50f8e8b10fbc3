#pragma once

#include <optional>

#include "fairhaul/model.hpp"

namespace fairhaul {

/// An order whose agent services no leaf below it.
struct WasteWitness {
  Vertex order = kNoVertex;
  int agent = 0;

  friend bool operator==(const WasteWitness&, const WasteWitness&) = default;
};

struct NonwasteResult {
  bool nonwasteful = true;
  std::optional<WasteWitness> witness;  // first violation in preorder
};

/// Propagates, from every leaf toward the hub, which agents service a leaf in
/// each subtree, then checks every order against its subtree's agent set.
NonwasteResult verify_nonwasteful(const Instance& instance, const Allocation& allocation);

/// Direct check of the definition: scans the subtree of every order. Quadratic;
/// kept as a reference for testing the propagation version.
NonwasteResult verify_nonwasteful_naive(const Instance& instance, const Allocation& allocation);

/// Non-wasteful allocation with the same leaf sets and no larger bundle cost.
/// Leaves are swept agent by agent (ascending); each walks toward the hub and
/// claims orders until it meets one that an earlier sweep already claimed.
Allocation repair_to_nonwasteful(const Instance& instance, const Allocation& allocation);

}  // namespace fairhaul
