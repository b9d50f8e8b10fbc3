#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "fairhaul/types.hpp"

// Data-parallel kernels behind the leaf-subset dynamic program. Each kernel has
// a portable scalar reference and an AVX2 variant; the public entry points pick
// one at runtime. Both variants produce bit-identical tables, including the
// tie-breaking of the recorded choices.
namespace fairhaul::kernels {

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa);

bool avx2_available();

/// The variant used by the dispatching entry points.
Isa active_isa();

/// Pins the dispatch (tests and benchmarks); nullopt restores auto-detection.
/// Requesting Avx2 on a machine without it throws std::runtime_error.
void force_isa(std::optional<Isa> isa);

/// out[Q] = sum of weights[e] over edges e with (Q & masks[e]) != 0, for all
/// Q < out.size(). With masks[e] the leaves below order e, out[Q] is the cost of
/// the cheapest bundle that contains leaf set Q.
void subset_costs(std::span<const std::uint64_t> masks, std::span<const Cost> weights, std::span<Cost> out);

/// One layer of the min-max partition recurrence over subsets S of the leaves:
///   out[S] = min over Q subset of S with lowbit(S) in Q of max(prev[S ^ Q], cost[Q]),
/// and out[0] = 0. When `choice` is non-empty it receives the minimizing Q; among
/// equal values the first Q in descending submask order wins.
void minmax_relax(std::span<const Cost> prev, std::span<const Cost> cost, std::span<Cost> out,
                  std::span<std::uint32_t> choice);

namespace scalar {
void subset_costs(std::span<const std::uint64_t> masks, std::span<const Cost> weights, std::span<Cost> out);
void minmax_relax(std::span<const Cost> prev, std::span<const Cost> cost, std::span<Cost> out,
                  std::span<std::uint32_t> choice);
}  // namespace scalar

namespace avx2 {
void subset_costs(std::span<const std::uint64_t> masks, std::span<const Cost> weights, std::span<Cost> out);
void minmax_relax(std::span<const Cost> prev, std::span<const Cost> cost, std::span<Cost> out,
                  std::span<std::uint32_t> choice);
}  // namespace avx2

}  // namespace fairhaul::kernels
