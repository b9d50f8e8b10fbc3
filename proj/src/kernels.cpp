#include <atomic>
#include <stdexcept>

#include "fairhaul/kernels.hpp"

namespace fairhaul::kernels {

namespace {

// -1: auto-detect; otherwise the forced Isa value.
std::atomic<int> g_forced{-1};

}  // namespace

const char* to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool available = __builtin_cpu_supports("avx2");
  return available;
#else
  return false;
#endif
}

Isa active_isa() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Isa>(forced);
  return avx2_available() ? Isa::Avx2 : Isa::Scalar;
}

void force_isa(std::optional<Isa> isa) {
  if (isa == Isa::Avx2 && !avx2_available()) throw std::runtime_error("AVX2 is not supported on this CPU");
  g_forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void subset_costs(std::span<const std::uint64_t> masks, std::span<const Cost> weights, std::span<Cost> out) {
  if (active_isa() == Isa::Avx2) {
    avx2::subset_costs(masks, weights, out);
  } else {
    scalar::subset_costs(masks, weights, out);
  }
}

void minmax_relax(std::span<const Cost> prev, std::span<const Cost> cost, std::span<Cost> out,
                  std::span<std::uint32_t> choice) {
  if (active_isa() == Isa::Avx2) {
    avx2::minmax_relax(prev, cost, out, choice);
  } else {
    scalar::minmax_relax(prev, cost, out, choice);
  }
}

}  // namespace fairhaul::kernels
