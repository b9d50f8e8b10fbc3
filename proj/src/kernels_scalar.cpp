#include <limits>

#include "fairhaul/kernels.hpp"

namespace fairhaul::kernels::scalar {

void subset_costs(std::span<const std::uint64_t> masks, std::span<const Cost> weights, std::span<Cost> out) {
  for (std::size_t q = 0; q < out.size(); ++q) {
    Cost c = 0;
    for (std::size_t e = 0; e < masks.size(); ++e) {
      if (q & masks[e]) c += weights[e];
    }
    out[q] = c;
  }
}

void minmax_relax(std::span<const Cost> prev, std::span<const Cost> cost, std::span<Cost> out,
                  std::span<std::uint32_t> choice) {
  const bool record = !choice.empty();
  out[0] = 0;
  if (record) choice[0] = 0;
  for (std::uint64_t s = 1; s < out.size(); ++s) {
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t rest = s ^ low;
    Cost best = std::numeric_limits<Cost>::max();
    std::uint64_t best_q = s;
    std::uint64_t t = rest;
    while (true) {
      const std::uint64_t q = t | low;
      const Cost a = prev[rest ^ t];
      const Cost b = cost[q];
      const Cost v = a > b ? a : b;
      if (v < best) {
        best = v;
        best_q = q;
      }
      if (t == 0) break;
      t = (t - 1) & rest;
    }
    out[s] = best;
    if (record) choice[s] = static_cast<std::uint32_t>(best_q);
  }
}

}  // namespace fairhaul::kernels::scalar
