#include <limits>

#include "fairhaul/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define FAIRHAUL_X86 1
#endif

namespace fairhaul::kernels::avx2 {

#ifdef FAIRHAUL_X86

namespace {

__attribute__((target("avx2"))) inline __m256i max_epi64(__m256i a, __m256i b) {
  return _mm256_blendv_epi8(b, a, _mm256_cmpgt_epi64(a, b));
}

}  // namespace

__attribute__((target("avx2"))) void subset_costs(std::span<const std::uint64_t> masks,
                                                   std::span<const Cost> weights, std::span<Cost> out) {
  const std::size_t n = out.size();
  const __m256i step = _mm256_set1_epi64x(4);
  __m256i q = _mm256_setr_epi64x(0, 1, 2, 3);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t base = 0;
  for (; base + 4 <= n; base += 4) {
    __m256i acc = zero;
    for (std::size_t e = 0; e < masks.size(); ++e) {
      const __m256i m = _mm256_set1_epi64x(static_cast<long long>(masks[e]));
      const __m256i empty = _mm256_cmpeq_epi64(_mm256_and_si256(q, m), zero);
      acc = _mm256_add_epi64(acc, _mm256_andnot_si256(empty, _mm256_set1_epi64x(weights[e])));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + base), acc);
    q = _mm256_add_epi64(q, step);
  }
  for (; base < n; ++base) {
    Cost c = 0;
    for (std::size_t e = 0; e < masks.size(); ++e) {
      if (base & masks[e]) c += weights[e];
    }
    out[base] = c;
  }
}

// Submasks are visited in descending order, so "first in enumeration order"
// is the same as "largest Q"; lanes carry their best Q and ties resolve to the
// larger one.
__attribute__((target("avx2"))) void minmax_relax(std::span<const Cost> prev, std::span<const Cost> cost,
                                                   std::span<Cost> out, std::span<std::uint32_t> choice) {
  const bool record = !choice.empty();
  const auto* prev_base = reinterpret_cast<const long long*>(prev.data());
  const auto* cost_base = reinterpret_cast<const long long*>(cost.data());
  out[0] = 0;
  if (record) choice[0] = 0;
  alignas(32) long long ts[4];
  alignas(32) long long lane_val[4];
  alignas(32) long long lane_q[4];
  for (std::uint64_t s = 1; s < out.size(); ++s) {
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t rest = s ^ low;
    const __m256i rest_v = _mm256_set1_epi64x(static_cast<long long>(rest));
    const __m256i low_v = _mm256_set1_epi64x(static_cast<long long>(low));
    __m256i best_v = _mm256_set1_epi64x(std::numeric_limits<long long>::max());
    __m256i best_q = _mm256_setzero_si256();

    std::uint64_t t = rest;
    bool done = false;
    int filled = 0;
    while (!done) {
      filled = 0;
      while (filled < 4 && !done) {
        ts[filled++] = static_cast<long long>(t);
        if (t == 0) {
          done = true;
        } else {
          t = (t - 1) & rest;
        }
      }
      if (filled < 4) break;
      const __m256i tv = _mm256_load_si256(reinterpret_cast<const __m256i*>(ts));
      const __m256i qv = _mm256_or_si256(tv, low_v);
      const __m256i a = _mm256_i64gather_epi64(prev_base, _mm256_xor_si256(rest_v, tv), 8);
      const __m256i b = _mm256_i64gather_epi64(cost_base, qv, 8);
      const __m256i v = max_epi64(a, b);
      const __m256i better = _mm256_cmpgt_epi64(best_v, v);
      best_v = _mm256_blendv_epi8(best_v, v, better);
      best_q = _mm256_blendv_epi8(best_q, qv, better);
      filled = 0;
    }

    _mm256_store_si256(reinterpret_cast<__m256i*>(lane_val), best_v);
    _mm256_store_si256(reinterpret_cast<__m256i*>(lane_q), best_q);
    Cost best = std::numeric_limits<Cost>::max();
    std::uint64_t bq = 0;
    for (int l = 0; l < 4; ++l) {
      const auto lq = static_cast<std::uint64_t>(lane_q[l]);
      if (lane_val[l] < best || (lane_val[l] == best && lq > bq)) {
        best = lane_val[l];
        bq = lq;
      }
    }
    for (int l = 0; l < filled; ++l) {
      const auto tt = static_cast<std::uint64_t>(ts[l]);
      const std::uint64_t qq = tt | low;
      const Cost a = prev[rest ^ tt];
      const Cost b = cost[qq];
      const Cost v = a > b ? a : b;
      if (v < best) {
        best = v;
        bq = qq;
      }
    }
    out[s] = best;
    if (record) choice[s] = static_cast<std::uint32_t>(bq);
  }
}

#else

void subset_costs(std::span<const std::uint64_t> masks, std::span<const Cost> weights, std::span<Cost> out) {
  scalar::subset_costs(masks, weights, out);
}

void minmax_relax(std::span<const Cost> prev, std::span<const Cost> cost, std::span<Cost> out,
                  std::span<std::uint32_t> choice) {
  scalar::minmax_relax(prev, cost, out, choice);
}

#endif

}  // namespace fairhaul::kernels::avx2
