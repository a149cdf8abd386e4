// AVX2 variants of the scan and reduction kernels. This translation unit is
// the only one compiled with -mavx2; callers reach it through the runtime
// dispatch in kernels.cpp.

#include <immintrin.h>

#include <cstdint>
#include <span>
#include <vector>

#include "divsum/kernels.hpp"

namespace divsum::kernels::detail {

namespace {

// Lanes hold n, n+1, n+2, n+3; sigma and 2n stay below 2^63 for every scan
// bound this library accepts, so signed 64-bit compares are safe.
inline __m256i lane_indices(std::uint64_t n) {
  return _mm256_setr_epi64x(static_cast<long long>(n),
                            static_cast<long long>(n + 1),
                            static_cast<long long>(n + 2),
                            static_cast<long long>(n + 3));
}

inline double hsum(__m256d v) {
  // Fixed combine order: lane0+lane1+lane2+lane3.
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
}

}  // namespace

ClassCounts class_counts_avx2(std::span<const std::uint64_t> sigma,
                              std::uint64_t first_n) {
  ClassCounts counts;
  const std::size_t n = sigma.size();
  std::size_t i = 0;
  __m256i vn = lane_indices(first_n);
  const __m256i four = _mm256_set1_epi64x(4);
  std::uint64_t abundant = 0, perfect = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i s = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(sigma.data() + i));
    const __m256i twice = _mm256_slli_epi64(vn, 1);
    const __m256i gt = _mm256_cmpgt_epi64(s, twice);
    const __m256i eq = _mm256_cmpeq_epi64(s, twice);
    abundant += static_cast<unsigned>(
        __builtin_popcount(_mm256_movemask_pd(_mm256_castsi256_pd(gt))));
    perfect += static_cast<unsigned>(
        __builtin_popcount(_mm256_movemask_pd(_mm256_castsi256_pd(eq))));
    vn = _mm256_add_epi64(vn, four);
  }
  for (; i < n; ++i) {
    const std::uint64_t twice_n = 2 * (first_n + i);
    if (sigma[i] > twice_n) {
      ++abundant;
    } else if (sigma[i] == twice_n) {
      ++perfect;
    }
  }
  counts.abundant = abundant;
  counts.perfect = perfect;
  counts.deficient = n - abundant - perfect;
  return counts;
}

std::vector<std::uint64_t> find_perfect_avx2(
    std::span<const std::uint64_t> sigma, std::uint64_t first_n) {
  std::vector<std::uint64_t> hits;
  const std::size_t n = sigma.size();
  std::size_t i = 0;
  __m256i vn = lane_indices(first_n);
  const __m256i four = _mm256_set1_epi64x(4);
  for (; i + 4 <= n; i += 4) {
    const __m256i s = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(sigma.data() + i));
    const __m256i eq = _mm256_cmpeq_epi64(s, _mm256_slli_epi64(vn, 1));
    int mask = _mm256_movemask_pd(_mm256_castsi256_pd(eq));
    while (mask != 0) {
      const int lane = __builtin_ctz(static_cast<unsigned>(mask));
      hits.push_back(first_n + i + static_cast<unsigned>(lane));
      mask &= mask - 1;
    }
    vn = _mm256_add_epi64(vn, four);
  }
  for (; i < n; ++i) {
    if (sigma[i] == 2 * (first_n + i)) hits.push_back(first_n + i);
  }
  return hits;
}

double sum_avx2(std::span<const double> x) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n = x.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(x.data() + i));
  }
  double total = hsum(acc);
  for (; i < n; ++i) total += x[i];
  return total;
}

CenteredSums centered_sums_avx2(std::span<const double> x, double c) {
  const __m256d vc = _mm256_set1_pd(c);
  __m256d a1 = _mm256_setzero_pd(), a2 = a1, a3 = a1, a4 = a1;
  const std::size_t n = x.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x.data() + i), vc);
    const __m256d d2 = _mm256_mul_pd(d, d);
    a1 = _mm256_add_pd(a1, d);
    a2 = _mm256_add_pd(a2, d2);
    a3 = _mm256_add_pd(a3, _mm256_mul_pd(d2, d));
    a4 = _mm256_add_pd(a4, _mm256_mul_pd(d2, d2));
  }
  CenteredSums s{hsum(a1), hsum(a2), hsum(a3), hsum(a4)};
  for (; i < n; ++i) {
    const double d = x[i] - c;
    const double d2 = d * d;
    s.s1 += d;
    s.s2 += d2;
    s.s3 += d2 * d;
    s.s4 += d2 * d2;
  }
  return s;
}

FitSums fit_sums_avx2(std::span<const double> xs, std::span<const double> ys) {
  __m256d ax = _mm256_setzero_pd(), ay = ax, axx = ax, axy = ax;
  const std::size_t n = xs.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(xs.data() + i);
    const __m256d vy = _mm256_loadu_pd(ys.data() + i);
    ax = _mm256_add_pd(ax, vx);
    ay = _mm256_add_pd(ay, vy);
    axx = _mm256_add_pd(axx, _mm256_mul_pd(vx, vx));
    axy = _mm256_add_pd(axy, _mm256_mul_pd(vx, vy));
  }
  FitSums s{hsum(ax), hsum(ay), hsum(axx), hsum(axy)};
  for (; i < n; ++i) {
    s.sx += xs[i];
    s.sy += ys[i];
    s.sxx += xs[i] * xs[i];
    s.sxy += xs[i] * ys[i];
  }
  return s;
}

}  // namespace divsum::kernels::detail
