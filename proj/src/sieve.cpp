#include "divsum/sieve.hpp"

#include <algorithm>
#include <stdexcept>

namespace divsum {

void sigma_block(std::uint64_t first, std::span<std::uint64_t> out) {
  if (out.empty()) return;
  if (first < 1) throw std::invalid_argument("sigma_block: first must be >= 1");
  const std::uint64_t last = first + out.size() - 1;
  if (last > kMaxSieveBound) {
    throw std::invalid_argument("sigma_block: range exceeds sieve bound");
  }
  std::fill(out.begin(), out.end(), 0);

  for (std::uint64_t d = 1; d * d <= last; ++d) {
    const std::uint64_t sq = d * d;
    if (sq >= first) out[sq - first] += d;

    // Pairs (d, q) with q > d: walk multiples m = q*d, tracking q so the
    // inner loop is division-free.
    std::uint64_t m0 = std::max(first, sq + d);
    m0 = ((m0 + d - 1) / d) * d;
    std::uint64_t q = m0 / d;
    for (std::uint64_t m = m0; m <= last; m += d, ++q) {
      out[m - first] += d + q;
    }
  }
}

}  // namespace divsum
