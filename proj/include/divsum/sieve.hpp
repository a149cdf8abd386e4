#ifndef DIVSUM_SIEVE_HPP_
#define DIVSUM_SIEVE_HPP_

#include <cstdint>
#include <span>

#include "divsum/parallel.hpp"

namespace divsum {

/// Largest n the uint64 sieve scans accept. sigma(n) stays far below 2^63 up
/// to this bound, so the comparison kernels can use signed compares.
inline constexpr std::uint64_t kMaxSieveBound = 1ull << 40;

/// Fills out[i] = sigma(first + i) exactly, for first >= 1. Divisor-pair
/// sieve: every d <= sqrt(last) contributes d and the cofactor to each
/// multiple in the block, squares contribute their root once.
void sigma_block(std::uint64_t first, std::span<std::uint64_t> out);

/// Number of fixed-size blocks covering [1, bound].
inline std::size_t block_count(std::uint64_t bound, std::uint64_t block_size) {
  return static_cast<std::size_t>((bound + block_size - 1) / block_size);
}

/// [first, last] of a block (1-based values, inclusive).
inline std::pair<std::uint64_t, std::uint64_t> block_range(
    std::size_t index, std::uint64_t bound, std::uint64_t block_size) {
  const std::uint64_t first = 1 + index * block_size;
  const std::uint64_t last = std::min(bound, first + block_size - 1);
  return {first, last};
}

}  // namespace divsum

#endif  // DIVSUM_SIEVE_HPP_
