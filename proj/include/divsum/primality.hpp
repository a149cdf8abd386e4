#ifndef DIVSUM_PRIMALITY_HPP_
#define DIVSUM_PRIMALITY_HPP_

#include <cstdint>
#include <vector>

#include "divsum/natural.hpp"

namespace divsum {

/// Deterministic Miller-Rabin. The witness set {2,...,37} decides primality
/// for all n < 3.317e24; above that the set is extended to the first 25
/// primes, which keeps the answer deterministic and has no known exceptions.
bool is_prime(const Natural& n);

/// Primes <= bound, ascending (plain Eratosthenes).
std::vector<std::uint32_t> sieve_primes(std::uint32_t bound);

/// The shared trial-division prime table (primes below 10^6), built once.
const std::vector<std::uint32_t>& small_primes();

}  // namespace divsum

#endif  // DIVSUM_PRIMALITY_HPP_
