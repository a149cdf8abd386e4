#ifndef DIVSUM_FACTORIZATION_HPP_
#define DIVSUM_FACTORIZATION_HPP_

#include <vector>

#include "divsum/natural.hpp"

namespace divsum {

struct PrimePower {
  Natural prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical form consumed by every multiplicative function: (prime, exponent)
/// pairs, strictly increasing by prime. The factorization of 1 is empty.
using Factorization = std::vector<PrimePower>;

/// Factors n >= 1. Trial division by the primes below 10^6, then perfect-power
/// reduction and Pollard-Brent rho with a fixed parameter schedule; combined
/// with the deterministic primality test, the output is reproducible.
Factorization factor(const Natural& n);

/// Product of p^e over all pairs (the inverse of factor()).
Natural unfactor(const Factorization& f);

/// True when every invariant of the canonical form holds for `value`.
bool is_valid_factorization(const Factorization& f, const Natural& value);

}  // namespace divsum

#endif  // DIVSUM_FACTORIZATION_HPP_
