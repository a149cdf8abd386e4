#ifndef DIVSUM_DIVISORS_HPP_
#define DIVSUM_DIVISORS_HPP_

#include "divsum/factorization.hpp"
#include "divsum/natural.hpp"

namespace divsum {

/// sigma(n) = sum of all divisors of n, computed as the product of
/// (p^(e+1) - 1) / (p - 1) over the factorization. n >= 1.
Natural sigma(const Natural& n, unsigned bit_cap = kDefaultBitCap);
Natural sigma(const Factorization& f, unsigned bit_cap = kDefaultBitCap);

/// sigma_k(n) = sum of d^k over divisors d of n. sigma_k(n, 0) counts
/// divisors; sigma_k(n, 1) == sigma(n). Grows like n^k, hence the cap.
Natural sigma_k(const Natural& n, unsigned long k,
                unsigned bit_cap = kDefaultBitCap);
Natural sigma_k(const Factorization& f, unsigned long k,
                unsigned bit_cap = kDefaultBitCap);

/// sigma_k(n) mod modulus without forming the full value: per prime power,
/// sum of p^(j*k) mod modulus via modular exponentiation. Exact for any k.
Natural sigma_k_mod(const Factorization& f, const Natural& k,
                    const Natural& modulus);

/// Number of divisors (product of e+1) and number of distinct prime factors.
Natural tau(const Natural& n);
Natural tau(const Factorization& f);
unsigned omega(const Natural& n);

/// Aliquot map s(n) = sigma(n) - n.
Natural aliquot_s(const Natural& n, unsigned bit_cap = kDefaultBitCap);

/// Abundancy S(n) = sigma(n)/n as an exact reduced rational.
ExactRatio abundancy(const Natural& n);
ExactRatio abundancy(const Factorization& f, const Natural& n);

}  // namespace divsum

#endif  // DIVSUM_DIVISORS_HPP_
