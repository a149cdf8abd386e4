#include "divsum/primality.hpp"

#include <array>

namespace divsum {

namespace {

// Strong probable-prime test to base a. n must be odd, n > 2, with
// n - 1 = d * 2^s precomputed.
bool strong_probable_prime(const Natural& n, unsigned long a, const Natural& d,
                           unsigned long s) {
  Natural base(a);
  if (base >= n) {
    base %= n;
    if (base == 0) return true;  // a is a multiple of n; no information
  }
  Natural x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  Natural n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

// First 12 witnesses decide n < 3,317,044,064,679,887,385,961,981.
constexpr std::array<unsigned long, 12> kCoreWitnesses = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr std::array<unsigned long, 13> kExtraWitnesses = {
    41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

const Natural& deterministic_bound() {
  static const Natural bound("3317044064679887385961981");
  return bound;
}

}  // namespace

bool is_prime(const Natural& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;

  Natural d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  for (unsigned long a : kCoreWitnesses) {
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  if (n >= deterministic_bound()) {
    for (unsigned long a : kExtraWitnesses) {
      if (!strong_probable_prime(n, a, d, s)) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> sieve_primes(std::uint32_t bound) {
  std::vector<std::uint32_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t m = p * p; m <= bound; m += p) composite[m] = true;
  }
  return primes;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> table = sieve_primes(1'000'000);
  return table;
}

}  // namespace divsum
