#include "divsum/factorization.hpp"

#include <algorithm>
#include <map>

#include "divsum/primality.hpp"

namespace divsum {

namespace {

// Brent's variant of Pollard rho with f(x) = x^2 + c, batched gcds.
// Returns a nontrivial factor of n, or 0 if this (c, budget) attempt failed.
// Everything is fixed up front, so repeated runs walk the same path.
Natural pollard_brent(const Natural& n, unsigned long c,
                      unsigned long max_steps) {
  const Natural cn(c);
  Natural y(2), x, q(1), g(1), ys;
  const unsigned long batch = 128;
  unsigned long r = 1;
  unsigned long steps = 0;

  auto step = [&](Natural& v) { v = (v * v + cn) % n; };

  while (g == 1 && steps < max_steps) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      const unsigned long lim = std::min(batch, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        step(y);
        Natural diff = x > y ? x - y : y - x;
        q = (q * diff) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += lim;
      steps += lim;
    }
    r *= 2;
  }
  if (g == n) {
    // Backtrack one step at a time to recover the factor the batch skipped.
    do {
      step(ys);
      Natural diff = x > ys ? x - ys : ys - x;
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n || g == 1) return Natural(0);
  return g;
}

void factor_recursive(const Natural& n, std::map<Natural, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  // Perfect powers trip up rho, so peel them off first.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2; k <= bit_length(n); ++k) {
      Natural root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<Natural, unsigned> base;
        factor_recursive(root, base);
        for (const auto& [p, e] : base) out[p] += e * static_cast<unsigned>(k);
        return;
      }
    }
  }
  for (unsigned long c = 1; c <= 64; ++c) {
    Natural d = pollard_brent(n, c, 1ul << 26);
    if (d != 0) {
      factor_recursive(d, out);
      factor_recursive(n / d, out);
      return;
    }
  }
  throw std::runtime_error("factorization stalled on " + to_decimal(n));
}

}  // namespace

Factorization factor(const Natural& n) {
  if (n < 1) throw DomainError("factor: n must be >= 1");

  std::map<Natural, unsigned> found;
  Natural remaining = n;
  for (std::uint32_t p : small_primes()) {
    Natural pp(p);
    if (pp * pp > remaining) break;
    if (mpz_divisible_ui_p(remaining.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(remaining.get_mpz_t(), remaining.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(remaining.get_mpz_t(), p));
      found[pp] = e;
    }
  }
  factor_recursive(remaining, found);

  Factorization result;
  result.reserve(found.size());
  for (auto& [p, e] : found) result.push_back({p, e});
  return result;
}

Natural unfactor(const Factorization& f) {
  Natural product(1);
  Natural power;
  for (const auto& pp : f) {
    mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    product *= power;
  }
  return product;
}

bool is_valid_factorization(const Factorization& f, const Natural& value) {
  Natural previous(0);
  for (const auto& pp : f) {
    if (pp.exponent == 0) return false;
    if (pp.prime <= previous) return false;
    if (!is_prime(pp.prime)) return false;
    previous = pp.prime;
  }
  return unfactor(f) == value;
}

}  // namespace divsum
