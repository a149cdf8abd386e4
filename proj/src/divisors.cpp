#include "divsum/divisors.hpp"

namespace divsum {

namespace {

void require_positive(const Natural& n, const char* op) {
  if (n < 1) throw DomainError(std::string(op) + ": n must be >= 1");
}

}  // namespace

Natural sigma(const Factorization& f, unsigned bit_cap) {
  Natural result(1);
  Natural power;
  for (const auto& pp : f) {
    // (p^(e+1) - 1) / (p - 1)
    mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent + 1);
    power -= 1;
    Natural pm1 = pp.prime - 1;
    mpz_divexact(power.get_mpz_t(), power.get_mpz_t(), pm1.get_mpz_t());
    result *= power;
    ensure_bit_cap(result, bit_cap, "sigma");
  }
  return result;
}

Natural sigma(const Natural& n, unsigned bit_cap) {
  require_positive(n, "sigma");
  return sigma(factor(n), bit_cap);
}

Natural sigma_k(const Factorization& f, unsigned long k, unsigned bit_cap) {
  if (k == 0) return tau(f);
  if (k == 1) return sigma(f, bit_cap);
  Natural result(1);
  for (const auto& pp : f) {
    Natural pk;
    mpz_pow_ui(pk.get_mpz_t(), pp.prime.get_mpz_t(), k);
    ensure_bit_cap(pk, bit_cap, "sigma_k");
    // 1 + p^k + p^2k + ... + p^ek by Horner.
    Natural term(1);
    for (unsigned j = 0; j < pp.exponent; ++j) {
      term = term * pk + 1;
      ensure_bit_cap(term, bit_cap, "sigma_k");
    }
    result *= term;
    ensure_bit_cap(result, bit_cap, "sigma_k");
  }
  return result;
}

Natural sigma_k(const Natural& n, unsigned long k, unsigned bit_cap) {
  require_positive(n, "sigma_k");
  return sigma_k(factor(n), k, bit_cap);
}

Natural sigma_k_mod(const Factorization& f, const Natural& k,
                    const Natural& modulus) {
  if (modulus == 0) throw DomainError("sigma_k_mod: modulus must be >= 1");
  Natural result(1);
  Natural pj, exponent;
  for (const auto& pp : f) {
    Natural term(0);
    for (unsigned j = 0; j <= pp.exponent; ++j) {
      exponent = k * j;
      mpz_powm(pj.get_mpz_t(), pp.prime.get_mpz_t(), exponent.get_mpz_t(),
               modulus.get_mpz_t());
      term += pj;
    }
    result = (result * term) % modulus;
  }
  return result % modulus;
}

Natural tau(const Factorization& f) {
  Natural result(1);
  for (const auto& pp : f) result *= pp.exponent + 1;
  return result;
}

Natural tau(const Natural& n) {
  require_positive(n, "tau");
  return tau(factor(n));
}

unsigned omega(const Natural& n) {
  require_positive(n, "omega");
  return static_cast<unsigned>(factor(n).size());
}

Natural aliquot_s(const Natural& n, unsigned bit_cap) {
  require_positive(n, "aliquot_s");
  return sigma(n, bit_cap) - n;
}

ExactRatio abundancy(const Factorization& f, const Natural& n) {
  return make_ratio(sigma(f), n);
}

ExactRatio abundancy(const Natural& n) {
  require_positive(n, "abundancy");
  return make_ratio(sigma(n), n);
}

}  // namespace divsum
