#include "divsum/periodicity.hpp"

#include "divsum/primality.hpp"
#include "divsum/sieve.hpp"

namespace divsum {

namespace {

void require_at_least(const Natural& n, unsigned long min, const char* op) {
  if (n < min) {
    throw DomainError(std::string(op) + ": argument must be >= " +
                      std::to_string(min));
  }
}

}  // namespace

std::vector<Natural> residue_orbit_mod(const Natural& m, unsigned k_max,
                                       const Natural& modulus) {
  require_at_least(m, 2, "residue_orbit");
  const Factorization f = factor(m);
  std::vector<Natural> residues;
  residues.reserve(k_max);
  for (unsigned k = 1; k <= k_max; ++k) {
    residues.push_back(sigma_k_mod(f, Natural(k), modulus));
  }
  return residues;
}

std::vector<Natural> residue_orbit(const Natural& m, unsigned k_max) {
  return residue_orbit_mod(m, k_max, m);
}

PeriodDetection detect_period(std::span<const Natural> seq) {
  PeriodDetection result;
  if (seq.empty()) throw DomainError("detect_period: sequence is empty");
  const std::size_t n = seq.size();
  for (std::size_t preperiod = 0; preperiod + 1 < n; ++preperiod) {
    for (std::size_t period = 1; preperiod + period < n; ++period) {
      bool ok = true;
      for (std::size_t i = preperiod; i + period < n; ++i) {
        if (seq[i + period] != seq[i]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        result.preperiod = static_cast<unsigned>(preperiod);
        result.period = static_cast<unsigned>(period);
        return result;
      }
    }
  }
  result.preperiod = 0;
  result.period = std::nullopt;
  return result;
}

Natural lcm_exponent_L(const Natural& m) {
  require_at_least(m, 2, "lcm_exponent_L");
  Natural L(1);
  for (const auto& pp : factor(m)) {
    Natural e_plus_1(pp.exponent + 1);
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), e_plus_1.get_mpz_t());
  }
  return L;
}

PeriodReport period_report(const Natural& m, unsigned k_max, PeriodMode mode) {
  require_at_least(m, 2, "period_report");
  if (k_max < 1) throw DomainError("period_report: k_max must be >= 1");
  PeriodReport report;
  report.m = m;
  report.L = lcm_exponent_L(m);
  report.k_max = k_max;
  report.mode = mode;
  report.modulus = mode == PeriodMode::mod_m ? m : sigma(m);
  report.residues = residue_orbit_mod(m, k_max, report.modulus);

  const PeriodDetection detection = detect_period(report.residues);
  report.preperiod = detection.preperiod;
  report.period = detection.period;
  if (detection.period.has_value()) {
    report.period_divides_L =
        report.L % *detection.period == 0 ? DividesL::yes : DividesL::no;
  } else {
    report.period_divides_L = DividesL::not_applicable;
  }
  return report;
}

CongruenceCheck prime_power_congruence(const Natural& p, unsigned e,
                                       unsigned long k) {
  if (!is_prime(p)) {
    throw DomainError("prime_power_congruence: p must be prime");
  }
  if (e < 1) throw DomainError("prime_power_congruence: e must be >= 1");
  if (k < 1) throw DomainError("prime_power_congruence: k must be >= 1");

  CongruenceCheck check;
  Natural e_plus_1(e + 1);
  Natural kk(k);
  mpz_gcd(check.r.get_mpz_t(), kk.get_mpz_t(), e_plus_1.get_mpz_t());

  const Factorization prime_power{{p, e}};
  check.modulus = sigma(prime_power);
  check.lhs = sigma_k_mod(prime_power, kk, check.modulus);

  // r (p^(e+1) - 1) / (p^r - 1); exact because r divides e+1.
  Natural numerator;
  mpz_pow_ui(numerator.get_mpz_t(), p.get_mpz_t(), e + 1);
  numerator -= 1;
  Natural denominator;
  mpz_pow_ui(denominator.get_mpz_t(), p.get_mpz_t(), check.r.get_ui());
  denominator -= 1;
  Natural quotient;
  mpz_divexact(quotient.get_mpz_t(), numerator.get_mpz_t(),
               denominator.get_mpz_t());
  check.rhs = (check.r * quotient) % check.modulus;

  check.match = (check.lhs == check.rhs);
  check.divides = (check.lhs == 0);
  check.biconditional_held = ((check.r == 1) == check.divides);
  return check;
}

DivisibilityCheck sigma_divides_sigma_k(const Natural& m, unsigned long k) {
  require_at_least(m, 2, "sigma_divides_sigma_k");
  if (k < 1) throw DomainError("sigma_divides_sigma_k: k must be >= 1");
  DivisibilityCheck check;
  const Factorization f = factor(m);
  const Natural sig = sigma(f);
  check.divides = (sigma_k_mod(f, Natural(k), sig) == 0);
  Natural t = tau(f);
  Natural kk(k);
  mpz_gcd(check.gcd_k_tau.get_mpz_t(), kk.get_mpz_t(), t.get_mpz_t());
  return check;
}

FactorShapeReport factor_shape_mod_L(const Natural& p, const Natural& L,
                                     unsigned bit_cap) {
  if (!is_prime(p)) throw DomainError("factor_shape_mod_L: p must be prime");
  if (!is_prime(L)) throw DomainError("factor_shape_mod_L: L must be prime");
  if (!L.fits_uint_p()) {
    throw DomainError("factor_shape_mod_L: L is too large");
  }
  const unsigned exponent = static_cast<unsigned>(L.get_ui()) - 1;
  Natural power;
  mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), exponent);
  ensure_bit_cap(power, bit_cap, "factor_shape_mod_L");

  FactorShapeReport report;
  report.value = sigma(Factorization{{p, exponent}}, bit_cap);
  report.all_zero_or_one = true;
  for (const auto& pp : factor(report.value)) {
    FactorResidue fr;
    fr.q = pp.prime;
    fr.e = pp.exponent;
    fr.residue = pp.prime % L;
    if (fr.residue != 0 && fr.residue != 1) report.all_zero_or_one = false;
    report.factors.push_back(std::move(fr));
  }
  return report;
}

std::vector<MultiperfectHit> multiperfect_L_scan(std::uint64_t bound,
                                                 const ScanConfig& config) {
  if (bound < 2) throw DomainError("multiperfect_L_scan: bound must be >= 2");
  if (bound > kMaxSieveBound) {
    throw DomainError("multiperfect_L_scan: bound exceeds sieve limit");
  }
  const std::size_t blocks = block_count(bound, config.block_size);
  auto per_block = [&](std::size_t index) {
    auto [first, last] = block_range(index, bound, config.block_size);
    std::vector<std::uint64_t> sigma_values(last - first + 1);
    sigma_block(first, sigma_values);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> hits;
    for (std::uint64_t n = std::max<std::uint64_t>(first, 2); n <= last; ++n) {
      const std::uint64_t s = sigma_values[n - first];
      if (s % n == 0) hits.emplace_back(n, s / n);
    }
    return hits;
  };
  auto block_hits =
      ordered_block_map<std::vector<std::pair<std::uint64_t, std::uint64_t>>>(
          blocks, config.workers, per_block);

  std::vector<MultiperfectHit> result;
  for (const auto& hits : block_hits) {
    for (const auto& [m, ratio] : hits) {
      MultiperfectHit hit;
      hit.m = m;
      hit.ratio = ratio;
      hit.L = lcm_exponent_L(Natural(static_cast<unsigned long>(m)));
      hit.L_is_prime = is_prime(hit.L);
      result.push_back(std::move(hit));
    }
  }
  return result;
}

}  // namespace divsum
