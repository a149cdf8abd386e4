#ifndef DIVSUM_PERIODICITY_HPP_
#define DIVSUM_PERIODICITY_HPP_

#include <optional>
#include <span>
#include <vector>

#include "divsum/divisors.hpp"
#include "divsum/natural.hpp"
#include "divsum/parallel.hpp"

namespace divsum {

/// sigma_k(m) mod m for k = 1..k_max. m >= 2.
std::vector<Natural> residue_orbit(const Natural& m, unsigned k_max);

/// Same orbit reduced by an arbitrary modulus (used for the mod-sigma(m)
/// variant of the period report).
std::vector<Natural> residue_orbit_mod(const Natural& m, unsigned k_max,
                                       const Natural& modulus);

struct PeriodDetection {
  unsigned preperiod = 0;
  std::optional<unsigned> period;
};

/// Smallest (preperiod, period), in that priority, with seq[i + period] ==
/// seq[i] for every i >= preperiod inside the window. Reports only what the
/// window shows; it does not claim eventual periodicity.
PeriodDetection detect_period(std::span<const Natural> seq);

/// L = lcm of (exponent + 1) over the prime factorization of m. m >= 2.
Natural lcm_exponent_L(const Natural& m);

enum class PeriodMode { mod_m, mod_sigma };
enum class DividesL { yes, no, not_applicable };

struct PeriodReport {
  Natural m;
  Natural L;
  unsigned k_max = 0;
  PeriodMode mode = PeriodMode::mod_m;
  Natural modulus;
  std::vector<Natural> residues;  // k = 1..k_max
  unsigned preperiod = 0;
  std::optional<unsigned> period;
  DividesL period_divides_L = DividesL::not_applicable;
};

PeriodReport period_report(const Natural& m, unsigned k_max,
                           PeriodMode mode = PeriodMode::mod_m);

/// sigma_k(p^e) = r * (p^(e+1)-1)/(p^r-1) (mod sigma(p^e)) with
/// r = gcd(k, e+1); the division is exact before any reduction. Also checks
/// the biconditional r = 1 <=> sigma(p^e) | sigma_k(p^e).
struct CongruenceCheck {
  Natural r;
  Natural modulus;  // sigma(p^e)
  Natural lhs;      // sigma_k(p^e) mod sigma(p^e)
  Natural rhs;      // r (p^(e+1)-1)/(p^r-1) mod sigma(p^e)
  bool match = false;
  bool divides = false;             // sigma(p^e) | sigma_k(p^e)
  bool biconditional_held = false;  // (r == 1) == divides
};

CongruenceCheck prime_power_congruence(const Natural& p, unsigned e,
                                       unsigned long k);

struct DivisibilityCheck {
  bool divides = false;
  Natural gcd_k_tau;
};

/// Whether sigma(m) | sigma_k(m), together with gcd(k, tau(m)). The gcd
/// being 1 forces divides.
DivisibilityCheck sigma_divides_sigma_k(const Natural& m, unsigned long k);

struct FactorResidue {
  Natural q;        // prime factor of sigma(p^(L-1))
  unsigned e = 0;   // its exponent
  Natural residue;  // q mod L
};

struct FactorShapeReport {
  Natural value;  // sigma(p^(L-1))
  std::vector<FactorResidue> factors;
  bool all_zero_or_one = false;  // every residue is 0 or 1 mod L
};

/// Factors sigma(p^(L-1)) for primes p, L and reduces each prime factor
/// mod L. Throws BitCapExceeded when p^(L-1) would blow past the cap.
FactorShapeReport factor_shape_mod_L(const Natural& p, const Natural& L,
                                     unsigned bit_cap = kDefaultBitCap);

struct MultiperfectHit {
  std::uint64_t m = 0;
  std::uint64_t ratio = 0;  // sigma(m)/m, an integer by definition
  Natural L;
  bool L_is_prime = false;
};

/// All multiperfect m in [2, bound] (sigma(m) = 0 mod m), found with the
/// block sigma sieve and annotated with L and its primality.
std::vector<MultiperfectHit> multiperfect_L_scan(std::uint64_t bound,
                                                 const ScanConfig& config = {});

}  // namespace divsum

#endif  // DIVSUM_PERIODICITY_HPP_
