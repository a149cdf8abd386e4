#ifndef DIVSUM_DYNAMICS_HPP_
#define DIVSUM_DYNAMICS_HPP_

#include <optional>
#include <vector>

#include "divsum/divisors.hpp"
#include "divsum/factor_cache.hpp"
#include "divsum/natural.hpp"

namespace divsum {

enum class OrbitMap { sigma_iterate, aliquot };
enum class OrbitStop { reached_max_k, hit_bit_cap, reached_zero, entered_cycle };

const char* orbit_map_name(OrbitMap m);
const char* orbit_stop_name(OrbitStop s);

struct OrbitEntry {
  unsigned k = 0;
  Natural value;
  Natural value_mod_start;
};

/// One iteration run: values, residues mod the start, consecutive growth
/// ratios, and why it stopped. entries[0] is always (0, start, ...).
struct SigmaOrbit {
  Natural start;
  OrbitMap map_kind = OrbitMap::sigma_iterate;
  std::vector<OrbitEntry> entries;
  std::vector<ExactRatio> ratios;  // entries[k].value / entries[k-1].value
  OrbitStop stop = OrbitStop::reached_max_k;
};

/// k-fold iterate of sigma. Strictly increasing for start >= 2; never cycles,
/// so it runs to max_k unless a value would exceed the bit cap.
SigmaOrbit iterate_sigma(const Natural& n, unsigned max_k, unsigned bit_cap,
                         FactorCache* cache = nullptr);

/// Aliquot sequence s, s^2, ... Stops at zero, on revisiting any earlier
/// value, at max_k, or at the bit cap.
SigmaOrbit aliquot_sequence(const Natural& n, unsigned max_k, unsigned bit_cap,
                            FactorCache* cache = nullptr);

struct GcdChainTerm {
  unsigned k = 0;
  Natural m_k;  // sigma iterate
  Natural g_k;  // gcd(g_{k-1}, m_k)
};

/// g_0 = m_0 = m, m_{k+1} = sigma(m_k), g_{k+1} = gcd(g_k, m_{k+1}).
/// The g's form a divisibility ladder: each g_{k+1} divides g_k.
struct GcdChain {
  Natural m;
  std::vector<GcdChainTerm> terms;
  std::optional<bool> g3_below_m;  // set once the chain reaches k = 3
};

GcdChain gcd_chain(const Natural& m, unsigned max_k,
                   unsigned bit_cap = kDefaultBitCap,
                   FactorCache* cache = nullptr);

/// Smallest k >= 1 with sigma^k(m) = 0 (mod m), or the cap that stopped the
/// search. The orbit is kept so callers can verify minimality of k.
struct CtrOutcome {
  std::optional<unsigned> found_k;
  OrbitStop stop = OrbitStop::reached_max_k;  // cap hit when undetermined
  SigmaOrbit orbit;
};

CtrOutcome cohen_te_riele(const Natural& m, unsigned max_k, unsigned bit_cap,
                          FactorCache* cache = nullptr);

/// One row of a batch Cohen-te Riele table.
struct CtrRow {
  Natural m;
  std::optional<unsigned> found_k;
  OrbitStop stop = OrbitStop::reached_max_k;
};

/// cohen_te_riele for every m in [lo, hi], the searches partitioned across
/// workers and merged in ascending m, so the table is independent of the
/// worker count.
std::vector<CtrRow> cohen_te_riele_range(const Natural& lo, const Natural& hi,
                                         unsigned max_k, unsigned bit_cap,
                                         unsigned workers = 0,
                                         FactorCache* cache = nullptr);

/// S(S(m)m) < S(m)S(S(m)), checked in exact rationals. Only applies when
/// S(m) is an integer, i.e. m is multiperfect.
enum class CruxVerdict { holds, fails, inapplicable };
CruxVerdict crux_inequality_check(const Natural& m,
                                  FactorCache* cache = nullptr);
const char* crux_verdict_name(CruxVerdict v);

/// Smallest m <= search_bound whose aliquot iterates strictly increase
/// through index k: s^0(m) < s(m) < ... < s^k(m).
std::optional<Natural> lenstra_chain_min_m(unsigned k,
                                           const Natural& search_bound,
                                           FactorCache* cache = nullptr);

/// Per-index verdicts of (1-delta) m (s(m)/m)^i < s^i(m) < (1+delta) m
/// (s(m)/m)^i for i = 1..k, all in exact rationals. truncated is set when the
/// aliquot orbit reaches zero before index k.
struct ErdosBoundsReport {
  std::vector<bool> holds;  // holds[i-1] is the verdict at index i
  bool truncated = false;
};

ErdosBoundsReport erdos_bounds_check(const Natural& m, unsigned k,
                                     const ExactRatio& delta,
                                     unsigned bit_cap = kDefaultBitCap,
                                     FactorCache* cache = nullptr);

}  // namespace divsum

#endif  // DIVSUM_DYNAMICS_HPP_
