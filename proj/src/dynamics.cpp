#include "divsum/dynamics.hpp"

#include <set>

#include "divsum/parallel.hpp"

namespace divsum {

namespace {

void require_at_least(const Natural& n, unsigned long min, const char* op) {
  if (n < min) {
    throw DomainError(std::string(op) + ": argument must be >= " +
                      std::to_string(min));
  }
}

Natural mod_start(const Natural& value, const Natural& start) {
  return value % start;
}

void push_entry(SigmaOrbit& orbit, unsigned k, Natural value) {
  OrbitEntry e;
  e.k = k;
  e.value_mod_start = mod_start(value, orbit.start);
  e.value = std::move(value);
  if (!orbit.entries.empty()) {
    const Natural& prev = orbit.entries.back().value;
    if (prev != 0) {
      orbit.ratios.push_back(make_ratio(e.value, prev));
    }
  }
  orbit.entries.push_back(std::move(e));
}

}  // namespace

const char* orbit_map_name(OrbitMap m) {
  return m == OrbitMap::sigma_iterate ? "sigma-iterate" : "aliquot";
}

const char* orbit_stop_name(OrbitStop s) {
  switch (s) {
    case OrbitStop::reached_max_k: return "reached_max_k";
    case OrbitStop::hit_bit_cap: return "hit_bit_cap";
    case OrbitStop::reached_zero: return "reached_zero";
    case OrbitStop::entered_cycle: return "entered_cycle";
  }
  return "unknown";
}

SigmaOrbit iterate_sigma(const Natural& n, unsigned max_k, unsigned bit_cap,
                         FactorCache* cache) {
  require_at_least(n, 1, "iterate_sigma");
  SigmaOrbit orbit;
  orbit.start = n;
  orbit.map_kind = OrbitMap::sigma_iterate;
  push_entry(orbit, 0, n);

  Natural current = n;
  for (unsigned k = 1; k <= max_k; ++k) {
    Natural next = sigma(factor_via(cache, current), bit_cap + 64);
    if (bit_length(next) > bit_cap) {
      orbit.stop = OrbitStop::hit_bit_cap;
      return orbit;
    }
    push_entry(orbit, k, next);
    current = std::move(next);
  }
  orbit.stop = OrbitStop::reached_max_k;
  return orbit;
}

SigmaOrbit aliquot_sequence(const Natural& n, unsigned max_k, unsigned bit_cap,
                            FactorCache* cache) {
  require_at_least(n, 1, "aliquot_sequence");
  SigmaOrbit orbit;
  orbit.start = n;
  orbit.map_kind = OrbitMap::aliquot;
  push_entry(orbit, 0, n);

  std::set<Natural> seen{n};
  Natural current = n;
  for (unsigned k = 1; k <= max_k; ++k) {
    Natural next = sigma(factor_via(cache, current), bit_cap + 64) - current;
    if (bit_length(next) > bit_cap) {
      orbit.stop = OrbitStop::hit_bit_cap;
      return orbit;
    }
    push_entry(orbit, k, next);
    if (next == 0) {
      orbit.stop = OrbitStop::reached_zero;
      return orbit;
    }
    if (!seen.insert(next).second) {
      orbit.stop = OrbitStop::entered_cycle;
      return orbit;
    }
    current = std::move(next);
  }
  orbit.stop = OrbitStop::reached_max_k;
  return orbit;
}

GcdChain gcd_chain(const Natural& m, unsigned max_k, unsigned bit_cap,
                   FactorCache* cache) {
  require_at_least(m, 2, "gcd_chain");
  GcdChain chain;
  chain.m = m;
  chain.terms.push_back({0, m, m});

  Natural m_k = m;
  Natural g_k = m;
  for (unsigned k = 1; k <= max_k; ++k) {
    Natural next = sigma(factor_via(cache, m_k), bit_cap + 64);
    if (bit_length(next) > bit_cap) break;
    m_k = std::move(next);
    Natural g;
    mpz_gcd(g.get_mpz_t(), g_k.get_mpz_t(), m_k.get_mpz_t());
    g_k = std::move(g);
    chain.terms.push_back({k, m_k, g_k});
    if (k == 3) chain.g3_below_m = (g_k < m);
  }
  return chain;
}

CtrOutcome cohen_te_riele(const Natural& m, unsigned max_k, unsigned bit_cap,
                          FactorCache* cache) {
  require_at_least(m, 2, "cohen_te_riele");
  CtrOutcome outcome;
  outcome.orbit.start = m;
  outcome.orbit.map_kind = OrbitMap::sigma_iterate;
  push_entry(outcome.orbit, 0, m);

  Natural current = m;
  for (unsigned k = 1; k <= max_k; ++k) {
    Natural next = sigma(factor_via(cache, current), bit_cap + 64);
    if (bit_length(next) > bit_cap) {
      outcome.stop = OrbitStop::hit_bit_cap;
      return outcome;
    }
    push_entry(outcome.orbit, k, next);
    if (outcome.orbit.entries.back().value_mod_start == 0) {
      outcome.found_k = k;
      outcome.stop = OrbitStop::reached_max_k;
      return outcome;
    }
    current = std::move(next);
  }
  outcome.stop = OrbitStop::reached_max_k;
  return outcome;
}

std::vector<CtrRow> cohen_te_riele_range(const Natural& lo, const Natural& hi,
                                         unsigned max_k, unsigned bit_cap,
                                         unsigned workers, FactorCache* cache) {
  require_at_least(lo, 2, "cohen_te_riele_range");
  if (hi < lo) throw DomainError("cohen_te_riele_range: empty range");
  Natural count = hi - lo + 1;
  if (!count.fits_ulong_p()) {
    throw DomainError("cohen_te_riele_range: range is too large");
  }
  const std::size_t n = count.get_ui();
  return ordered_block_map<CtrRow>(n, workers, [&](std::size_t index) {
    const Natural m = lo + Natural(static_cast<unsigned long>(index));
    const CtrOutcome outcome = cohen_te_riele(m, max_k, bit_cap, cache);
    return CtrRow{m, outcome.found_k, outcome.stop};
  });
}

const char* crux_verdict_name(CruxVerdict v) {
  switch (v) {
    case CruxVerdict::holds: return "holds";
    case CruxVerdict::fails: return "fails";
    case CruxVerdict::inapplicable: return "inapplicable";
  }
  return "unknown";
}

CruxVerdict crux_inequality_check(const Natural& m, FactorCache* cache) {
  require_at_least(m, 2, "crux_inequality_check");
  const Natural sig_m = sigma(factor_via(cache, m));
  if (sig_m % m != 0) return CruxVerdict::inapplicable;
  const Natural s_of_m = sig_m / m;  // S(m), an integer here

  // Left: S(S(m) * m). Right: S(m) * S(S(m)).
  const Natural product = s_of_m * m;
  const ExactRatio lhs = abundancy(factor_via(cache, product), product);
  ExactRatio rhs = abundancy(factor_via(cache, s_of_m), s_of_m);
  rhs *= ExactRatio(s_of_m);
  return lhs < rhs ? CruxVerdict::holds : CruxVerdict::fails;
}

std::optional<Natural> lenstra_chain_min_m(unsigned k,
                                           const Natural& search_bound,
                                           FactorCache* cache) {
  if (k < 1) throw DomainError("lenstra_chain_min_m: k must be >= 1");
  for (Natural m(2); m <= search_bound; ++m) {
    Natural prev = m;
    bool increasing = true;
    for (unsigned i = 1; i <= k; ++i) {
      Natural next = sigma(factor_via(cache, prev)) - prev;
      if (next <= prev) {
        increasing = false;
        break;
      }
      prev = std::move(next);
    }
    if (increasing) return m;
  }
  return std::nullopt;
}

ErdosBoundsReport erdos_bounds_check(const Natural& m, unsigned k,
                                     const ExactRatio& delta,
                                     unsigned bit_cap, FactorCache* cache) {
  require_at_least(m, 2, "erdos_bounds_check");
  if (delta <= 0) {
    throw DomainError("erdos_bounds_check: delta must be positive");
  }
  ErdosBoundsReport report;
  const Natural s1 = sigma(factor_via(cache, m), bit_cap) - m;
  if (s1 == 0) {
    report.truncated = true;
    return report;
  }
  const ExactRatio base_ratio = make_ratio(s1, m);  // s(m)/m
  const ExactRatio lower_coeff = ExactRatio(1) - delta;
  const ExactRatio upper_coeff = ExactRatio(1) + delta;

  Natural iterate = s1;
  ExactRatio ratio_power(1);
  for (unsigned i = 1; i <= k; ++i) {
    ratio_power *= base_ratio;
    ExactRatio scaled = ratio_power * ExactRatio(m);
    const ExactRatio lower = lower_coeff * scaled;
    const ExactRatio upper = upper_coeff * scaled;
    const ExactRatio value{iterate};
    report.holds.push_back(lower < value && value < upper);
    if (i == k) break;
    if (iterate == 0) {
      report.truncated = true;
      break;
    }
    iterate = sigma(factor_via(cache, iterate), bit_cap) - iterate;
  }
  return report;
}

}  // namespace divsum
