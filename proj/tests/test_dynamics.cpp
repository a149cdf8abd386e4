#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divsum/dynamics.hpp"

using namespace divsum;

namespace {

// Oracle sigma via direct divisor enumeration, for values that fit uint64.
std::uint64_t sigma_by_enumeration(std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += d;
    if (n / d != d) total += n / d;
  }
  return total;
}

std::vector<std::uint64_t> orbit_values_u64(const SigmaOrbit& orbit) {
  std::vector<std::uint64_t> values;
  for (const auto& e : orbit.entries) values.push_back(e.value.get_ui());
  return values;
}

}  // namespace

TEST_CASE("iterate_sigma: sigma^32(2) regression") {
  const SigmaOrbit orbit = iterate_sigma(Natural(2), 32, 4096);
  REQUIRE(orbit.entries.size() == 33);
  CHECK(orbit.entries[0].value == 2);
  CHECK(orbit.entries[32].value == Natural("564210119465811"));
  CHECK(orbit.stop == OrbitStop::reached_max_k);

  // Every step is sigma of the previous one, cross-checked by enumeration.
  for (std::size_t i = 1; i < orbit.entries.size(); ++i) {
    const std::uint64_t prev = orbit.entries[i - 1].value.get_ui();
    REQUIRE(orbit.entries[i].value ==
            Natural(static_cast<unsigned long>(sigma_by_enumeration(prev))));
  }
}

TEST_CASE("iterate_sigma: fixed point at 1") {
  const SigmaOrbit orbit = iterate_sigma(Natural(1), 5, 4096);
  REQUIRE(orbit.entries.size() == 6);
  for (const auto& e : orbit.entries) CHECK(e.value == 1);
  CHECK(orbit.stop == OrbitStop::reached_max_k);
}

TEST_CASE("iterate_sigma: 5-perfect start") {
  const Natural m("13188979363639752997731839211623940096");
  const SigmaOrbit orbit = iterate_sigma(m, 2, 4096);
  REQUIRE(orbit.entries.size() == 3);
  CHECK(orbit.entries[1].value == 5 * m);
  CHECK(orbit.entries[2].value == 30 * m);
  CHECK(orbit.entries[1].value_mod_start == 0);
  CHECK(orbit.entries[2].value_mod_start == 0);
}

TEST_CASE("iterate_sigma: ratios and bit cap") {
  const SigmaOrbit orbit = iterate_sigma(Natural(2), 4, 4096);
  REQUIRE(orbit.ratios.size() == 4);
  // 2 -> 3 -> 4 -> 7 -> 8
  CHECK(orbit.ratios[0] == make_ratio(Natural(3), Natural(2)));
  CHECK(orbit.ratios[1] == make_ratio(Natural(4), Natural(3)));
  CHECK(orbit.ratios[2] == make_ratio(Natural(7), Natural(4)));
  CHECK(orbit.ratios[3] == make_ratio(Natural(8), Natural(7)));

  const SigmaOrbit capped = iterate_sigma(Natural(2), 100000, 64);
  CHECK(capped.stop == OrbitStop::hit_bit_cap);
  CHECK(capped.entries.size() < 100001);
  CHECK(bit_length(capped.entries.back().value) <= 64);

  CHECK_THROWS_AS(iterate_sigma(Natural(0), 5, 4096), DomainError);
}

TEST_CASE("aliquot_sequence: perfect number cycles immediately") {
  const SigmaOrbit orbit = aliquot_sequence(Natural(6), 10, 4096);
  CHECK(orbit.stop == OrbitStop::entered_cycle);
  REQUIRE(orbit.entries.size() == 2);
  CHECK(orbit.entries[1].value == 6);
}

TEST_CASE("aliquot_sequence: 12 terminates at zero") {
  const SigmaOrbit orbit = aliquot_sequence(Natural(12), 10, 4096);
  CHECK(orbit.stop == OrbitStop::reached_zero);
  CHECK(orbit_values_u64(orbit) ==
        std::vector<std::uint64_t>{12, 16, 15, 9, 4, 3, 1, 0});
}

TEST_CASE("aliquot_sequence: start at 1") {
  const SigmaOrbit orbit = aliquot_sequence(Natural(1), 10, 4096);
  CHECK(orbit.stop == OrbitStop::reached_zero);
  CHECK(orbit_values_u64(orbit) == std::vector<std::uint64_t>{1, 0});
}

TEST_CASE("aliquot_sequence: amicable pair cycles") {
  const SigmaOrbit orbit = aliquot_sequence(Natural(220), 10, 4096);
  CHECK(orbit.stop == OrbitStop::entered_cycle);
  CHECK(orbit_values_u64(orbit) == std::vector<std::uint64_t>{220, 284, 220});
}

TEST_CASE("gcd_chain examples") {
  const GcdChain six = gcd_chain(Natural(6), 3);
  REQUIRE(six.terms.size() == 4);
  CHECK(six.terms[0].g_k == 6);
  CHECK(six.terms[1].g_k == 6);
  CHECK(six.terms[2].g_k == 2);
  CHECK(six.terms[3].g_k == 2);
  CHECK(six.terms[1].m_k == 12);
  CHECK(six.terms[2].m_k == 28);
  CHECK(six.terms[3].m_k == 56);
  REQUIRE(six.g3_below_m.has_value());
  CHECK(*six.g3_below_m);

  const GcdChain prime = gcd_chain(Natural(13), 1);
  REQUIRE(prime.terms.size() == 2);
  CHECK(prime.terms[1].g_k == 1);

  const Natural m("13188979363639752997731839211623940096");
  const GcdChain five_perfect = gcd_chain(m, 2);
  REQUIRE(five_perfect.terms.size() == 3);
  CHECK(five_perfect.terms[1].g_k == m);
  CHECK(five_perfect.terms[2].g_k == m);

  CHECK_THROWS_AS(gcd_chain(Natural(1), 3), DomainError);
}

TEST_CASE("property: gcd chain is a divisibility ladder") {
  for (std::uint64_t m = 2; m <= 1000; ++m) {
    const GcdChain chain = gcd_chain(Natural(static_cast<unsigned long>(m)), 4);
    for (std::size_t i = 1; i < chain.terms.size(); ++i) {
      REQUIRE(chain.terms[i - 1].g_k % chain.terms[i].g_k == 0);
    }
  }
}

TEST_CASE("cohen_te_riele examples") {
  const CtrOutcome two = cohen_te_riele(Natural(2), 50, 4096);
  REQUIRE(two.found_k.has_value());
  CHECK(*two.found_k == 2);

  const CtrOutcome three = cohen_te_riele(Natural(3), 50, 4096);
  REQUIRE(three.found_k.has_value());
  CHECK(*three.found_k == 4);

  const CtrOutcome six = cohen_te_riele(Natural(6), 50, 4096);
  REQUIRE(six.found_k.has_value());
  CHECK(*six.found_k == 1);

  CHECK_THROWS_AS(cohen_te_riele(Natural(1), 50, 4096), DomainError);
}

TEST_CASE("cohen_te_riele: found k is minimal (verified from the orbit)") {
  for (std::uint64_t m = 2; m <= 50; ++m) {
    const CtrOutcome outcome =
        cohen_te_riele(Natural(static_cast<unsigned long>(m)), 50, 4096);
    if (!outcome.found_k.has_value()) continue;
    for (unsigned j = 1; j < *outcome.found_k; ++j) {
      REQUIRE(outcome.orbit.entries[j].value_mod_start != 0);
    }
    REQUIRE(outcome.orbit.entries[*outcome.found_k].value_mod_start == 0);
  }
}

TEST_CASE("cohen_te_riele: undetermined reports which cap stopped it") {
  const CtrOutcome iter_capped = cohen_te_riele(Natural(5), 1, 4096);
  CHECK_FALSE(iter_capped.found_k.has_value());
  CHECK(iter_capped.stop == OrbitStop::reached_max_k);

  // Orbit of 5: 6, 12, 28, 56, 120; 120 would be the hit (k=5) but needs
  // 7 bits, so a 6-bit cap stops the search first.
  const CtrOutcome bit_capped = cohen_te_riele(Natural(5), 50, 6);
  CHECK_FALSE(bit_capped.found_k.has_value());
  CHECK(bit_capped.stop == OrbitStop::hit_bit_cap);
}

TEST_CASE("crux inequality") {
  CHECK(crux_inequality_check(Natural(6)) == CruxVerdict::holds);
  CHECK(crux_inequality_check(Natural(10)) == CruxVerdict::inapplicable);
  CHECK(crux_inequality_check(Natural(28)) == CruxVerdict::holds);
}

TEST_CASE("lenstra_chain_min_m") {
  auto one = lenstra_chain_min_m(1, Natural(100));
  REQUIRE(one.has_value());
  CHECK(*one == 12);

  auto two = lenstra_chain_min_m(2, Natural(100));
  REQUIRE(two.has_value());
  CHECK(*two == 24);

  CHECK_FALSE(lenstra_chain_min_m(1, Natural(10)).has_value());
}

TEST_CASE("erdos_bounds_check") {
  // i = 1 always holds: the bounds reduce to s(m)(1 -/+ delta) around s(m).
  for (std::uint64_t m : {4, 12, 24, 100}) {
    const auto report = erdos_bounds_check(
        Natural(static_cast<unsigned long>(m)), 1,
        make_ratio(Natural(1), Natural(1000)));
    REQUIRE(report.holds.size() == 1);
    CHECK(report.holds[0]);
  }

  // s(12) = 16, s^2(12) = 15 against (1 -/+ 1/10) 12 (16/12)^2 = 19.2 / 23.46.
  const auto twelve = erdos_bounds_check(Natural(12), 2,
                                         make_ratio(Natural(1), Natural(10)));
  REQUIRE(twelve.holds.size() == 2);
  CHECK(twelve.holds[0]);
  CHECK_FALSE(twelve.holds[1]);
  CHECK_FALSE(twelve.truncated);

  // s(24) = 36, s^2(24) = 55 against (1 -/+ 1/2) 24 (3/2)^2 = 27 / 81.
  const auto twenty_four = erdos_bounds_check(
      Natural(24), 2, make_ratio(Natural(1), Natural(2)));
  REQUIRE(twenty_four.holds.size() == 2);
  CHECK(twenty_four.holds[0]);
  CHECK(twenty_four.holds[1]);

  // The aliquot orbit of 12 reaches 0 at index 7; asking for more truncates.
  const auto truncated = erdos_bounds_check(
      Natural(12), 8, make_ratio(Natural(1), Natural(2)));
  CHECK(truncated.truncated);
  CHECK(truncated.holds.size() == 7);

  CHECK_THROWS_AS(
      erdos_bounds_check(Natural(12), 2, make_ratio(Natural(0), Natural(1))),
      DomainError);
}

TEST_CASE("property: sigma iterates strictly increase for n >= 2") {
  for (std::uint64_t n = 2; n <= 500; ++n) {
    const SigmaOrbit orbit =
        iterate_sigma(Natural(static_cast<unsigned long>(n)), 10, 4096);
    REQUIRE(orbit.entries.size() == 11);
    for (std::size_t i = 1; i < orbit.entries.size(); ++i) {
      REQUIRE(orbit.entries[i].value > orbit.entries[i - 1].value);
    }
  }
}

TEST_CASE("property: repeated runs are identical, including stop reasons") {
  for (std::uint64_t n : {2, 12, 220, 276}) {
    const Natural nn(static_cast<unsigned long>(n));
    const SigmaOrbit a = aliquot_sequence(nn, 15, 256);
    const SigmaOrbit b = aliquot_sequence(nn, 15, 256);
    REQUIRE(a.stop == b.stop);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      REQUIRE(a.entries[i].value == b.entries[i].value);
    }
  }
}

TEST_CASE("orbit shared factor cache changes nothing") {
  FactorCache cache;
  const SigmaOrbit cached = iterate_sigma(Natural(2), 20, 4096, &cache);
  const SigmaOrbit plain = iterate_sigma(Natural(2), 20, 4096);
  REQUIRE(cached.entries.size() == plain.entries.size());
  for (std::size_t i = 0; i < cached.entries.size(); ++i) {
    REQUIRE(cached.entries[i].value == plain.entries[i].value);
  }
  CHECK(cache.size() > 0);
}
