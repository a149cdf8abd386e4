#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "divsum/periodicity.hpp"
#include "divsum/stats.hpp"

using namespace divsum;

namespace {

std::vector<double> orbit_doubles(unsigned long m, unsigned k_max) {
  return residues_as_doubles(residue_orbit(Natural(m), k_max));
}

// Inverse normal CDF by bisection, for building model quantiles in tests.
double normal_quantile(double p, double mu, double sigma) {
  double lo = mu - 12 * sigma, hi = mu + 12 * sigma;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double cdf = 0.5 * std::erfc(-(mid - mu) / (sigma * std::sqrt(2.0)));
    (cdf < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("moments: alternating residue orbits hit the exact parameters") {
  const Moments six = moments(orbit_doubles(6, 1000));
  CHECK(six.mean == 1.0);
  CHECK(six.variance == 1.0);
  REQUIRE(six.skewness.has_value());
  CHECK(*six.skewness == 0.0);
  REQUIRE(six.excess_kurtosis.has_value());
  CHECK(*six.excess_kurtosis == -2.0);  // two-point symmetric distribution

  CHECK(moments(orbit_doubles(12, 1000)).mean == 5.0);
  CHECK(moments(orbit_doubles(12, 1000)).variance == 1.0);
  CHECK(moments(orbit_doubles(24, 1000)).mean == 11.0);
  CHECK(moments(orbit_doubles(24, 1000)).variance == 1.0);
}

TEST_CASE("moments: degenerate input") {
  const std::vector<double> constant(10, 3.5);
  const Moments m = moments(constant);
  CHECK(m.variance == 0.0);
  CHECK_FALSE(m.skewness.has_value());
  CHECK_FALSE(m.excess_kurtosis.has_value());

  CHECK_THROWS_AS(moments(std::vector<double>{1.0}), DomainError);
}

TEST_CASE("two-valued sequences: mean (a+b)/2 and variance ((b-a)/2)^2") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(-50, 50);
  for (int trial = 0; trial < 25; ++trial) {
    const double a = std::floor(dist(rng));
    const double b = std::floor(dist(rng)) + 101;  // distinct
    std::vector<double> data;
    for (int i = 0; i < 300; ++i) data.push_back(i % 2 == 0 ? a : b);
    const Moments m = moments(data);
    CHECK(m.mean == doctest::Approx((a + b) / 2).epsilon(1e-12));
    CHECK(m.variance ==
          doctest::Approx((b - a) * (b - a) / 4).epsilon(1e-12));
  }
}

TEST_CASE("ks_statistic: all data at the normal mean gives 0.5") {
  const std::vector<double> data(25, 2.0);
  CHECK(ks_statistic(data, NormalModel{2.0, 1.0}) == 0.5);
}

TEST_CASE("ks_statistic: model quantiles land within 1/n") {
  const std::size_t n = 100;
  std::vector<double> data;
  for (std::size_t i = 0; i < n; ++i) {
    data.push_back(normal_quantile((i + 0.5) / n, 3.0, 2.0));
  }
  const double d = ks_statistic(data, NormalModel{3.0, 2.0});
  CHECK(d <= 1.0 / n + 1e-9);
}

TEST_CASE("ks_statistic: residue orbit of 6 against the matched normal") {
  // 500 zeros and 500 twos against Normal(1,1): the sup is Phi(1) - 1/2 at
  // the jump, a frozen regression constant.
  const double d = ks_statistic(orbit_doubles(6, 1000), NormalModel{1.0, 1.0});
  CHECK(d == doctest::Approx(0.3413447460685429).epsilon(1e-12));
}

TEST_CASE("ks_statistic: exact two-point model fits the orbit exactly") {
  DiscreteUniformModel model;
  model.values = {0.0, 2.0};
  const double d = ks_statistic(orbit_doubles(6, 1000), model);
  CHECK(d == 0.0);
}

TEST_CASE("ks_statistic: domain errors and bounds") {
  CHECK_THROWS_AS(ks_statistic({}, NormalModel{0, 1}), DomainError);
  CHECK_THROWS_AS(
      ks_statistic(std::vector<double>{1.0}, NormalModel{0, 0}), DomainError);
  CHECK_THROWS_AS(
      ks_statistic(std::vector<double>{1.0}, DiscreteUniformModel{}),
      DomainError);

  std::mt19937_64 rng(3);
  std::normal_distribution<double> dist(0, 3);
  std::vector<double> data;
  for (int i = 0; i < 500; ++i) data.push_back(dist(rng));
  const double d = ks_statistic(data, NormalModel{0.0, 1.0});
  CHECK(d >= 0.0);
  CHECK(d <= 1.0);
}

TEST_CASE("linear_fit exact cases") {
  std::vector<double> xs, flat, line;
  for (int i = 1; i <= 50; ++i) {
    xs.push_back(i);
    flat.push_back(7.25);
    line.push_back(2.0 * i + 3.0);
  }
  const LinearFit constant = linear_fit(xs, flat);
  CHECK(constant.slope == 0.0);
  CHECK(constant.intercept == doctest::Approx(7.25).epsilon(1e-12));

  const LinearFit exact = linear_fit(xs, line);
  CHECK(exact.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(exact.intercept == doctest::Approx(3.0).epsilon(1e-12));

  const std::vector<double> degenerate(50, 1.0);
  CHECK_THROWS_AS(linear_fit(degenerate, line), DomainError);
  CHECK_THROWS_AS(linear_fit(xs, std::vector<double>{1.0}), DomainError);
}

TEST_CASE("linear_fit on the m = 6 orbit is nearly flat near 1") {
  std::vector<double> ks;
  const auto ys = orbit_doubles(6, 1000);
  for (std::size_t i = 1; i <= ys.size(); ++i) {
    ks.push_back(static_cast<double>(i));
  }
  const LinearFit fit = linear_fit(ks, ys);
  CHECK(std::abs(fit.slope) < 1e-3);
  CHECK(std::abs(fit.intercept - 1.0) < 0.05);
}

TEST_CASE("variance is invariant under mean shift") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> dist(-10, 10);
  std::vector<double> data, shifted;
  for (int i = 0; i < 500; ++i) {
    data.push_back(dist(rng));
    shifted.push_back(data.back() + 123.456);
  }
  const Moments a = moments(data);
  const Moments b = moments(shifted);
  CHECK(a.variance == doctest::Approx(b.variance).epsilon(1e-12));
  CHECK(b.mean - a.mean == doctest::Approx(123.456).epsilon(1e-12));
}

TEST_CASE("linear_fit slope is invariant under shifting ys by a constant") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(-1, 1);
  std::vector<double> xs, ys, shifted;
  for (int i = 0; i < 200; ++i) {
    xs.push_back(i);
    ys.push_back(dist(rng) + 0.01 * i);
    shifted.push_back(ys.back() + 42.0);
  }
  const LinearFit a = linear_fit(xs, ys);
  const LinearFit b = linear_fit(xs, shifted);
  CHECK(a.slope == doctest::Approx(b.slope).epsilon(1e-9));
  CHECK(b.intercept - a.intercept == doctest::Approx(42.0).epsilon(1e-9));
}

TEST_CASE("correlation eigenstructure") {
  const Correlation2x2 reference = correlation_from_rho(-0.867105);
  CHECK(reference.eigenvalues[0] == doctest::Approx(1.867105).epsilon(1e-12));
  CHECK(reference.eigenvalues[1] == doctest::Approx(0.132895).epsilon(1e-12));

  std::vector<double> xs, ys;
  for (int i = 0; i < 100; ++i) {
    xs.push_back(i);
    ys.push_back(i * 3.0 + 1.0);
  }
  const Correlation2x2 perfect = correlation2x2(xs, ys);
  CHECK(perfect.rho == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(perfect.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(perfect.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(correlation2x2(std::vector<double>(5, 1.0), xs),
                  DomainError);
}

TEST_CASE("property: eigenvalues are 1 +/- rho, sum 2, and reconstruct") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const double rho = dist(rng);
    const Correlation2x2 c = correlation_from_rho(rho);
    REQUIRE(c.eigenvalues[0] + c.eigenvalues[1] ==
            doctest::Approx(2.0).epsilon(1e-12));
    REQUIRE(std::max(c.eigenvalues[0], c.eigenvalues[1]) ==
            doctest::Approx(1.0 + std::abs(rho)).epsilon(1e-12));

    // Reconstruct M = sum of lambda_i v_i v_i^T and compare to [[1,rho],[rho,1]].
    double m[2][2] = {{0, 0}, {0, 0}};
    for (int i = 0; i < 2; ++i) {
      for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) {
          m[r][s] += c.eigenvalues[i] * c.eigenvectors[i][r] *
                     c.eigenvectors[i][s];
        }
      }
    }
    REQUIRE(m[0][0] == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(m[1][1] == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(m[0][1] == doctest::Approx(rho).epsilon(1e-12));
    REQUIRE(m[1][0] == doctest::Approx(rho).epsilon(1e-12));
  }
}

TEST_CASE("summarize_residues and pdf_params") {
  const auto data = orbit_doubles(12, 1000);
  const StatsSummary summary = summarize_residues(data);
  CHECK(summary.count == 1000);
  CHECK(summary.mean == 5.0);
  CHECK(summary.variance == 1.0);
  REQUIRE(summary.ks_vs_normal.has_value());
  REQUIRE(summary.ks_vs_two_point.has_value());
  CHECK(*summary.ks_vs_two_point == 0.0);

  const PdfParams params = pdf_params(data);
  CHECK(params.mu == 5.0);
  CHECK(params.sigma == 1.0);

  // Prime orbit: constant residue 1 -> degenerate normal, no KS.
  const auto prime = orbit_doubles(13, 100);
  const StatsSummary constant = summarize_residues(prime);
  CHECK(constant.mean == 1.0);
  CHECK(constant.variance == 0.0);
  CHECK_FALSE(constant.ks_vs_normal.has_value());
  CHECK(constant.fit_slope == 0.0);
  CHECK(constant.fit_intercept == 1.0);
}
