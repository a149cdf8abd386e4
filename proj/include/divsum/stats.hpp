#ifndef DIVSUM_STATS_HPP_
#define DIVSUM_STATS_HPP_

#include <array>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "divsum/natural.hpp"

namespace divsum {

/// Population moments. Skewness and excess kurtosis are standardized and
/// undefined (nullopt) for constant data.
struct Moments {
  std::size_t count = 0;
  double mean = 0;
  double variance = 0;  // population, not sample
  std::optional<double> skewness;
  std::optional<double> excess_kurtosis;
};

Moments moments(std::span<const double> data);

struct NormalModel {
  double mu = 0;
  double sigma = 1;
};

/// Discrete model putting equal mass on each listed value.
struct DiscreteUniformModel {
  std::vector<double> values;
};

using KsModel = std::variant<NormalModel, DiscreteUniformModel>;

/// One-sample Kolmogorov-Smirnov statistic: sup |ECDF - F| evaluated on both
/// sides of every jump, which handles ties and discrete models correctly.
double ks_statistic(std::span<const double> data, const KsModel& model);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
};

/// Ordinary least squares of ys on xs.
LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys);

/// 2x2 correlation matrix [[1, rho], [rho, 1]] with its closed-form
/// eigen-decomposition: eigenvalues 1 + rho and 1 - rho (stored descending)
/// with eigenvectors (1,1)/sqrt(2) and (1,-1)/sqrt(2).
struct Correlation2x2 {
  double rho = 0;
  std::array<double, 2> eigenvalues{};                 // descending
  std::array<std::array<double, 2>, 2> eigenvectors{};  // columns match order
};

Correlation2x2 correlation_from_rho(double rho);
Correlation2x2 correlation2x2(std::span<const double> xs,
                              std::span<const double> ys);

/// Everything the stats CLI reports for one residue orbit: moments, the KS
/// distance to the moment-matched normal, and the least-squares line of
/// residue against k.
struct StatsSummary {
  std::size_t count = 0;
  double mean = 0;
  double variance = 0;
  std::optional<double> skewness;
  std::optional<double> excess_kurtosis;
  std::optional<double> ks_vs_normal;      // needs variance > 0
  std::optional<double> ks_vs_two_point;   // only for two-valued orbits
  double fit_slope = 0;
  double fit_intercept = 0;
};

StatsSummary summarize_residues(std::span<const double> residues);

/// Moment-matched normal parameters (mu, sigma) for a residue sequence.
struct PdfParams {
  double mu = 0;
  double sigma = 0;
};

PdfParams pdf_params(std::span<const double> residues);

/// Residue orbit as doubles, for feeding the statistics above.
std::vector<double> residues_as_doubles(const std::vector<Natural>& residues);

}  // namespace divsum

#endif  // DIVSUM_STATS_HPP_
