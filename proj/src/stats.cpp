#include "divsum/stats.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "divsum/kernels.hpp"

namespace divsum {

namespace {

double normal_cdf(double x, const NormalModel& model) {
  return 0.5 * std::erfc(-(x - model.mu) / (model.sigma * std::sqrt(2.0)));
}

}  // namespace

Moments moments(std::span<const double> data) {
  if (data.size() < 2) throw DomainError("moments: need at least 2 samples");
  Moments m;
  m.count = data.size();
  const double n = static_cast<double>(data.size());
  m.mean = kernels::sum(data) / n;
  const auto sums = kernels::centered_sums(data, m.mean);
  m.variance = sums.s2 / n;
  if (m.variance > 0) {
    const double sd = std::sqrt(m.variance);
    m.skewness = (sums.s3 / n) / (sd * sd * sd);
    m.excess_kurtosis = (sums.s4 / n) / (m.variance * m.variance) - 3.0;
  }
  return m;
}

double ks_statistic(std::span<const double> data, const KsModel& model) {
  if (data.empty()) throw DomainError("ks_statistic: data is empty");

  std::vector<double> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end());

  const auto* normal = std::get_if<NormalModel>(&model);
  const DiscreteUniformModel* discrete = nullptr;
  std::vector<double> model_values;
  if (normal != nullptr) {
    if (!(normal->sigma > 0)) {
      throw DomainError("ks_statistic: normal sigma must be positive");
    }
  } else {
    discrete = &std::get<DiscreteUniformModel>(model);
    if (discrete->values.empty()) {
      throw DomainError("ks_statistic: discrete model has no values");
    }
    model_values = discrete->values;
    std::sort(model_values.begin(), model_values.end());
  }

  auto model_cdf = [&](double x) {
    if (normal != nullptr) return normal_cdf(x, *normal);
    const auto upper = std::upper_bound(model_values.begin(),
                                        model_values.end(), x);
    return static_cast<double>(upper - model_values.begin()) /
           static_cast<double>(model_values.size());
  };
  auto model_cdf_left = [&](double x) {
    if (normal != nullptr) return normal_cdf(x, *normal);  // continuous
    const auto lower = std::lower_bound(model_values.begin(),
                                        model_values.end(), x);
    return static_cast<double>(lower - model_values.begin()) /
           static_cast<double>(model_values.size());
  };

  // Evaluate |ECDF - F| on both sides of every jump of either CDF.
  std::set<double> jump_points(sorted.begin(), sorted.end());
  jump_points.insert(model_values.begin(), model_values.end());

  const double n = static_cast<double>(sorted.size());
  double d = 0;
  for (double x : jump_points) {
    const auto at_or_below = std::upper_bound(sorted.begin(), sorted.end(), x);
    const auto below = std::lower_bound(sorted.begin(), sorted.end(), x);
    const double ecdf = static_cast<double>(at_or_below - sorted.begin()) / n;
    const double ecdf_left = static_cast<double>(below - sorted.begin()) / n;
    d = std::max(d, std::abs(ecdf - model_cdf(x)));
    d = std::max(d, std::abs(ecdf_left - model_cdf_left(x)));
  }
  return d;
}

LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw DomainError("linear_fit: length mismatch");
  }
  if (xs.size() < 2) throw DomainError("linear_fit: need at least 2 points");
  const double n = static_cast<double>(xs.size());
  const auto sums = kernels::fit_sums(xs, ys);
  const double denominator = n * sums.sxx - sums.sx * sums.sx;
  if (denominator == 0) {
    throw DomainError("linear_fit: xs are degenerate");
  }
  LinearFit fit;
  fit.slope = (n * sums.sxy - sums.sx * sums.sy) / denominator;
  fit.intercept = (sums.sy - fit.slope * sums.sx) / n;
  return fit;
}

Correlation2x2 correlation_from_rho(double rho) {
  if (!(rho >= -1.0 && rho <= 1.0)) {
    throw DomainError("correlation: rho must lie in [-1, 1]");
  }
  Correlation2x2 c;
  c.rho = rho;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (rho >= 0) {
    c.eigenvalues = {1.0 + rho, 1.0 - rho};
    c.eigenvectors = {{{inv_sqrt2, inv_sqrt2}, {inv_sqrt2, -inv_sqrt2}}};
  } else {
    c.eigenvalues = {1.0 - rho, 1.0 + rho};
    c.eigenvectors = {{{inv_sqrt2, -inv_sqrt2}, {inv_sqrt2, inv_sqrt2}}};
  }
  return c;
}

Correlation2x2 correlation2x2(std::span<const double> xs,
                              std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw DomainError("correlation: need matched inputs of length >= 2");
  }
  const double n = static_cast<double>(xs.size());
  const double mean_x = kernels::sum(xs) / n;
  const double mean_y = kernels::sum(ys) / n;
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0 || syy == 0) {
    throw DomainError("correlation: zero variance input");
  }
  // Rounding can push a perfect correlation a ULP past 1.
  const double rho = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  return correlation_from_rho(rho);
}

StatsSummary summarize_residues(std::span<const double> residues) {
  StatsSummary summary;
  const Moments m = moments(residues);
  summary.count = m.count;
  summary.mean = m.mean;
  summary.variance = m.variance;
  summary.skewness = m.skewness;
  summary.excess_kurtosis = m.excess_kurtosis;

  if (m.variance > 0) {
    summary.ks_vs_normal = ks_statistic(
        residues, NormalModel{m.mean, std::sqrt(m.variance)});
  }
  std::set<double> distinct(residues.begin(), residues.end());
  if (distinct.size() == 2) {
    DiscreteUniformModel two_point;
    two_point.values.assign(distinct.begin(), distinct.end());
    summary.ks_vs_two_point = ks_statistic(residues, two_point);
  }

  std::vector<double> ks(residues.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    ks[i] = static_cast<double>(i + 1);
  }
  const LinearFit fit = linear_fit(ks, residues);
  summary.fit_slope = fit.slope;
  summary.fit_intercept = fit.intercept;
  return summary;
}

PdfParams pdf_params(std::span<const double> residues) {
  const Moments m = moments(residues);
  return {m.mean, std::sqrt(m.variance)};
}

std::vector<double> residues_as_doubles(const std::vector<Natural>& residues) {
  std::vector<double> values;
  values.reserve(residues.size());
  for (const auto& r : residues) values.push_back(r.get_d());
  return values;
}

}  // namespace divsum
