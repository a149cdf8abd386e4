#include "divsum/classify.hpp"

#include <cmath>

#include "divsum/kernels.hpp"
#include "divsum/sieve.hpp"

namespace divsum {

namespace {

void require_sieve_bound(std::uint64_t bound, const char* op) {
  if (bound > kMaxSieveBound) {
    throw DomainError(std::string(op) + ": bound exceeds sieve limit");
  }
}

// Fixed evaluation order; documented in the header.
double robin_strict_rhs(double nd) {
  return std::exp(kEulerGamma) * nd * std::log(std::log(nd));
}

double robin_unconditional_rhs(double nd) {
  return robin_strict_rhs(nd) + kRobinConstant * nd / std::log(std::log(nd));
}

BoundVerdict robin_verdict(double sigma_d, double rhs, double guard_band) {
  if (std::abs(sigma_d - rhs) <= guard_band * rhs) {
    return BoundVerdict::borderline;
  }
  return sigma_d >= rhs ? BoundVerdict::violated : BoundVerdict::holds;
}

}  // namespace

const char* number_class_name(NumberClass c) {
  switch (c) {
    case NumberClass::deficient: return "deficient";
    case NumberClass::perfect: return "perfect";
    case NumberClass::abundant: return "abundant";
  }
  return "unknown";
}

const char* bound_verdict_name(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::holds: return "holds";
    case BoundVerdict::violated: return "violated";
    case BoundVerdict::borderline: return "borderline";
  }
  return "unknown";
}

ClassificationRecord classify(const Natural& n) {
  if (n < 1) throw DomainError("classify: n must be >= 1");
  ClassificationRecord record;
  record.n = n;
  const Factorization f = factor(n);
  record.sigma = sigma(f);
  record.abundancy = make_ratio(record.sigma, n);
  const Natural twice = 2 * n;
  if (record.sigma < twice) {
    record.cls = NumberClass::deficient;
  } else if (record.sigma == twice) {
    record.cls = NumberClass::perfect;
  } else {
    record.cls = NumberClass::abundant;
  }
  return record;
}

std::vector<DensityPoint> density_counts(std::uint64_t bound,
                                         std::uint64_t step,
                                         const ScanConfig& config) {
  if (step < 1 || bound < step) {
    throw DomainError("density_counts: need bound >= step >= 1");
  }
  require_sieve_bound(bound, "density_counts");

  // Per block: class counts up to every sample point inside it, plus the
  // block total, folded into cumulative fractions afterwards.
  struct BlockSummary {
    std::vector<std::pair<std::uint64_t, kernels::ClassCounts>> at_samples;
    kernels::ClassCounts total;
  };

  const std::size_t blocks = block_count(bound, config.block_size);
  auto per_block = [&](std::size_t index) {
    auto [first, last] = block_range(index, bound, config.block_size);
    std::vector<std::uint64_t> sigma_values(last - first + 1);
    sigma_block(first, sigma_values);
    const std::span<const std::uint64_t> values(sigma_values);

    BlockSummary summary;
    kernels::ClassCounts running;
    std::uint64_t consumed = 0;  // values [first, first+consumed) counted
    std::uint64_t sample = ((first - 1) / step + 1) * step;
    for (; sample <= last; sample += step) {
      const std::uint64_t upto = sample - first + 1;
      running += kernels::class_counts(
          values.subspan(consumed, upto - consumed), first + consumed);
      consumed = upto;
      summary.at_samples.emplace_back(sample, running);
    }
    running += kernels::class_counts(values.subspan(consumed),
                                     first + consumed);
    summary.total = running;
    return summary;
  };

  auto summaries =
      ordered_block_map<BlockSummary>(blocks, config.workers, per_block);

  std::vector<DensityPoint> points;
  points.reserve(bound / step);
  kernels::ClassCounts cumulative;
  for (const auto& summary : summaries) {
    for (const auto& [x, counts] : summary.at_samples) {
      DensityPoint point;
      point.x = x;
      const auto xd = static_cast<double>(x);
      point.deficient_fraction =
          static_cast<double>(cumulative.deficient + counts.deficient) / xd;
      point.abundant_fraction =
          static_cast<double>(cumulative.abundant + counts.abundant) / xd;
      point.perfect_count = cumulative.perfect + counts.perfect;
      points.push_back(point);
    }
    cumulative += summary.total;
  }
  return points;
}

std::vector<ClassificationRecord> classify_range(std::uint64_t lo,
                                                 std::uint64_t hi,
                                                 const ScanConfig& config) {
  if (lo < 1 || hi < lo) throw DomainError("classify_range: need 1 <= lo <= hi");
  require_sieve_bound(hi, "classify_range");

  const std::uint64_t span = hi - lo + 1;
  const std::size_t blocks =
      static_cast<std::size_t>((span + config.block_size - 1) /
                               config.block_size);
  auto per_block = [&](std::size_t index) {
    const std::uint64_t first = lo + index * config.block_size;
    const std::uint64_t last = std::min(hi, first + config.block_size - 1);
    std::vector<std::uint64_t> sigma_values(last - first + 1);
    sigma_block(first, sigma_values);
    std::vector<ClassificationRecord> records;
    records.reserve(sigma_values.size());
    for (std::uint64_t n = first; n <= last; ++n) {
      const std::uint64_t s = sigma_values[n - first];
      ClassificationRecord record;
      record.n = Natural(static_cast<unsigned long>(n));
      record.sigma = Natural(static_cast<unsigned long>(s));
      record.abundancy = make_ratio(record.sigma, record.n);
      record.cls = s < 2 * n   ? NumberClass::deficient
                   : s == 2 * n ? NumberClass::perfect
                                : NumberClass::abundant;
      records.push_back(std::move(record));
    }
    return records;
  };

  auto chunks = ordered_block_map<std::vector<ClassificationRecord>>(
      blocks, config.workers, per_block);
  std::vector<ClassificationRecord> result;
  result.reserve(span);
  for (auto& chunk : chunks) {
    for (auto& record : chunk) result.push_back(std::move(record));
  }
  return result;
}

std::vector<std::uint64_t> perfect_numbers(std::uint64_t lo, std::uint64_t hi,
                                           const ScanConfig& config) {
  if (lo < 1 || hi < lo) throw DomainError("perfect_numbers: need 1 <= lo <= hi");
  require_sieve_bound(hi, "perfect_numbers");

  const std::uint64_t span = hi - lo + 1;
  const std::size_t blocks =
      static_cast<std::size_t>((span + config.block_size - 1) /
                               config.block_size);
  auto per_block = [&](std::size_t index) {
    const std::uint64_t first = lo + index * config.block_size;
    const std::uint64_t last = std::min(hi, first + config.block_size - 1);
    std::vector<std::uint64_t> sigma_values(last - first + 1);
    sigma_block(first, sigma_values);
    return kernels::find_perfect(sigma_values, first);
  };

  auto chunks = ordered_block_map<std::vector<std::uint64_t>>(
      blocks, config.workers, per_block);
  std::vector<std::uint64_t> result;
  for (const auto& chunk : chunks) {
    result.insert(result.end(), chunk.begin(), chunk.end());
  }
  return result;
}

RobinReport robin_check(const Natural& n, double guard_band) {
  if (n < 3) throw DomainError("robin_check: n must be >= 3");
  RobinReport report;
  report.n = n;
  report.sigma = sigma(n);
  const double nd = n.get_d();
  report.strict_rhs = robin_strict_rhs(nd);
  report.unconditional_rhs = robin_unconditional_rhs(nd);
  const double sigma_d = report.sigma.get_d();
  report.strict = robin_verdict(sigma_d, report.strict_rhs, guard_band);
  report.unconditional =
      robin_verdict(sigma_d, report.unconditional_rhs, guard_band);
  return report;
}

std::vector<std::uint64_t> robin_scan(std::uint64_t bound,
                                      const ScanConfig& config,
                                      double guard_band) {
  if (bound < 3) throw DomainError("robin_scan: bound must be >= 3");
  require_sieve_bound(bound, "robin_scan");

  const std::size_t blocks = block_count(bound, config.block_size);
  auto per_block = [&](std::size_t index) {
    auto [first, last] = block_range(index, bound, config.block_size);
    std::vector<std::uint64_t> sigma_values(last - first + 1);
    sigma_block(first, sigma_values);
    std::vector<std::uint64_t> violators;
    for (std::uint64_t n = std::max<std::uint64_t>(first, 3); n <= last; ++n) {
      const double rhs = robin_strict_rhs(static_cast<double>(n));
      const auto verdict = robin_verdict(
          static_cast<double>(sigma_values[n - first]), rhs, guard_band);
      if (verdict == BoundVerdict::violated) violators.push_back(n);
    }
    return violators;
  };

  auto chunks = ordered_block_map<std::vector<std::uint64_t>>(
      blocks, config.workers, per_block);
  std::vector<std::uint64_t> result;
  for (const auto& chunk : chunks) {
    result.insert(result.end(), chunk.begin(), chunk.end());
  }
  return result;
}

}  // namespace divsum
