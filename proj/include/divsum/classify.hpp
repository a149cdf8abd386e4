#ifndef DIVSUM_CLASSIFY_HPP_
#define DIVSUM_CLASSIFY_HPP_

#include <cstdint>
#include <vector>

#include "divsum/divisors.hpp"
#include "divsum/natural.hpp"
#include "divsum/parallel.hpp"

namespace divsum {

enum class NumberClass { deficient, perfect, abundant };
const char* number_class_name(NumberClass c);

struct ClassificationRecord {
  Natural n;
  Natural sigma;
  NumberClass cls = NumberClass::deficient;
  ExactRatio abundancy;
};

/// Exact classification by integer comparison of sigma(n) with 2n.
ClassificationRecord classify(const Natural& n);

/// Cumulative class fractions at x = step, 2*step, ..., bound. Perfect
/// numbers are counted separately, so at every sample point
/// deficient + abundant + perfect_count/x == 1.
struct DensityPoint {
  std::uint64_t x = 0;
  double deficient_fraction = 0;
  double abundant_fraction = 0;
  std::uint64_t perfect_count = 0;
};

std::vector<DensityPoint> density_counts(std::uint64_t bound,
                                         std::uint64_t step,
                                         const ScanConfig& config = {});

/// Classification records for every n in [lo, hi], sieve-backed.
std::vector<ClassificationRecord> classify_range(std::uint64_t lo,
                                                 std::uint64_t hi,
                                                 const ScanConfig& config = {});

/// Perfect numbers in [lo, hi], ascending.
std::vector<std::uint64_t> perfect_numbers(std::uint64_t lo, std::uint64_t hi,
                                           const ScanConfig& config = {});

/// Verdict on one side of the Robin bounds. The guard band turns
/// too-close-to-call comparisons into `borderline` rather than pretending
/// double precision can decide them.
enum class BoundVerdict { holds, violated, borderline };
const char* bound_verdict_name(BoundVerdict v);

inline constexpr double kEulerGamma = 0.57721566490153286;
inline constexpr double kRobinConstant = 0.6483;
inline constexpr double kDefaultRobinGuard = 1e-9;

/// sigma(n) against e^gamma n log log n (strict) and against the
/// unconditional bound with the 0.6483 n / log log n correction. n >= 3 so
/// log log n is positive. Right-hand sides are evaluated in double precision
/// in a fixed order: exp(gamma) * n * log(log(n)), then + 0.6483 * n /
/// log(log(n)).
struct RobinReport {
  Natural n;
  Natural sigma;
  double strict_rhs = 0;
  double unconditional_rhs = 0;
  BoundVerdict strict = BoundVerdict::holds;
  BoundVerdict unconditional = BoundVerdict::holds;
};

RobinReport robin_check(const Natural& n,
                        double guard_band = kDefaultRobinGuard);

/// n in [3, bound] with sigma(n) strictly violating e^gamma n log log n
/// (borderline results are excluded), ascending.
std::vector<std::uint64_t> robin_scan(std::uint64_t bound,
                                      const ScanConfig& config = {},
                                      double guard_band = kDefaultRobinGuard);

}  // namespace divsum

#endif  // DIVSUM_CLASSIFY_HPP_
