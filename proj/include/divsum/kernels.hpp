#ifndef DIVSUM_KERNELS_HPP_
#define DIVSUM_KERNELS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace divsum::kernels {

/// The data-parallel inner loops of the batch scans and the statistics module
/// live here, each with a scalar reference implementation and an AVX2 variant
/// selected at runtime. The two variants are equivalence-tested; everything
/// integer is bit-identical across backends.
enum class Backend { scalar, avx2 };

/// Backend currently in use. Defaults to the best the CPU supports, or the
/// DIVSUM_KERNELS environment variable ("scalar" / "avx2") when set.
Backend active_backend();

/// Forces a backend. Throws std::runtime_error if the CPU lacks it.
void set_backend(Backend backend);

bool backend_supported(Backend backend);
std::string backend_name(Backend backend);

struct ClassCounts {
  std::uint64_t deficient = 0;
  std::uint64_t perfect = 0;
  std::uint64_t abundant = 0;

  ClassCounts& operator+=(const ClassCounts& o) {
    deficient += o.deficient;
    perfect += o.perfect;
    abundant += o.abundant;
    return *this;
  }
  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

/// Classifies sigma[i] against 2*(first_n + i): below = deficient, equal =
/// perfect, above = abundant.
ClassCounts class_counts(std::span<const std::uint64_t> sigma,
                         std::uint64_t first_n);

/// n in [first_n, first_n + len) with sigma(n) == 2n, ascending.
std::vector<std::uint64_t> find_perfect(std::span<const std::uint64_t> sigma,
                                        std::uint64_t first_n);

double sum(std::span<const double> x);

struct CenteredSums {
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0;  // sums of (x-c)^1..(x-c)^4
};
CenteredSums centered_sums(std::span<const double> x, double c);

struct FitSums {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
};
FitSums fit_sums(std::span<const double> xs, std::span<const double> ys);

}  // namespace divsum::kernels

#endif  // DIVSUM_KERNELS_HPP_
