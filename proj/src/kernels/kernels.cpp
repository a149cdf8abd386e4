#include "divsum/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>

namespace divsum::kernels {

namespace detail {

ClassCounts class_counts_scalar(std::span<const std::uint64_t> sigma,
                                std::uint64_t first_n) {
  ClassCounts counts;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const std::uint64_t twice_n = 2 * (first_n + i);
    if (sigma[i] < twice_n) {
      ++counts.deficient;
    } else if (sigma[i] == twice_n) {
      ++counts.perfect;
    } else {
      ++counts.abundant;
    }
  }
  return counts;
}

std::vector<std::uint64_t> find_perfect_scalar(
    std::span<const std::uint64_t> sigma, std::uint64_t first_n) {
  std::vector<std::uint64_t> hits;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] == 2 * (first_n + i)) hits.push_back(first_n + i);
  }
  return hits;
}

double sum_scalar(std::span<const double> x) {
  double s = 0;
  for (double v : x) s += v;
  return s;
}

CenteredSums centered_sums_scalar(std::span<const double> x, double c) {
  CenteredSums s;
  for (double v : x) {
    const double d = v - c;
    const double d2 = d * d;
    s.s1 += d;
    s.s2 += d2;
    s.s3 += d2 * d;
    s.s4 += d2 * d2;
  }
  return s;
}

FitSums fit_sums_scalar(std::span<const double> xs,
                        std::span<const double> ys) {
  FitSums s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s.sx += xs[i];
    s.sy += ys[i];
    s.sxx += xs[i] * xs[i];
    s.sxy += xs[i] * ys[i];
  }
  return s;
}

#if DIVSUM_HAVE_AVX2
// Implemented in kernels_avx2.cpp (compiled with -mavx2).
ClassCounts class_counts_avx2(std::span<const std::uint64_t>, std::uint64_t);
std::vector<std::uint64_t> find_perfect_avx2(std::span<const std::uint64_t>,
                                             std::uint64_t);
double sum_avx2(std::span<const double>);
CenteredSums centered_sums_avx2(std::span<const double>, double);
FitSums fit_sums_avx2(std::span<const double>, std::span<const double>);
#endif

}  // namespace detail

namespace {

Backend detect_backend() {
#if DIVSUM_HAVE_AVX2
  if (const char* env = std::getenv("DIVSUM_KERNELS")) {
    std::string v(env);
    if (v == "scalar") return Backend::scalar;
    if (v == "avx2" && __builtin_cpu_supports("avx2")) return Backend::avx2;
  }
  if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#endif
  return Backend::scalar;
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{detect_backend()};
  return slot;
}

}  // namespace

Backend active_backend() { return backend_slot().load(); }

bool backend_supported(Backend backend) {
  if (backend == Backend::scalar) return true;
#if DIVSUM_HAVE_AVX2
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

void set_backend(Backend backend) {
  if (!backend_supported(backend)) {
    throw std::runtime_error("kernel backend not supported on this CPU: " +
                             backend_name(backend));
  }
  backend_slot().store(backend);
}

std::string backend_name(Backend backend) {
  return backend == Backend::avx2 ? "avx2" : "scalar";
}

ClassCounts class_counts(std::span<const std::uint64_t> sigma,
                         std::uint64_t first_n) {
#if DIVSUM_HAVE_AVX2
  if (active_backend() == Backend::avx2)
    return detail::class_counts_avx2(sigma, first_n);
#endif
  return detail::class_counts_scalar(sigma, first_n);
}

std::vector<std::uint64_t> find_perfect(std::span<const std::uint64_t> sigma,
                                        std::uint64_t first_n) {
#if DIVSUM_HAVE_AVX2
  if (active_backend() == Backend::avx2)
    return detail::find_perfect_avx2(sigma, first_n);
#endif
  return detail::find_perfect_scalar(sigma, first_n);
}

double sum(std::span<const double> x) {
#if DIVSUM_HAVE_AVX2
  if (active_backend() == Backend::avx2) return detail::sum_avx2(x);
#endif
  return detail::sum_scalar(x);
}

CenteredSums centered_sums(std::span<const double> x, double c) {
#if DIVSUM_HAVE_AVX2
  if (active_backend() == Backend::avx2)
    return detail::centered_sums_avx2(x, c);
#endif
  return detail::centered_sums_scalar(x, c);
}

FitSums fit_sums(std::span<const double> xs, std::span<const double> ys) {
#if DIVSUM_HAVE_AVX2
  if (active_backend() == Backend::avx2) return detail::fit_sums_avx2(xs, ys);
#endif
  return detail::fit_sums_scalar(xs, ys);
}

}  // namespace divsum::kernels
