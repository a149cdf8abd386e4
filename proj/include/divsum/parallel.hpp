#ifndef DIVSUM_PARALLEL_HPP_
#define DIVSUM_PARALLEL_HPP_

#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace divsum {

/// Knobs shared by every batch scan. Block size is fixed independently of the
/// worker count so the block partition (and therefore every merged result) is
/// identical no matter how many threads run.
struct ScanConfig {
  unsigned workers = 0;  // 0 = std::thread::hardware_concurrency()
  std::uint64_t block_size = 1u << 16;
};

inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw != 0 ? hw : 1;
}

/// Fork-join map over block indices 0..num_blocks-1. Results land in a vector
/// indexed by block, so the caller's ascending merge is deterministic.
template <typename R, typename Fn>
std::vector<R> ordered_block_map(std::size_t num_blocks, unsigned workers,
                                 Fn&& fn) {
  std::vector<R> results(num_blocks);
  workers = resolve_workers(workers);
  if (workers <= 1 || num_blocks <= 1) {
    for (std::size_t i = 0; i < num_blocks; ++i) results[i] = fn(i);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    try {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= num_blocks || failed.load()) break;
        results[i] = fn(i);
      }
    } catch (...) {
      if (!failed.exchange(true)) error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  unsigned n = std::min<std::size_t>(workers, num_blocks);
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failed.load()) std::rethrow_exception(error);
  return results;
}

}  // namespace divsum

#endif  // DIVSUM_PARALLEL_HPP_
