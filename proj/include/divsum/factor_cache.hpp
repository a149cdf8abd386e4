#ifndef DIVSUM_FACTOR_CACHE_HPP_
#define DIVSUM_FACTOR_CACHE_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "divsum/factorization.hpp"

namespace divsum {

/// Thread-safe factorization cache: concurrent readers, serialized insertion,
/// never changes a result. Optionally persisted as UTF-8 text, one record per
/// line, `n=p1^e1*p2^e2*...` with ascending primes; loaded entries are
/// revalidated (re-multiplication and primality of each factor) before use.
class FactorCache {
 public:
  FactorCache() = default;

  std::optional<Factorization> lookup(const Natural& n) const;
  void store(const Natural& n, Factorization f);

  /// Lookup-or-factor-and-store.
  Factorization factor(const Natural& n);

  std::size_t size() const;

  /// Returns the number of records loaded. Throws ParseError on malformed
  /// lines or entries that fail revalidation.
  std::size_t load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  static std::string format_record(const Natural& n, const Factorization& f);
  static std::pair<Natural, Factorization> parse_record(
      const std::string& line);

 private:
  mutable std::shared_mutex mutex_;
  std::map<Natural, Factorization> entries_;
};

/// Factors through the cache when one is supplied, directly otherwise.
inline Factorization factor_via(FactorCache* cache, const Natural& n) {
  return cache != nullptr ? cache->factor(n) : factor(n);
}

}  // namespace divsum

#endif  // DIVSUM_FACTOR_CACHE_HPP_
