#ifndef DIVSUM_NATURAL_HPP_
#define DIVSUM_NATURAL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace divsum {

/// Arbitrary-precision non-negative integer. All divisor arithmetic in this
/// library is exact; no operation here ever rounds.
using Natural = mpz_class;

/// Exact rational in lowest terms with positive denominator.
using ExactRatio = mpq_class;

/// Input outside an operation's domain (e.g. sigma(0)).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A result grew past the configured bit cap. Distinct from DomainError so
/// callers can tell "bad input" from "numbers got too big".
class BitCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (number literals, cache files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default growth guard, in bits. Iterated sigma grows geometrically, so every
/// iteration engine takes a cap and stops (or aborts) when a value exceeds it.
inline constexpr unsigned kDefaultBitCap = 4096;

/// Parses a decimal digit string (no sign, no exponent). Throws ParseError.
Natural parse_natural(std::string_view text);

/// Decimal rendering; never scientific notation, round-trips exactly.
inline std::string to_decimal(const Natural& v) { return v.get_str(); }

inline std::size_t bit_length(const Natural& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline void ensure_bit_cap(const Natural& v, unsigned bit_cap,
                           const char* what) {
  if (bit_length(v) > bit_cap) {
    throw BitCapExceeded(std::string(what) + ": value exceeds " +
                         std::to_string(bit_cap) + "-bit cap");
  }
}

/// Reduced num/den with den >= 1. Throws DomainError on zero denominator.
ExactRatio make_ratio(const Natural& num, const Natural& den);

inline bool is_integer_ratio(const ExactRatio& q) {
  return q.get_den() == 1;
}

}  // namespace divsum

#endif  // DIVSUM_NATURAL_HPP_
