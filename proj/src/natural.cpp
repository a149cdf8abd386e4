#include "divsum/natural.hpp"

namespace divsum {

Natural parse_natural(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty integer literal");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw ParseError("malformed integer literal: \"" + std::string(text) +
                       "\"");
    }
  }
  Natural v;
  // Cannot fail after the digit check above.
  mpz_set_str(v.get_mpz_t(), std::string(text).c_str(), 10);
  return v;
}

ExactRatio make_ratio(const Natural& num, const Natural& den) {
  if (den == 0) {
    throw DomainError("ratio denominator must be nonzero");
  }
  ExactRatio q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace divsum
