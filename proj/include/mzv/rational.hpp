#ifndef MZV_RATIONAL_HPP
#define MZV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace mzv {

/// Arbitrary precision rational; always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

/// "p/q" or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& text) {
  Rational q(text, 10);
  q.canonicalize();
  return q;
}

}  // namespace mzv

#endif  // MZV_RATIONAL_HPP
