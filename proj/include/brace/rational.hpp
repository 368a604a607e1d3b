#pragma once

#include <gmpxx.h>

#include <string>

namespace brace {

// Exact arbitrary-precision rational coefficients. All arithmetic in the
// library is over Q; no floating point anywhere.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace brace
