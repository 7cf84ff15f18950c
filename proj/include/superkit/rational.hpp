#pragma once

#include <gmpxx.h>

#include <string>

namespace superkit {

/// Exact rational coefficients. The symbolic kernel never touches floating
/// point; equality of expressions is exact equality of normal forms.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace superkit
