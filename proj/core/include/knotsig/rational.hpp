#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace knotsig {

// Exact arithmetic backbone. Breakpoint denominators of nested cable
// signature functions and the common denominators of the singularity
// invariants overflow 64-bit integers quickly, so every exact quantity in
// the library is an arbitrary-precision integer or rational.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor toward -infinity.
inline Integer floor_rational(const Rational& x) {
  Integer q = numerator(x) / denominator(x);  // truncates toward zero
  if (x < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

inline Integer ceil_rational(const Rational& x) { return -floor_rational(-x); }

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

// x - floor(x), in [0, 1).
inline Rational fractional_part(const Rational& x) {
  return x - Rational(floor_rational(x));
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

// Canonical "num/den" form used by every serialized exact value.
inline std::string to_fraction_string(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

// Accepts "num/den" or a bare integer.
Rational rational_from_string(const std::string& text);

}  // namespace knotsig
