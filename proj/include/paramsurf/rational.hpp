#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace paramsurf {

// Exact rational coefficients. cpp_rational keeps values reduced with a
// positive denominator, which is exactly the canonical form we need.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(const Rational& base, unsigned exp) {
  Rational r = 1;
  Rational b = base;
  while (exp != 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace paramsurf
