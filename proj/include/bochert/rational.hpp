#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bochert {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer &num, const Integer &den) { return Rational(num, den); }

inline bool is_integral(const Rational &r) {
  return boost::multiprecision::denominator(r) == 1;
}

/// "7" or "103/10".
inline std::string to_string(const Rational &r) {
  if (is_integral(r))
    return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline std::string to_string(const Integer &z) { return z.str(); }

/// Smallest integer >= r.
inline Integer ceil(const Rational &r) {
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  Integer q = num / den; // truncates toward zero
  if (q * den != num && num > 0)
    ++q;
  return q;
}

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i)
    f *= i;
  return f;
}

} // namespace bochert
