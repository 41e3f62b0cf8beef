#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace moduli {

// Expression templates are disabled so that the number types compose cleanly
// inside Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  return -floor_div(-a, b);
}

inline bool divides(const Integer& d, const Integer& n) { return d != 0 && n % d == 0; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v) { return v.str(); }

}  // namespace moduli
