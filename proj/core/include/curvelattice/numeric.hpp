#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace curvelattice {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, never floating point. Rationals are kept in lowest terms with a
// positive denominator; comparisons are exact.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numer(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Int denom(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

// n/d as an exact rational (d != 0).
Rational ratio(const Int& n, const Int& d);

bool is_integer(const Rational& q);

// Rational known to be an integer; throws Errc::non_integral otherwise.
// `what` names the quantity in the error message.
Int integer_value(const Rational& q, const std::string& what);

// Binomial coefficients as integer polynomials in n, so negative arguments
// follow the algebraic extension.
Int binom2(const Int& n);  // n(n-1)/2
Int binom3(const Int& n);  // n(n-1)(n-2)/6

// Strict base-10 integer parse: optional leading sign, then digits only.
// Throws Errc::invalid_input on anything else.
Int parse_int(const std::string& text);

}  // namespace curvelattice
