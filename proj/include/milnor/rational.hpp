#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace milnor {

// Exact arbitrary-precision arithmetic. Rationals are kept reduced with a
// positive denominator by the backend; no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(Integer num, Integer den) { return Rational(std::move(num), std::move(den)); }

inline Integer int_gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer int_lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }
inline Integer int_abs(const Integer& a) { return boost::multiprecision::abs(a); }

}  // namespace milnor
