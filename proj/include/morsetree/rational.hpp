#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/version.hpp>

namespace morsetree {

// Exact values. Every function value and label in the library is one of these.
using Rational = boost::multiprecision::cpp_rational;

// Same result as a < b. With the Boost.Rational based adaptor of older Boost
// releases operator< compares by continued fractions and == goes through two
// such comparisons, which is slow.
inline bool less(const Rational& a, const Rational& b) {
#if BOOST_VERSION < 107600
  const auto& x = a.backend().data();
  const auto& y = b.backend().data();
  if (x.denominator() == 1 && y.denominator() == 1) return x.numerator() < y.numerator();
  return x.numerator() * y.denominator() < y.numerator() * x.denominator();
#else
  return a < b;
#endif
}

// Same result as a == b; values are kept in lowest terms.
inline bool equal(const Rational& a, const Rational& b) {
#if BOOST_VERSION < 107600
  const auto& x = a.backend().data();
  const auto& y = b.backend().data();
  return x.numerator() == y.numerator() && x.denominator() == y.denominator();
#else
  return a == b;
#endif
}

struct RationalLess {
  bool operator()(const Rational& a, const Rational& b) const { return less(a, b); }
};

// Accepts "7", "-3", "5/2" and finite decimals such as "1.25" (read exactly).
// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// Integers print without a denominator, everything else as "p/q".
std::string to_string(const Rational& value);

}  // namespace morsetree
