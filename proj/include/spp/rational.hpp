#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace spp {

// Always stored reduced with a positive denominator (GMP canonicalizes
// after every operation).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Accepts "12", "-3", "0.6", "1.5e-3", "3/5", "-7/2". Decimal inputs are
// converted exactly. Throws ParseError.
Rational parse_rational(std::string_view text);

// Canonical "a/b", or "a" when the value is an integer.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return value.sign(); }

inline bool is_integer(const Rational& value) {
  return denominator(value) == 1;
}

// value^exponent by repeated squaring.
Rational power(Rational base, unsigned exponent);

}  // namespace spp
