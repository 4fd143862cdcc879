#include "spp/rational.hpp"

#include "spp/errors.hpp"

#include <cctype>

namespace spp {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// GMP's string constructor reads a leading 0 as an octal prefix.
Integer from_digits(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? Integer(0) : Integer(std::string(digits.substr(first)));
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("invalid integer in scalar '" + std::string(whole) + "'");
  Integer value = from_digits(s);
  return negative ? Integer(-value) : value;
}

Integer pow10(unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    Integer ex = parse_integer(s.substr(e + 1), whole);
    if (abs(ex) > 4096) throw ParseError("exponent out of range in scalar '" + std::string(whole) + "'");
    exponent = ex.convert_to<long>();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw ParseError("invalid decimal scalar '" + std::string(whole) + "'");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw ParseError("invalid scalar '" + std::string(whole) + "'");
    digits = std::string(s);
  }
  Rational value{from_digits(digits)};
  if (exponent > 0) value *= Rational(pow10(static_cast<unsigned>(exponent)));
  if (exponent < 0) value /= Rational(pow10(static_cast<unsigned>(-exponent)));
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty scalar");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(trim(s.substr(0, slash)), text);
    std::string_view den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
    if (!all_digits(den_text)) throw ParseError("invalid denominator in scalar '" + std::string(text) + "'");
    Integer den = from_digits(den_text);
    if (den == 0) throw ParseError("zero denominator in scalar '" + std::string(text) + "'");
    return Rational(num, den);
  }
  return parse_decimal(s, text);
}

std::string to_string(const Rational& value) { return value.str(); }

Rational power(Rational base, unsigned exponent) {
  Rational result = 1;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

}  // namespace spp
