#include "semimod/rational.hpp"

#include "semimod/errors.hpp"

#include <cctype>

namespace semimod {
namespace {

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw ParseError(0, 0, "empty integer in '" + std::string(text) + "'");
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(0, 0, "invalid digit in '" + std::string(text) + "'");
    }
    try {
      value = value * 10 + (c - '0');
    } catch (const std::overflow_error&) {
      throw ParseError(0, 0, "integer out of range: '" + std::string(text) + "'");
    }
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

std::string to_string(const Rational& value) {
  std::string out = value.numerator().str();
  if (value.denominator() != 1) out += "/" + value.denominator().str();
  return out;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError(0, 0, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace semimod
