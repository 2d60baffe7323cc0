/**
 * @file rational.hpp
 * @brief Exact rational values used for every codomain.
 *
 * Numerator and denominator are overflow-checked 128-bit integers; any
 * overflow throws std::overflow_error instead of wrapping.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace semimod {

using Integer = boost::multiprecision::checked_int128_t;
using Rational = boost::rational<Integer>;

// Under C++20 rewritten comparisons, boost's mixed rational/integer
// equality calls itself forever. Compare against a Rational instead.
template <std::integral T>
bool operator==(const Rational&, T) = delete;
template <std::integral T>
bool operator==(T, const Rational&) = delete;

/// "p" when the denominator is one, "p/q" otherwise (lowest terms).
std::string to_string(const Rational& value);

/// Parses "p" or "p/q" with optional leading minus sign. Throws ParseError.
Rational parse_rational(std::string_view text);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(Integer(num), Integer(den));
}

inline bool is_integral(const Rational& value) {
  return value.denominator() == 1;
}

}  // namespace semimod
