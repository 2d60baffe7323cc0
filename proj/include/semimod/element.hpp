/**
 * @file element.hpp
 * @brief Element values of the symbolic (infinite) instances.
 *
 * Every symbolic structure shares the closed Element variant so that
 * structures, functions and reports can be handled uniformly. Equality is
 * structural and exact, except for the floating-point alternative which
 * only the S_h instance uses.
 */
#pragma once

#include "semimod/interval_set.hpp"
#include "semimod/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

namespace semimod {

/// Integer extended by -inf and +inf. Arithmetic on the finite part is
/// overflow-checked.
struct ExtInt {
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  std::int64_t value = 0;

  static constexpr ExtInt neg_inf() { return {Kind::NegInf, 0}; }
  static constexpr ExtInt pos_inf() { return {Kind::PosInf, 0}; }
  static constexpr ExtInt of(std::int64_t v) { return {Kind::Finite, v}; }

  bool finite() const { return kind == Kind::Finite; }
  bool operator==(const ExtInt&) const = default;
  std::strong_ordering operator<=>(const ExtInt& other) const {
    if (kind != other.kind) return kind <=> other.kind;
    return value <=> other.value;
  }
};

/// Rational extended by -inf (max-plus style).
struct ExtRational {
  bool neg_inf = false;
  Rational value;

  static ExtRational minus_infinity() { return {true, Rational(0)}; }
  static ExtRational of(const Rational& v) { return {false, v}; }
  bool operator==(const ExtRational&) const = default;
};

/// Pair of rationals or the adjoined -inf.
struct RatPair {
  bool neg_inf = false;
  Rational first;
  Rational second;

  static RatPair minus_infinity() { return {true, Rational(0), Rational(0)}; }
  static RatPair of(const Rational& a, const Rational& b) { return {false, a, b}; }
  bool operator==(const RatPair&) const = default;
};

/// Closed integer interval [lo, hi].
struct IntInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool operator==(const IntInterval&) const = default;
};

using Element = std::variant<ExtInt, ExtRational, RatPair, IntInterval,
                             FiniteCofiniteSet, IntervalUnionSet, double>;

/// Canonical text form; -inf and +inf print as "ninf" and "pinf".
std::string to_string(const ExtInt& e);
std::string to_string(const ExtRational& e);
std::string to_string(const RatPair& e);
std::string to_string(const IntInterval& e);
std::string to_string(const Element& e);

/// Overflow-checked helpers; throw BoundError.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace semimod
