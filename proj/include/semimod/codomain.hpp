/**
 * @file codomain.hpp
 * @brief Exact codomains for mapped functions.
 *
 *   int          (Z, +, *), ordered ring
 *   zmod:m       (Z/mZ, +, *), values kept in [0, m)
 *   rational     (Q, +, *), ordered field
 *   mulrational  (Q>0, *), ordered group; its "addition" is multiplication
 *
 * Every value is carried as a Rational.
 */
#pragma once

#include "semimod/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace semimod {

using Value = Rational;

class Codomain {
 public:
  enum class Kind { Integers, IntegersMod, Rationals, PositiveRationals };

  static Codomain integers() { return Codomain(Kind::Integers, 0); }
  /// m >= 1; throws ParameterError otherwise.
  static Codomain integers_mod(std::uint64_t m);
  static Codomain rationals() { return Codomain(Kind::Rationals, 0); }
  static Codomain positive_rationals() { return Codomain(Kind::PositiveRationals, 0); }

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }

  /// The group operation written additively.
  Value plus(const Value& a, const Value& b) const;
  Value neutral() const;
  Value negate(const Value& a) const;
  Value minus(const Value& a, const Value& b) const;
  /// k-fold sum of a; negative k uses the inverse.
  Value repeat(const Value& a, std::int64_t k) const;

  /// A second, ring multiplication is available (not mulrational).
  bool is_ring() const { return kind_ != Kind::PositiveRationals; }
  /// Throws InapplicableError when !is_ring().
  Value times(const Value& a, const Value& b) const;
  Value unit() const;
  bool is_unit(const Value& a) const;
  /// a * b^-1; throws ConditioningError when b is not a unit.
  Value divide(const Value& a, const Value& b) const;

  /// int, rational and mulrational carry a total order compatible with plus.
  bool is_ordered() const { return kind_ != Kind::IntegersMod; }
  /// Throws InapplicableError when !is_ordered().
  bool less_equal(const Value& a, const Value& b) const;
  /// Ordered ring with a unit: int and rational.
  bool is_ordered_ring() const { return is_ordered() && is_ring(); }

  bool contains(const Value& v) const;
  /// Reduces residues; throws DomainError for values outside the carrier.
  Value normalize(const Value& v) const;

  std::string format(const Value& v) const;
  /// Throws ParseError.
  Value parse(std::string_view text) const;
  /// "int", "zmod:3", "rational", "mulrational".
  std::string name() const;

  bool operator==(const Codomain&) const = default;

 private:
  Codomain(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}
  Kind kind_;
  std::uint64_t modulus_;
};

/// Accepts "int", "zmod:m", "zmod m", "rational", "mulrational".
Codomain parse_codomain(std::string_view text);

}  // namespace semimod
