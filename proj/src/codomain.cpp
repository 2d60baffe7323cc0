#include "semimod/codomain.hpp"

#include "semimod/errors.hpp"

#include <charconv>

namespace semimod {
namespace {

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Inverse of a modulo m, or 0 when gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer r0 = m, r1 = mod_floor(a, m);
  Integer t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) return 0;
  return mod_floor(t0, m);
}

}  // namespace

Codomain Codomain::integers_mod(std::uint64_t m) {
  if (m < 1) throw ParameterError("zmod requires a modulus >= 1");
  return Codomain(Kind::IntegersMod, m);
}

Value Codomain::plus(const Value& a, const Value& b) const {
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals:
      return a + b;
    case Kind::IntegersMod:
      return Value(mod_floor(a.numerator() + b.numerator(), Integer(modulus_)));
    case Kind::PositiveRationals:
      return a * b;
  }
  return a;
}

Value Codomain::neutral() const { return kind_ == Kind::PositiveRationals ? Value(1) : Value(0); }

Value Codomain::negate(const Value& a) const {
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals:
      return -a;
    case Kind::IntegersMod:
      return Value(mod_floor(-a.numerator(), Integer(modulus_)));
    case Kind::PositiveRationals:
      return 1 / a;
  }
  return a;
}

Value Codomain::minus(const Value& a, const Value& b) const { return plus(a, negate(b)); }

Value Codomain::repeat(const Value& a, std::int64_t k) const {
  Value base = k < 0 ? negate(a) : a;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Value out = neutral();
  while (n) {
    if (n & 1) out = plus(out, base);
    base = plus(base, base);
    n >>= 1;
  }
  return out;
}

Value Codomain::times(const Value& a, const Value& b) const {
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals:
      return a * b;
    case Kind::IntegersMod:
      return Value(mod_floor(a.numerator() * b.numerator(), Integer(modulus_)));
    case Kind::PositiveRationals:
      break;
  }
  throw InapplicableError("codomain " + name() + " has no ring multiplication");
}

Value Codomain::unit() const {
  if (!is_ring()) throw InapplicableError("codomain " + name() + " has no ring unit");
  if (kind_ == Kind::IntegersMod && modulus_ == 1) return Value(0);
  return Value(1);
}

bool Codomain::is_unit(const Value& a) const {
  switch (kind_) {
    case Kind::Integers:
      return a == Value(1) || a == Value(-1);
    case Kind::Rationals:
      return a != Value(0);
    case Kind::IntegersMod:
      return modulus_ == 1 || mod_inverse(a.numerator(), Integer(modulus_)) != 0;
    case Kind::PositiveRationals:
      break;
  }
  throw InapplicableError("codomain " + name() + " has no ring multiplication");
}

Value Codomain::divide(const Value& a, const Value& b) const {
  if (!is_unit(b)) {
    throw ConditioningError(format(b) + " is not invertible in " + name());
  }
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals:
      return a / b;
    case Kind::IntegersMod:
      if (modulus_ == 1) return Value(0);
      return times(a, Value(mod_inverse(b.numerator(), Integer(modulus_))));
    case Kind::PositiveRationals:
      break;
  }
  throw InapplicableError("codomain " + name() + " has no ring multiplication");
}

bool Codomain::less_equal(const Value& a, const Value& b) const {
  if (!is_ordered()) throw InapplicableError("codomain " + name() + " is not ordered");
  return a <= b;
}

bool Codomain::contains(const Value& v) const {
  switch (kind_) {
    case Kind::Integers:
      return is_integral(v);
    case Kind::Rationals:
      return true;
    case Kind::IntegersMod:
      return is_integral(v) && v >= 0 && v.numerator() < Integer(modulus_);
    case Kind::PositiveRationals:
      return v > 0;
  }
  return false;
}

Value Codomain::normalize(const Value& v) const {
  if (kind_ == Kind::IntegersMod && is_integral(v)) {
    return Value(mod_floor(v.numerator(), Integer(modulus_)));
  }
  if (!contains(v)) throw DomainError("value " + to_string(v) + " is outside codomain " + name());
  return v;
}

std::string Codomain::format(const Value& v) const { return to_string(v); }

Value Codomain::parse(std::string_view text) const {
  const Value v = parse_rational(text);
  if (kind_ != Kind::IntegersMod && !contains(v)) {
    throw ParseError(0, 0, "value " + std::string(text) + " is outside codomain " + name());
  }
  if (kind_ == Kind::IntegersMod && !is_integral(v)) {
    throw ParseError(0, 0, "value " + std::string(text) + " is not a residue");
  }
  return normalize(v);
}

std::string Codomain::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "int";
    case Kind::IntegersMod:
      return "zmod:" + std::to_string(modulus_);
    case Kind::Rationals:
      return "rational";
    case Kind::PositiveRationals:
      return "mulrational";
  }
  return "?";
}

Codomain parse_codomain(std::string_view text) {
  if (text == "int") return Codomain::integers();
  if (text == "rational") return Codomain::rationals();
  if (text == "mulrational") return Codomain::positive_rationals();
  if (text.substr(0, 5) == "zmod:" || text.substr(0, 5) == "zmod ") {
    const auto digits = text.substr(5);
    std::uint64_t m = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || m < 1) {
      throw ParseError(0, 0, "bad modulus in codomain '" + std::string(text) + "'");
    }
    return Codomain::integers_mod(m);
  }
  throw ParseError(0, 0, "unknown codomain '" + std::string(text) + "'");
}

}  // namespace semimod
