#include "semimod/element.hpp"

#include "semimod/errors.hpp"

#include <cstdio>

namespace semimod {

std::string to_string(const ExtInt& e) {
  switch (e.kind) {
    case ExtInt::Kind::NegInf:
      return "ninf";
    case ExtInt::Kind::PosInf:
      return "pinf";
    case ExtInt::Kind::Finite:
      break;
  }
  return std::to_string(e.value);
}

std::string to_string(const ExtRational& e) {
  return e.neg_inf ? "ninf" : to_string(e.value);
}

std::string to_string(const RatPair& e) {
  if (e.neg_inf) return "ninf";
  return "(" + to_string(e.first) + "," + to_string(e.second) + ")";
}

std::string to_string(const IntInterval& e) {
  return "[" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "]";
}

std::string to_string(const Element& e) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "%.17g", v);
          return buf;
        } else {
          return to_string(v);
        }
      },
      e);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw BoundError("integer overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw BoundError("integer overflow in multiplication");
  return out;
}

}  // namespace semimod
