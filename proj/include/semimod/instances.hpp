/**
 * @file instances.hpp
 * @brief Built-in (pre-)semirings: finite ones as tables, infinite ones as
 *        symbolic structures.
 *
 * Finite kinds and their carriers:
 *   powerset(m)       subsets of {1..m}, union / intersection
 *   bni(n,i)          B(n,i) = {0..n-1}; sums and products above n-1 wrap
 *                     into [i, n-1] modulo n-i
 *   truncation(k)     {ninf, 0..k}, max / min(a+b, k)
 *   bottleneck(n)     chain {0..n-1}, max / min; endpoints optional
 *   arctic_window(N)  {ninf, 0..N}, max / + saturated at N; a finite window
 *                     of the Arctic semiring, not the Arctic semiring itself
 *
 * Symbolic kinds are listed in SymbolicKind.
 */
#pragma once

#include "semimod/structure.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace semimod {

struct BooleanPowerset {
  unsigned m = 1;
};
struct BnI {
  unsigned n = 2;
  unsigned i = 1;
};
struct Truncation {
  unsigned k = 1;
};
struct BottleneckChain {
  unsigned n = 1;
  bool with_endpoints = false;
};
struct ArcticWindow {
  unsigned limit = 1;
};

using FiniteKind = std::variant<BooleanPowerset, BnI, Truncation, BottleneckChain, ArcticWindow>;

/// Throws ParameterError on invalid parameters.
FiniteStructure make_finite(const FiniteKind& kind);

/// "bni(4,2)", "truncation(2)", "bottleneck(4)", "bottleneck(4,endpoints)", ...
std::string to_string(const FiniteKind& kind);
FiniteKind parse_finite_kind(std::string_view text);

enum class SymbolicFamily {
  Tropical,        // (N0 u {pinf}, min, +)
  Arctic,          // (N0 u {ninf}, max, +)
  GMinPlus,        // (Z, min, +)
  LcmGcd,          // (N, lcm, gcd)
  GcdMul,          // (N0, gcd, *), isomorphic to the ideals of Z
  Litvinov,        // (Q x Q) u {ninf}, componentwise max and +
  MaxPlusQ,        // (Q u {ninf}, max, +)
  QNonNeg,         // (Q>=0, +, *)
  Sh,              // (R>=0, (a^(1/h) + b^(1/h))^h, *), floating point
  IntervalE,       // integer intervals [a,b] with a <= 0 <= b
  FiniteCofinite,  // finite / cofinite subsets of N, union / intersection
  IntervalUnions,  // finite unions of subintervals of [a,b]
};

struct SymbolicKind {
  SymbolicFamily family = SymbolicFamily::Tropical;
  double h = 1.0;               // Sh only, h > 0
  Rational lo = 0, hi = 1;      // IntervalUnions only, lo < hi
  bool literal_product = false; // IntervalE only: [a1+a2, a2+b2] as printed
};

SymbolicStructure make_symbolic(const SymbolicKind& kind);

/// "tropical", "sh(2)", "interval_unions(0,1)", "interval_e_literal", ...
std::string to_string(const SymbolicKind& kind);
SymbolicKind parse_symbolic_kind(std::string_view text);

/// Relative tolerance used for S_h element equality.
inline constexpr double kShTolerance = 1e-9;

}  // namespace semimod
