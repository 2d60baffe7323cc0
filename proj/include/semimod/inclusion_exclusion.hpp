/**
 * @file inclusion_exclusion.hpp
 * @brief Poincaré's formula for modular functions, propagation of
 *        independence, and restriction of finitely additive functions to
 *        comp(S).
 */
#pragma once

#include "semimod/function.hpp"
#include "semimod/probability.hpp"

#include <optional>
#include <vector>

namespace semimod {

/// lhs = m(sum s_i) + sum over even-size subsets of m(prod),
/// rhs = sum over odd-size subsets of m(prod). Requires a multiplicatively
/// idempotent domain and a modular m.
InequalityResult poincare(const FiniteFunction& m, const std::vector<Index>& elements);

/// f((s_1 + ... + s_{n-1}) s_n) = f(s_1 + ... + s_{n-1}) f(s_n) for
/// independent s_i, n >= 2.
PropertyReport independence_propagation(const FiniteFunction& f, const std::vector<Index>& elements);

struct CorollaryCheck {
  bool finitely_additive = false;
  bool modular = false;
  bool zero_at_zero = false;
  /// finitely_additive == (modular && zero_at_zero)
  bool equivalence_holds() const { return finitely_additive == (modular && zero_at_zero); }
};

struct Restriction {
  /// f on the Boolean algebra comp(S).
  FiniteFunction restricted;
  /// restricted index -> domain index.
  std::vector<Index> embedding;
  /// Hypothesis of the theorem; when false the modular verdict below is
  /// informational only.
  bool finitely_additive = false;
  PropertyReport modular;
  /// Present when every element of the domain is complemented.
  std::optional<CorollaryCheck> corollary;
};

/// Requires a zerosumfree semiring with 1+1 complemented.
Restriction restrict_to_comp(const FiniteFunction& f);

struct SymbolicRestriction {
  PropertyReport finitely_additive;
  PropertyReport modular;  // sampled over complemented elements
  bool boolean_domain = false;
};

/// Symbolic domains with an analytic complement only.
SymbolicRestriction restrict_to_comp(const SymbolicFunction& f, const SampleBudget& budget);

/// Corollary check for a function on a Boolean domain.
CorollaryCheck boolean_corollary(const FiniteFunction& f);

}  // namespace semimod
