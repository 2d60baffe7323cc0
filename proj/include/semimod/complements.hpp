/**
 * @file complements.hpp
 * @brief Complemented elements, comp(S), symmetric difference, s ⊔ t and
 *        disjointification.
 *
 * Every finite-structure entry point requires a verified semiring and throws
 * HypothesisError("semiring") otherwise.
 */
#pragma once

#include "semimod/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semimod {

/// The unique c with s*c = 0 and s + c = 1, or nullopt. Throws
/// CorruptionError if two distinct candidates satisfy both equations.
std::optional<Index> complement(const FiniteStructure& s, Index element);

struct ComplementMap {
  /// partner[x] is x's complement, if any.
  std::vector<std::optional<Index>> partner;
  /// Complemented elements in increasing index order.
  std::vector<Index> elements;

  bool contains(Index x) const { return x < partner.size() && partner[x].has_value(); }
  /// Throws DomainError when x is not complemented.
  Index of(Index x) const;
};

ComplementMap complemented_elements(const FiniteStructure& s);

/// s△t = s⊥t + st⊥. Throws DomainError if s or t is not complemented.
Index symdiff(const FiniteStructure& s, Index a, Index b);
/// s⊔t = s + s⊥t. Throws DomainError if s is not complemented.
Index sqcup(const FiniteStructure& s, Index a, Index b);

/// Outcome of the four equivalent conditions on comp(S) for a semiring S.
struct CompAlgebraReport {
  bool zerosumfree = false;
  std::vector<std::string> zerosumfree_witness;
  bool one_plus_one_complemented = false;  // condition (2)
  bool closed_under_add = false;           // condition (1)
  bool add_is_sqcup = false;               // condition (3)
  bool boolean_algebra = false;            // condition (4)
  /// First pair breaking (1) or (3), if any.
  std::vector<std::string> witness;

  /// Set when zerosumfree holds and 1+1 is complemented.
  std::optional<FiniteStructure> algebra;
  /// algebra index -> index in the original structure.
  std::vector<Index> embedding;
  /// Empty on success, otherwise the failed condition.
  std::string reason;

  /// Under zerosumfree, (1)..(4) must agree.
  bool equivalence_holds() const;
};

CompAlgebraReport comp_boolean_algebra(const FiniteStructure& s);

/// Throws HypothesisError("boolean") unless every element of b is
/// complemented and b is multiplicatively idempotent.
void require_boolean(const FiniteStructure& b);

/// b_k = a_k a_1' ... a_{k-1}' in a Boolean algebra. The result is
/// re-checked to be pairwise disjoint with the same sum.
std::vector<Index> disjointify(const FiniteStructure& b, const std::vector<Index>& a);

/// The same construction inside comp(S) of a semiring; every a_k must be
/// complemented (HypothesisError("complemented") otherwise).
std::vector<Index> disjointify_complemented(const FiniteStructure& s, const std::vector<Index>& a);

/// Complement in a symbolic structure: the analytic complement when the
/// instance has one, otherwise a scan of caller-supplied candidates.
std::optional<Element> complement(const SymbolicStructure& s, const Element& element,
                                  const std::vector<Element>& candidates = {});

}  // namespace semimod
