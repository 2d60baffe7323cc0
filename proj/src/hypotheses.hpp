// Hypothesis checks shared by the identity and theorem modules. Each throws
// HypothesisError naming the hypothesis and the witness that breaks it.
#pragma once

#include "semimod/function.hpp"
#include "semimod/structure.hpp"

#include <cstddef>
#include <vector>

namespace semimod::detail {

void require_semiring(const FiniteStructure& s);
void require_zerosumfree(const FiniteStructure& s);
/// zerosumfree and 1+1 in comp(S).
void require_boolean_comp(const FiniteStructure& s);
/// Returns the complement.
Index require_complemented(const FiniteStructure& s, Index x);
void require_ring(const Codomain& c);
void require_ordered_group(const Codomain& c);
void require_finitely_additive(const FiniteFunction& f);
void require_normalized(const FiniteFunction& f);
void require_probability(const FiniteFunction& f);
void require_modular(const FiniteFunction& f);
void require_idempotent(const FiniteStructure& s);
void require_simple(const FiniteStructure& s);
void require_indices(const FiniteStructure& s, const std::vector<Index>& xs);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k);

Index product_of(const FiniteStructure& s, const std::vector<Index>& xs);
Index product_of(const FiniteStructure& s, const std::vector<Index>& xs, const std::vector<std::size_t>& pick);
Index sum_of(const FiniteStructure& s, const std::vector<Index>& xs);

}  // namespace semimod::detail
