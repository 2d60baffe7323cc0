/**
 * @file identities.hpp
 * @brief Catalog of identities for finitely additive, normalized,
 *        probability and modular functions.
 *
 *   C1 (s,t)    f(t) = f(ts) + f(ts⊥)
 *   C2 (s,t)    f(s△t) + 2f(st) = f(s) + f(t)
 *   N1 (s)      f(s) + f(s⊥) = 1
 *   N2 (s,t)    f(s⊥t⊥) = 1 - f(s) - f(t) + f(st)
 *   P1 (s)      0 <= p(s) <= 1
 *   P2 (s,t)    p(ts) <= p(t)
 *   P3 (s,t)    p(st) >= p(s) + p(t) - 1
 *   L1 (x,y)    f(x^m y^n) = f(xy), exponents m,n >= 1
 *   MOD (s,t)   f(s+t) + f(st) = f(s) + f(t)
 *   FA (s,t)    f(s+t) = f(s) + f(t) for disjoint s,t
 *
 * Hypotheses are verified first; a failed hypothesis throws HypothesisError
 * and is never reported as a failed identity.
 */
#pragma once

#include "semimod/function.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace semimod {

enum class Identity { C1, C2, N1, N2, P1, P2, P3, L1, MOD, FA };

std::string to_string(Identity id);
Identity parse_identity(std::string_view text);
/// Number of element arguments the identity takes.
std::size_t identity_arity(Identity id);

/// exponents is {m, n} for L1 and ignored otherwise.
PropertyReport verify_identity(const FiniteFunction& f, Identity id, const std::vector<Index>& args,
                               const std::vector<unsigned>& exponents = {});

}  // namespace semimod
