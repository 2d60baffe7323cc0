/**
 * @file theorems.hpp
 * @brief Classification of modular functions by exhaustive enumeration on
 *        finite instances and by forcing identities on symbolic ones.
 */
#pragma once

#include "semimod/function.hpp"
#include "semimod/instances.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace semimod {

inline constexpr std::uint64_t kEnumerationBudget = 100000000;

/// Predicted shape of the modular functions on a finite instance.
struct ClassificationClaim {
  enum class Shape {
    /// Modular iff constant outside `exceptions`.
    ConstantOffExceptions,
    /// Every function is modular.
    AllFunctions,
    /// Finitely additive iff modular with f(0) = 0.
    BooleanCorollary,
    /// No prediction; only counts are reported.
    None,
  };
  Shape shape = Shape::None;
  std::string name;  // "bni", "truncation", ...
  std::vector<Index> exceptions;
  std::string note;
};

/// Shipped predictions: bni -> {0}, truncation and arctic_window -> {ninf},
/// bottleneck -> all functions, powerset -> Boolean corollary.
ClassificationClaim claim_for(const FiniteKind& kind);
/// Looks the claim up by name and checks that it fits the kind; "none"
/// gives the empty claim. Throws ParameterError on a mismatch.
ClassificationClaim claim_by_name(std::string_view name, const FiniteKind& kind);

/// m^n, or BudgetError naming the count when it exceeds the budget.
std::uint64_t function_count(std::size_t n, std::uint64_t m, std::uint64_t budget = kEnumerationBudget);

/// Value table of function number `index`; entry 0 is the most significant
/// digit, so index 0 is the all-zero table.
std::vector<std::uint32_t> function_table(std::uint64_t index, std::size_t n, std::uint64_t m);
std::uint64_t function_index(const std::vector<std::uint32_t>& table, std::uint64_t m);
FiniteFunction function_at(const FiniteStructure& s, const Codomain& zmod, std::uint64_t index);

/// Calls visit(index, table) for every table in lexicographic order.
/// Returning false from visit stops the enumeration.
void enumerate_functions(const FiniteStructure& s, const Codomain& zmod,
                         const std::function<bool(std::uint64_t, const std::vector<std::uint32_t>&)>& visit,
                         std::uint64_t budget = kEnumerationBudget);

struct EnumerationResult {
  std::uint64_t total = 0;
  std::uint64_t modular = 0;
  /// Boolean corollary only.
  std::uint64_t finitely_additive = 0;
  /// Indices of the first modular functions (at most kListed).
  std::vector<std::uint64_t> listed;
  /// FNV-1a over the modular indices in order; independent of workers.
  std::uint64_t digest = 0;

  ClassificationClaim claim;
  /// Every modular function has the predicted shape.
  std::optional<bool> forward;
  /// Every function of the predicted shape is modular.
  std::optional<bool> converse;
  /// Smallest counterexample index for each direction.
  std::optional<std::uint64_t> forward_witness;
  std::optional<std::uint64_t> converse_witness;
  /// Listed functions re-verified through check_property.
  bool reverified = false;

  static constexpr std::size_t kListed = 4096;
  bool claim_holds() const { return forward.value_or(true) && converse.value_or(true); }
};

/// Filters the modular functions into zmod and evaluates the claim in both
/// directions. workers = 0 picks the hardware concurrency.
EnumerationResult classify_modular(const FiniteStructure& s, const Codomain& zmod, const ClassificationClaim& claim,
                                   unsigned workers = 0, std::uint64_t budget = kEnumerationBudget);

enum class ForcingTheorem { Arctic, Tropical, GMinPlus, OneHasInverse, Litvinov, Semifield, Basic };
std::string to_string(ForcingTheorem t);
ForcingTheorem parse_forcing_theorem(std::string_view text);

/// Applies the substitutions from the theorem's proof at sampled points,
/// then samples the modular law. Fails with the pair of the first broken
/// instance (or the single point whose forced value differs). Throws
/// InapplicableError when the theorem does not cover the family.
PropertyReport sampled_constancy_check(const SymbolicFunction& f, ForcingTheorem theorem,
                                       const SampleBudget& budget);

}  // namespace semimod
