/**
 * @file function.hpp
 * @brief Functions from a structure into a codomain, and the four basic
 *        properties: finitely additive, modular, normalized, probability.
 */
#pragma once

#include "semimod/codomain.hpp"
#include "semimod/rng.hpp"
#include "semimod/structure.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace semimod {

enum class Verdict { Holds, Fails, HoldsOnSample };

std::string to_string(Verdict v);

/// Outcome of a property, identity or theorem check. A Fails verdict
/// always carries the witness that reproduces the violation.
struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::Holds;
  std::vector<std::string> witness;
  std::vector<Index> witness_indices;  // finite domains only
  std::uint64_t checked = 0;
  std::optional<Value> lhs;
  std::optional<Value> rhs;
  std::string note;

  bool holds() const { return verdict != Verdict::Fails; }
};

struct AxiomReport;

/// Total function on a finite carrier. Immutable; copies share the table.
class FiniteFunction {
 public:
  /// Values are normalized into the codomain; throws DomainError on a
  /// size mismatch or a value outside the codomain.
  FiniteFunction(FiniteStructure domain, Codomain codomain, std::vector<Value> values);
  static FiniteFunction from_rule(FiniteStructure domain, Codomain codomain,
                                  const std::function<Value(Index)>& rule);

  const FiniteStructure& domain() const;
  const Codomain& codomain() const;
  const Value& operator()(Index x) const;
  const std::vector<Value>& values() const;

  /// Cached exhaustive reports.
  const PropertyReport& finitely_additive_report() const;
  const PropertyReport& modular_report() const;

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
};

/// Function on a symbolic carrier, given as a closure.
struct SymbolicFunction {
  SymbolicStructure domain;
  Codomain codomain = Codomain::integers();
  std::function<Value(const Element&)> rule;
  std::string description;

  /// Evaluates and normalizes into the codomain.
  Value operator()(const Element& e) const;
};

enum class Property { FinitelyAdditive, Modular, Normalized, Probability };

std::string to_string(Property p);
Property parse_property(std::string_view text);

/// Exhaustive on finite domains. Throws InapplicableError when the domain
/// lacks the needed zero/one or the codomain lacks a unit or an order.
PropertyReport check_property(const FiniteFunction& f, Property which);
/// Seeded sampling; verdict HoldsOnSample or Fails.
PropertyReport check_property(const SymbolicFunction& f, Property which, const SampleBudget& budget);

/// Largest number of pairs enumerated before powerset domains switch to
/// the singleton-decomposition check.
inline constexpr std::uint64_t kPairBudget = std::uint64_t{1} << 24;

// ---------------------------------------------------------------------------
// Built-in functions
// ---------------------------------------------------------------------------

/// |A| on powerset(m).
FiniteFunction counting_measure(const FiniteStructure& powerset, const Codomain& codomain = Codomain::integers());
/// |A| / m on powerset(m), rational.
FiniteFunction uniform_probability(const FiniteStructure& powerset);
/// p(A) = sum of weights over A; weights has one entry per base point.
FiniteFunction weighted_probability(const FiniteStructure& powerset, const std::vector<Value>& weights);

/// The outcome space {0,1}^n is modeled as powerset(2^n): outcome w is the
/// base point w+1 and coordinate j of w is bit j of w.
FiniteStructure product_space(unsigned n);
/// The event "coordinate j equals 1" in product_space(n).
Index coordinate_event(unsigned n, unsigned j);

/// Symbolic built-ins, addressed from the CLI by these names:
///   const:v, identity, numerator-parity, indicator-cofinite,
///   interval-length, piecewise:label=v,...,default=v (labels in the
///   domain's element syntax).
SymbolicFunction make_symbolic_function(const SymbolicStructure& domain, const Codomain& codomain,
                                        std::string_view spec);

}  // namespace semimod
