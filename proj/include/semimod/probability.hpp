/**
 * @file probability.hpp
 * @brief Independence, the complement semi-metric, conditional probability,
 *        total probability, Bayes, Boole's inequality and parallel systems
 *        over finite domains.
 *
 * Every operation verifies its hypotheses and throws HypothesisError (or
 * ConditioningError for a non-invertible conditioning value) before any
 * conclusion is evaluated. All arithmetic is exact.
 */
#pragma once

#include "semimod/function.hpp"

#include <vector>

namespace semimod {

/// f(prod X) = prod f(x) for every nonempty X, subsets by size then
/// lexicographic. Requires a ring codomain.
PropertyReport are_independent(const FiniteFunction& f, const std::vector<Index>& elements);

struct IndependenceEquivalence {
  bool independent = false;              // condition (1)
  bool all_patterns_independent = false;  // condition (2)
  bool all_pattern_products = false;      // condition (3)
  /// Holds iff the three conditions agree; witness names a disagreeing
  /// condition and pattern.
  PropertyReport report;
};

/// The three equivalent conditions on s_i and their complements. Sign
/// pattern k complements s_i when bit i of k is set.
IndependenceEquivalence independence_complement_equiv(const FiniteFunction& f,
                                                      const std::vector<Index>& elements);

struct MetricResult {
  std::vector<Index> points;
  /// Row-major distances d(points[i], points[j]).
  std::vector<Value> distance;
  bool positive = false;  // f(x) = 0 only at x = 0
  bool metric = false;    // positive and d(s,t) = 0 implies s = t
  PropertyReport report;  // semi-metric axioms

  const Value& at(std::size_t i, std::size_t j) const { return distance[i * points.size() + j]; }
};

/// d(s,t) = f(s△t) on the given complemented points (all of comp(S) when
/// empty).
MetricResult semi_metric(const FiniteFunction& f, const std::vector<Index>& points = {});

/// p(s|t) = p(st) / p(t).
Value conditional(const FiniteFunction& p, Index s, Index t);

struct ConditionalFunction {
  FiniteFunction function;
  PropertyReport probability;
};
/// p_t(s) = p(s|t), returned only after passing the probability check.
ConditionalFunction conditional_function(const FiniteFunction& p, Index t);

struct TotalProbability {
  Value direct;
  Value decomposed;
  PropertyReport report;
};
TotalProbability total_probability(const FiniteFunction& p, Index s, const std::vector<Index>& partition);

struct BayesResult {
  Value posterior;                // via the formula
  Value direct;                   // p(t_k | s)
  std::vector<Value> posteriors;  // every k
  Value posterior_sum;
  PropertyReport report;
};
/// k is zero-based.
BayesResult bayes(const FiniteFunction& p, Index s, const std::vector<Index>& partition, std::size_t k);

struct InequalityResult {
  Value lhs;
  Value rhs;
  PropertyReport report;
};

/// p(sum s_i) <= sum p(s_i), computed through disjointification.
InequalityResult boole_bound(const FiniteFunction& p, const std::vector<Index>& elements);
/// f(sum s_i) = 1 - prod (1 - f(s_i)).
InequalityResult parallel_systems(const FiniteFunction& f, const std::vector<Index>& elements);

}  // namespace semimod
