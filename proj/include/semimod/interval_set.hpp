/**
 * @file interval_set.hpp
 * @brief Carriers of the set-algebra instances: finite unions of rational
 *        intervals and finite/cofinite subsets of the naturals.
 */
#pragma once

#include "semimod/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace semimod {

/// One interval with rational endpoints. Empty intervals are allowed as
/// input and dropped by canonicalization.
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool empty() const {
    return hi < lo || (lo == hi && !(lo_closed && hi_closed));
  }
  bool operator==(const Interval&) const = default;
};

/// Finite union of intervals in canonical form: sorted, pairwise disjoint,
/// and no two neighbours can be merged into a single interval. Two sets are
/// equal as point sets iff their canonical forms are equal.
class IntervalUnionSet {
 public:
  IntervalUnionSet() = default;

  /// Canonicalizes an arbitrary list of (possibly overlapping) intervals.
  static IntervalUnionSet from(std::vector<Interval> parts);
  static IntervalUnionSet closed(const Rational& lo, const Rational& hi);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  IntervalUnionSet unite(const IntervalUnionSet& other) const;
  IntervalUnionSet intersect(const IntervalUnionSet& other) const;
  /// Complement relative to [lo, hi]; the set must lie inside [lo, hi].
  IntervalUnionSet complement_within(const Rational& lo, const Rational& hi) const;
  bool within(const Rational& lo, const Rational& hi) const;

  /// Sum of interval lengths.
  Rational length() const;

  bool operator==(const IntervalUnionSet&) const = default;

 private:
  std::vector<Interval> parts_;
};

/// "[0,1/2)U(3/4,1]"; the empty set prints as "empty".
std::string to_string(const IntervalUnionSet& set);
/// Inverse of to_string. Accepts non-canonical input and canonicalizes it.
IntervalUnionSet parse_interval_union(std::string_view text);

/// Sum of lengths divided by (hi - lo). Openness of endpoints is irrelevant.
Rational interval_length_prob(const IntervalUnionSet& set, const Rational& lo,
                              const Rational& hi);

/// Subset of the naturals that is finite or has finite complement. `members`
/// lists the set itself when finite and its complement when cofinite.
class FiniteCofiniteSet {
 public:
  FiniteCofiniteSet() = default;
  static FiniteCofiniteSet finite(std::vector<std::uint64_t> members);
  static FiniteCofiniteSet cofinite(std::vector<std::uint64_t> missing);

  bool is_cofinite() const { return cofinite_; }
  const std::vector<std::uint64_t>& members() const { return members_; }

  FiniteCofiniteSet unite(const FiniteCofiniteSet& other) const;
  FiniteCofiniteSet intersect(const FiniteCofiniteSet& other) const;
  FiniteCofiniteSet complement() const;

  bool operator==(const FiniteCofiniteSet&) const = default;

 private:
  FiniteCofiniteSet(bool cofinite, std::vector<std::uint64_t> members);

  bool cofinite_ = false;
  std::vector<std::uint64_t> members_;
};

/// "fin{1,3}" or "cofin{2}".
std::string to_string(const FiniteCofiniteSet& set);
FiniteCofiniteSet parse_finite_cofinite(std::string_view text);

}  // namespace semimod
