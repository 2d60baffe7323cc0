#include "oracles.hpp"

#include "semimod/complements.hpp"
#include "semimod/errors.hpp"
#include "semimod/probability.hpp"

#include <gtest/gtest.h>

using namespace semimod;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

// Outcomes of {0,1}^n that satisfy pred, as a mask over base points w+1.
Index outcome_event(unsigned n, const std::function<bool(unsigned)>& pred) {
  Index mask = 0;
  for (unsigned w = 0; w < (1u << n); ++w) {
    if (pred(w)) mask |= Index{1} << w;
  }
  return mask;
}

Index coord(unsigned n, unsigned j) {
  return outcome_event(n, [=](unsigned w) { return (w >> j & 1u) != 0; });
}

oracle::Frac uniform(Index event, unsigned points) {
  return {static_cast<std::int64_t>(oracle::set_of_mask(event).size()), points};
}

bool same(const Rational& r, oracle::Frac f) { return r == make_rational(f.num, f.den); }

}  // namespace

TEST(ProductSpace, CoordinateEventMatchesOracle) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned j = 0; j < n; ++j) EXPECT_EQ(coordinate_event(n, j), coord(n, j));
  }
}

TEST(Independence, CoordinatesOfTheProductSpace) {
  const FiniteStructure s = product_space(2);
  const FiniteFunction p = uniform_probability(s);
  EXPECT_EQ(are_independent(p, {coord(2, 0), coord(2, 1)}).verdict, Verdict::Holds);
  EXPECT_EQ(are_independent(p, {*s.one()}).verdict, Verdict::Holds);
  const PropertyReport same_event = are_independent(p, {coord(2, 0), coord(2, 0)});
  EXPECT_EQ(same_event.verdict, Verdict::Fails);
  EXPECT_EQ(same_event.lhs, q(1, 2));
  EXPECT_EQ(same_event.rhs, q(1, 4));
}

TEST(Independence, EquivalenceOfTheThreeConditions) {
  const FiniteStructure s = product_space(2);
  const FiniteFunction p = uniform_probability(s);
  const auto good = independence_complement_equiv(p, {coord(2, 0), coord(2, 1)});
  EXPECT_TRUE(good.independent && good.all_patterns_independent && good.all_pattern_products);
  EXPECT_TRUE(good.report.holds());
  const Index c0 = *complement(s, coord(2, 0));
  EXPECT_EQ(p(s.mul(c0, coord(2, 1))), p(c0) * p(coord(2, 1)));
  EXPECT_EQ(p(s.mul(c0, coord(2, 1))), q(1, 4));

  const auto bad = independence_complement_equiv(p, {coord(2, 0), coord(2, 0)});
  EXPECT_FALSE(bad.independent || bad.all_patterns_independent || bad.all_pattern_products);
  EXPECT_TRUE(bad.report.holds());
}

TEST(Independence, EquivalenceOnEveryCoordinateTupleUpToFour) {
  for (unsigned n = 2; n <= 4; ++n) {
    const FiniteStructure s = product_space(n);
    const FiniteFunction p = uniform_probability(s);
    std::vector<Index> events;
    for (unsigned j = 0; j < n; ++j) events.push_back(coord(n, j));
    // Parity of the first two coordinates is pairwise independent of each
    // but not jointly with both.
    const Index parity = outcome_event(n, [](unsigned w) { return ((w ^ (w >> 1)) & 1u) != 0; });
    for (const auto& tuple : {events, std::vector<Index>{events[0], events[1], parity}}) {
      const auto r = independence_complement_equiv(p, tuple);
      EXPECT_TRUE(r.report.holds()) << n;
      EXPECT_EQ(r.independent, tuple.back() != parity);
    }
  }
}

TEST(SemiMetric, CountingExamples) {
  const FiniteStructure s = FiniteStructure::powerset(3);
  const MetricResult m = semi_metric(counting_measure(s));
  ASSERT_EQ(m.points.size(), 8u);
  EXPECT_EQ(m.at(s.index_of("{1}"), s.index_of("{2}")), q(2));
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(m.at(i, i), q(0));
  EXPECT_TRUE(m.report.holds());
  EXPECT_TRUE(m.positive);
  EXPECT_TRUE(m.metric);
}

TEST(SemiMetric, PowersetFiveTrianglesAgainstOracle) {
  const FiniteStructure s = FiniteStructure::powerset(5);
  const MetricResult m = semi_metric(counting_measure(s));
  ASSERT_EQ(m.points.size(), 32u);
  EXPECT_TRUE(m.report.holds());
  EXPECT_TRUE(m.metric);
  for (Index a = 0; a < 32; ++a) {
    for (Index b = 0; b < 32; ++b) {
      const auto d = oracle::set_symdiff(oracle::set_of_mask(a), oracle::set_of_mask(b)).size();
      EXPECT_EQ(m.at(a, b), q(static_cast<std::int64_t>(d)));
      for (Index c = 0; c < 32; ++c) EXPECT_LE(m.at(a, c), m.at(a, b) + m.at(b, c));
    }
  }
}

TEST(SemiMetric, ZeroWeightGivesASemiMetricOnly) {
  const FiniteStructure s = FiniteStructure::powerset(2);
  const MetricResult m = semi_metric(weighted_probability(s, {q(1), q(0)}));
  EXPECT_TRUE(m.report.holds());
  EXPECT_FALSE(m.positive);
  EXPECT_FALSE(m.metric);
}

TEST(SemiMetric, NegativeValuesAreAHypothesisFailure) {
  const FiniteStructure s = FiniteStructure::powerset(2);
  const FiniteFunction neg = FiniteFunction::from_rule(
      s, Codomain::integers(), [](Index a) { return q(-static_cast<std::int64_t>(oracle::set_of_mask(a).size())); });
  EXPECT_THROW(semi_metric(neg), HypothesisError);
}

TEST(Conditional, UniformDie) {
  const FiniteStructure s = FiniteStructure::powerset(6);
  const FiniteFunction p = uniform_probability(s);
  const Index a = s.index_of("{2,3}"), t = s.index_of("{1,2}");
  EXPECT_EQ(conditional(p, a, t), q(1, 2));
  EXPECT_EQ(conditional(p, t, t), q(1));
  EXPECT_EQ(conditional(p, a, *s.one()), p(a));
  EXPECT_THROW(conditional(p, a, *s.zero()), ConditioningError);
}

TEST(Conditional, FunctionIsAProbability) {
  const FiniteStructure s = FiniteStructure::powerset(4);
  const ConditionalFunction c = conditional_function(uniform_probability(s), s.index_of("{1,2}"));
  EXPECT_EQ(c.probability.verdict, Verdict::Holds);
  EXPECT_EQ(c.function(s.index_of("{1}")), q(1, 2));
  EXPECT_EQ(c.function(*s.one()), q(1));
  EXPECT_EQ(c.function(s.index_of("{1,2}")), c.function(s.index_of("{1}")) + c.function(s.index_of("{2}")));
}

TEST(TotalProbability, UniformDie) {
  const FiniteStructure s = FiniteStructure::powerset(6);
  const FiniteFunction p = uniform_probability(s);
  const std::vector<Index> part{s.index_of("{1,2}"), s.index_of("{3,4,5,6}")};
  const TotalProbability r = total_probability(p, s.index_of("{2,3}"), part);
  EXPECT_EQ(r.direct, q(1, 3));
  EXPECT_EQ(r.decomposed, q(1, 3));
  EXPECT_EQ(r.report.verdict, Verdict::Holds);
  EXPECT_EQ(total_probability(p, *s.zero(), part).decomposed, q(0));
  EXPECT_EQ(total_probability(p, *s.one(), part).decomposed, q(1));
}

TEST(TotalProbability, PartitionHypotheses) {
  const FiniteStructure s = FiniteStructure::powerset(3);
  const FiniteFunction p = uniform_probability(s);
  EXPECT_THROW(total_probability(p, 1, {s.index_of("{1,2}"), s.index_of("{2,3}")}), HypothesisError);
  EXPECT_THROW(total_probability(p, 1, {s.index_of("{1}"), s.index_of("{2}")}), HypothesisError);
  EXPECT_THROW(total_probability(p, 1, {s.index_of("{1,2,3}"), *s.zero()}), ConditioningError);
}

TEST(Bayes, UniformDie) {
  const FiniteStructure s = FiniteStructure::powerset(6);
  const FiniteFunction p = uniform_probability(s);
  const std::vector<Index> part{s.index_of("{1,2}"), s.index_of("{3,4,5,6}")};
  const Index ev = s.index_of("{2,3}");
  const BayesResult r = bayes(p, ev, part, 0);
  EXPECT_EQ(r.posterior, q(1, 2));
  EXPECT_EQ(r.direct, q(1, 2));
  EXPECT_EQ(r.posteriors[1], q(1, 2));
  EXPECT_EQ(r.posterior_sum, q(1));
  EXPECT_TRUE(r.report.holds());
  EXPECT_EQ(bayes(p, s.index_of("{1}"), part, 0).posterior, q(1));
  EXPECT_THROW(bayes(p, *s.zero(), part, 0), ConditioningError);
}

TEST(Bayes, PosteriorsSumToOneOnRandomPartitions) {
  Rng rng(5);
  const FiniteStructure s = FiniteStructure::powerset(6);
  const FiniteFunction p = weighted_probability(s, {q(1, 12), q(1, 6), q(1, 4), q(1, 12), q(1, 3), q(1, 12)});
  for (int k = 0; k < 300; ++k) {
    // Random labeling of the six points into up to three blocks.
    std::vector<Index> blocks(3, 0);
    for (unsigned x = 0; x < 6; ++x) blocks[rng.below(3)] |= Index{1} << x;
    std::vector<Index> part;
    for (Index b : blocks) {
      if (b != 0) part.push_back(b);
    }
    const Index ev = 1 + static_cast<Index>(rng.below(63));
    const BayesResult r = bayes(p, ev, part, rng.below(part.size()));
    EXPECT_EQ(r.posterior_sum, q(1));
    EXPECT_EQ(r.posterior, r.direct);
    const TotalProbability t = total_probability(p, ev, part);
    EXPECT_EQ(t.decomposed, p(ev));
  }
}

TEST(Boole, Examples) {
  const FiniteStructure s = FiniteStructure::powerset(3);
  const FiniteFunction p = uniform_probability(s);
  const InequalityResult r = boole_bound(p, {s.index_of("{1,2}"), s.index_of("{2,3}")});
  EXPECT_EQ(r.lhs, q(1));
  EXPECT_EQ(r.rhs, q(4, 3));
  EXPECT_EQ(r.report.verdict, Verdict::Holds);
  const InequalityResult d = boole_bound(p, {s.index_of("{1}"), s.index_of("{2}")});
  EXPECT_EQ(d.lhs, d.rhs);
  const InequalityResult w = boole_bound(p, {*s.one(), *s.one()});
  EXPECT_EQ(w.lhs, q(1));
  EXPECT_EQ(w.rhs, q(2));
}

TEST(Boole, RandomTuplesAgainstOracle) {
  Rng rng(8);
  for (int k = 0; k < 500; ++k) {
    const unsigned m = 1 + static_cast<unsigned>(rng.below(5));
    const FiniteStructure s = FiniteStructure::powerset(m);
    const FiniteFunction p = uniform_probability(s);
    std::vector<Index> xs;
    std::vector<oracle::Set> sets;
    oracle::Frac rhs(0);
    for (std::size_t j = 0, n = 1 + rng.below(4); j < n; ++j) {
      xs.push_back(static_cast<Index>(rng.below(s.size())));
      sets.push_back(oracle::set_of_mask(xs.back()));
      rhs = rhs + uniform(xs.back(), m);
    }
    const InequalityResult r = boole_bound(p, xs);
    EXPECT_TRUE(same(r.lhs, {static_cast<std::int64_t>(oracle::union_size(sets)), m}));
    EXPECT_TRUE(same(r.rhs, rhs));
    EXPECT_TRUE(r.report.holds());
  }
}

TEST(Parallel, ProductSpaces) {
  const FiniteStructure s2 = product_space(2);
  const InequalityResult r2 = parallel_systems(uniform_probability(s2), {coord(2, 0), coord(2, 1)});
  EXPECT_EQ(r2.lhs, q(3, 4));
  EXPECT_EQ(r2.rhs, q(3, 4));
  const FiniteStructure s3 = product_space(3);
  const InequalityResult r3 = parallel_systems(uniform_probability(s3), {coord(3, 0), coord(3, 1), coord(3, 2)});
  EXPECT_EQ(r3.lhs, q(7, 8));
  EXPECT_EQ(r3.report.verdict, Verdict::Holds);
  const InequalityResult one = parallel_systems(uniform_probability(s3), {coord(3, 2)});
  EXPECT_EQ(one.lhs, one.rhs);
  EXPECT_EQ(one.lhs, q(1, 2));
}

TEST(Parallel, DependentEventsAreRejected) {
  const FiniteStructure s = product_space(2);
  EXPECT_THROW(parallel_systems(uniform_probability(s), {coord(2, 0), coord(2, 0)}), HypothesisError);
}
