#include "oracles.hpp"

#include "semimod/errors.hpp"
#include "semimod/identities.hpp"
#include "semimod/instances.hpp"

#include <gtest/gtest.h>

using namespace semimod;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

std::vector<Identity> all_identities() {
  return {Identity::C1, Identity::C2, Identity::N1, Identity::N2, Identity::P1,
          Identity::P2, Identity::P3, Identity::L1, Identity::MOD, Identity::FA};
}

}  // namespace

TEST(Identity, NamesRoundTrip) {
  for (Identity id : all_identities()) EXPECT_EQ(parse_identity(to_string(id)), id);
  EXPECT_THROW(parse_identity("Q7"), ParseError);
  EXPECT_EQ(identity_arity(Identity::N1), 1u);
  EXPECT_EQ(identity_arity(Identity::C2), 2u);
}

TEST(Identity, C1CountingExample) {
  const FiniteStructure s = FiniteStructure::powerset(3);
  const FiniteFunction f = counting_measure(s);
  // f({1,2}) = f({2}) + f({1}).
  const PropertyReport r = verify_identity(f, Identity::C1, {s.index_of("{2,3}"), s.index_of("{1,2}")});
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_EQ(r.lhs, q(2));
  EXPECT_EQ(r.rhs, q(2));
}

TEST(Identity, N2OnTheProductSpace) {
  const FiniteStructure s = product_space(2);
  const FiniteFunction p = uniform_probability(s);
  const PropertyReport r = verify_identity(p, Identity::N2, {coordinate_event(2, 0), coordinate_event(2, 1)});
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_EQ(r.lhs, q(1, 4));
  EXPECT_EQ(r.rhs, q(1, 4));
}

TEST(Identity, EveryIdentityHoldsForUniformProbability) {
  const FiniteStructure s = FiniteStructure::powerset(3);
  const FiniteFunction p = uniform_probability(s);
  for (Identity id : all_identities()) {
    for (Index a = 0; a < s.size(); ++a) {
      for (Index b = 0; b < s.size(); ++b) {
        if (id == Identity::FA && (a & b) != 0) continue;
        std::vector<Index> args{a};
        if (identity_arity(id) == 2) args.push_back(b);
        if (id == Identity::MOD || id == Identity::L1) {
          EXPECT_TRUE(verify_identity(p, id, args, {2, 3}).holds());
        } else {
          EXPECT_TRUE(verify_identity(p, id, args).holds()) << to_string(id);
        }
      }
    }
  }
}

TEST(Identity, C2MatchesSetArithmetic) {
  const FiniteStructure s = FiniteStructure::powerset(4);
  const FiniteFunction f = counting_measure(s);
  for (Index a = 0; a < s.size(); ++a) {
    for (Index b = 0; b < s.size(); ++b) {
      const PropertyReport r = verify_identity(f, Identity::C2, {a, b});
      const auto sa = oracle::set_of_mask(a), sb = oracle::set_of_mask(b);
      const auto lhs = oracle::set_symdiff(sa, sb).size() + 2 * oracle::set_intersection(sa, sb).size();
      EXPECT_EQ(r.lhs, q(static_cast<std::int64_t>(lhs)));
      EXPECT_TRUE(r.holds());
    }
  }
}

TEST(Identity, L1OnSimpleSemirings) {
  // Truncation(2) is not simple; B(4,2) is not simple either.
  const FiniteStructure t = make_finite(Truncation{2});
  const FiniteFunction ft = FiniteFunction::from_rule(t, Codomain::integers(), [](Index) { return q(1); });
  EXPECT_THROW(verify_identity(ft, Identity::L1, {1, 2}, {2, 3}), HypothesisError);

  const FiniteStructure c = make_finite(BottleneckChain{4, true});
  const FiniteFunction fc = FiniteFunction::from_rule(c, Codomain::integers(), [](Index i) { return q(i * i); });
  for (Index x = 0; x < 4; ++x) {
    for (Index y = 0; y < 4; ++y) EXPECT_EQ(verify_identity(fc, Identity::L1, {x, y}, {3, 2}).verdict, Verdict::Holds);
  }
}

TEST(Identity, HypothesisFailuresAreNotIdentityFailures) {
  const FiniteStructure s = FiniteStructure::powerset(2);
  const FiniteFunction one = FiniteFunction::from_rule(s, Codomain::rationals(), [](Index) { return q(1); });
  EXPECT_THROW(verify_identity(one, Identity::C1, {1, 2}), HypothesisError);
  const FiniteFunction twice = counting_measure(s, Codomain::rationals());
  EXPECT_THROW(verify_identity(twice, Identity::N1, {1}), HypothesisError);
  EXPECT_THROW(verify_identity(twice, Identity::P1, {1}), HypothesisError);
  EXPECT_THROW(verify_identity(twice, Identity::FA, {1, 3}), HypothesisError);

  // 1 in Truncation(2) is not complemented.
  const FiniteStructure t = make_finite(Truncation{2});
  const FiniteFunction ft = FiniteFunction::from_rule(t, Codomain::integers(), [](Index) { return q(0); });
  EXPECT_THROW(verify_identity(ft, Identity::C1, {t.index_of("1"), t.index_of("0")}), HypothesisError);
}

TEST(Identity, WrongArityOrIndexIsRejected) {
  const FiniteStructure s = FiniteStructure::powerset(2);
  const FiniteFunction f = counting_measure(s);
  EXPECT_THROW(verify_identity(f, Identity::C1, {1}), ParameterError);
  EXPECT_THROW(verify_identity(f, Identity::C1, {1, 9}), DomainError);
}

TEST(Identity, ModFailureWitnessReproduces) {
  const FiniteStructure s = make_finite(BnI{4, 2});
  const oracle::Table t = oracle::bni_table(4, 2);
  const std::vector<unsigned> table{0, 1, 1, 2};
  const FiniteFunction f = FiniteFunction::from_rule(s, Codomain::integers(), [&](Index i) { return q(table[i]); });
  int fails = 0;
  for (Index a = 0; a < 4; ++a) {
    for (Index b = 0; b < 4; ++b) {
      const PropertyReport r = verify_identity(f, Identity::MOD, {a, b});
      const bool ok = table[t.plus(a, b)] + table[t.times(a, b)] == table[a] + table[b];
      EXPECT_EQ(r.holds(), ok);
      if (!ok) ++fails;
    }
  }
  EXPECT_GT(fails, 0);
}
