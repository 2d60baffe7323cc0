#include "oracles.hpp"

#include "semimod/errors.hpp"
#include "semimod/function.hpp"
#include "semimod/inclusion_exclusion.hpp"
#include "semimod/instances.hpp"

#include <gtest/gtest.h>

#include <bit>

using namespace semimod;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

bool frac_eq(const Rational& r, oracle::Frac f) {
  return r == make_rational(f.num, f.den);
}

}  // namespace

TEST(Codomain, ModularReduction) {
  const Codomain z3 = Codomain::integers_mod(3);
  EXPECT_EQ(z3.normalize(q(-1)), q(2));
  EXPECT_EQ(z3.plus(q(2), q(2)), q(1));
  EXPECT_THROW(z3.normalize(q(1, 2)), DomainError);
  EXPECT_THROW(Codomain::integers_mod(0), ParameterError);
  EXPECT_EQ(parse_codomain("zmod 5"), Codomain::integers_mod(5));
}

TEST(Codomain, MulRationalUsesMultiplication) {
  const Codomain m = Codomain::positive_rationals();
  EXPECT_EQ(m.plus(q(2), q(3)), q(6));
  EXPECT_EQ(m.neutral(), q(1));
  EXPECT_EQ(m.negate(q(4)), q(1, 4));
  EXPECT_FALSE(m.contains(q(0)));
  EXPECT_THROW(m.times(q(1), q(1)), InapplicableError);
}

TEST(CountingMeasure, IsAdditiveAndModular) {
  for (unsigned m = 1; m <= 6; ++m) {
    const FiniteStructure s = FiniteStructure::powerset(m);
    const FiniteFunction f = counting_measure(s);
    for (Index a = 0; a < s.size(); ++a) EXPECT_EQ(f(a), q(oracle::set_of_mask(a).size()));
    EXPECT_EQ(check_property(f, Property::FinitelyAdditive).verdict, Verdict::Holds);
    EXPECT_EQ(check_property(f, Property::Modular).verdict, Verdict::Holds);
    EXPECT_EQ(check_property(f, Property::Normalized).holds(), m == 1);
  }
}

TEST(UniformProbability, PassesAllClauses) {
  const FiniteStructure s = FiniteStructure::powerset(4);
  const FiniteFunction p = uniform_probability(s);
  EXPECT_EQ(check_property(p, Property::Probability).verdict, Verdict::Holds);
  EXPECT_EQ(p(s.index_of("{1,3}")), q(1, 2));
}

TEST(WeightedProbability, ThreePointExample) {
  const FiniteStructure s = FiniteStructure::powerset(3);
  const std::vector<oracle::Frac> w{{1, 2}, {1, 3}, {1, 6}};
  const FiniteFunction p = weighted_probability(s, {q(1, 2), q(1, 3), q(1, 6)});
  EXPECT_EQ(check_property(p, Property::Probability).verdict, Verdict::Holds);
  for (Index a = 0; a < s.size(); ++a) {
    oracle::Frac expect(0);
    for (int x : oracle::set_of_mask(a)) expect = expect + w[static_cast<std::size_t>(x - 1)];
    EXPECT_TRUE(frac_eq(p(a), expect)) << s.name(a);
  }
}

TEST(Probability, ClausesReportTheirWitness) {
  const FiniteStructure s = FiniteStructure::powerset(2);
  const FiniteFunction neg(s, Codomain::rationals(), {q(0), q(-1), q(2), q(1)});
  const PropertyReport r1 = check_property(neg, Property::Probability);
  EXPECT_EQ(r1.verdict, Verdict::Fails);
  EXPECT_EQ(r1.witness, std::vector<std::string>{"{1}"});

  const FiniteFunction big = counting_measure(s, Codomain::rationals());
  const PropertyReport r2 = check_property(big, Property::Probability);
  EXPECT_EQ(r2.verdict, Verdict::Fails);
  EXPECT_EQ(r2.witness, std::vector<std::string>{"{1,2}"});

  const FiniteFunction na(s, Codomain::rationals(), {q(0), q(1, 2), q(1, 2), q(1)});
  EXPECT_EQ(check_property(na, Property::Probability).verdict, Verdict::Holds);
  const FiniteFunction nb(s, Codomain::rationals(), {q(0), q(1, 4), q(1, 4), q(1)});
  const PropertyReport r3 = check_property(nb, Property::Probability);
  EXPECT_EQ(r3.verdict, Verdict::Fails);
  EXPECT_EQ(r3.witness.size(), 2u);
}

TEST(Probability, ModularCodomainIsInapplicable) {
  const FiniteStructure s = FiniteStructure::powerset(2);
  EXPECT_THROW(check_property(counting_measure(s, Codomain::integers_mod(3)), Property::Probability),
               InapplicableError);
}

TEST(FiniteFunction, RejectsBadValues) {
  const FiniteStructure s = FiniteStructure::powerset(1);
  EXPECT_THROW(FiniteFunction(s, Codomain::integers(), {q(0)}), DomainError);
  EXPECT_THROW(FiniteFunction(s, Codomain::integers(), {q(0), q(1, 2)}), DomainError);
  EXPECT_THROW(FiniteFunction(s, Codomain::positive_rationals(), {q(1), q(0)}), DomainError);
}

TEST(Modular, WitnessReproducesOnTruncation) {
  const FiniteStructure s = make_finite(Truncation{2});
  // f(x) = value + 1, f(ninf) = 0: not modular since max(a,b) + sat(a+b) differs from a + b.
  const FiniteFunction f = FiniteFunction::from_rule(s, Codomain::integers(), [](Index i) { return q(i); });
  const PropertyReport r = check_property(f, Property::Modular);
  ASSERT_EQ(r.verdict, Verdict::Fails);
  ASSERT_EQ(r.witness_indices.size(), 2u);
  const auto t = oracle::truncation_table(2);
  const unsigned a = r.witness_indices[0], b = r.witness_indices[1];
  EXPECT_NE(t.plus(a, b) + t.times(a, b), a + b);
}

TEST(Modular, AgreesWithOracleOnSmallTables) {
  const FiniteStructure s = make_finite(BnI{4, 2});
  const oracle::Table t = oracle::bni_table(4, 2);
  const Codomain c = Codomain::integers_mod(3);
  oracle::each_function(4, 3, [&](const std::vector<unsigned>& table) {
    std::vector<Value> v;
    for (auto x : table) v.push_back(q(x));
    const FiniteFunction f(s, c, v);
    EXPECT_EQ(check_property(f, Property::Modular).holds(), oracle::modular_on(t, table, 3));
    EXPECT_EQ(check_property(f, Property::FinitelyAdditive).holds(), oracle::additive_on(t, table, 3, 0));
  });
}

TEST(SingletonDecomposition, PowersetThirteenCountingMeasure) {
  const FiniteStructure s = FiniteStructure::powerset(13);
  const FiniteFunction f = counting_measure(s);
  const PropertyReport fa = check_property(f, Property::FinitelyAdditive);
  const PropertyReport mod = check_property(f, Property::Modular);
  EXPECT_EQ(fa.verdict, Verdict::Holds);
  EXPECT_EQ(mod.verdict, Verdict::Holds);
  // 3^13 disjoint pairs fit the budget; 2^26 ordered pairs do not.
  EXPECT_EQ(fa.checked, 1594323u);
  EXPECT_EQ(mod.note, "decided by singleton decomposition");
  const PropertyReport big = check_property(counting_measure(FiniteStructure::powerset(16)),
                                            Property::FinitelyAdditive);
  EXPECT_EQ(big.verdict, Verdict::Holds);
  EXPECT_EQ(big.note, "decided by singleton decomposition");
}

TEST(SingletonDecomposition, PerturbedValueIsCaught) {
  const FiniteStructure s = FiniteStructure::powerset(13);
  for (Index bad : {Index{3}, Index{0x1A5}, Index{0x1FFF}, Index{1}}) {
    const FiniteFunction f = FiniteFunction::from_rule(s, Codomain::integers(), [&](Index a) {
      return q(static_cast<std::int64_t>(std::popcount(a)) + (a == bad ? 1 : 0));
    });
    for (Property p : {Property::FinitelyAdditive, Property::Modular}) {
      const PropertyReport r = check_property(f, p);
      ASSERT_EQ(r.verdict, Verdict::Fails) << bad;
      ASSERT_EQ(r.witness_indices.size(), 2u);
      const Index a = r.witness_indices[0], b = r.witness_indices[1];
      const auto val = [&](Index x) -> std::int64_t { return std::popcount(x) + (x == bad ? 1 : 0); };
      if (p == Property::Modular) {
        EXPECT_NE(val(a | b) + val(a & b), val(a) + val(b));
      } else {
        EXPECT_EQ(a & b, 0u);
        EXPECT_NE(val(a | b), val(a) + val(b));
      }
    }
  }
}

TEST(BooleanCorollary, AllFunctionsOnPowersetTwoIntoZ4) {
  const FiniteStructure s = FiniteStructure::powerset(2);
  const oracle::Table t = oracle::make_table(
      4, [](unsigned a, unsigned b) { return a | b; }, [](unsigned a, unsigned b) { return a & b; });
  int count = 0, additive = 0;
  oracle::each_function(4, 4, [&](const std::vector<unsigned>& table) {
    std::vector<Value> v;
    for (auto x : table) v.push_back(q(x));
    const CorollaryCheck c = boolean_corollary(FiniteFunction(s, Codomain::integers_mod(4), v));
    ++count;
    EXPECT_TRUE(c.equivalence_holds());
    EXPECT_EQ(c.finitely_additive, oracle::additive_on(t, table, 4, 0));
    EXPECT_EQ(c.modular, oracle::modular_on(t, table, 4));
    EXPECT_EQ(c.zero_at_zero, table[0] == 0);
    if (c.finitely_additive) ++additive;
  });
  EXPECT_EQ(count, 256);
  EXPECT_EQ(additive, 16);
}

TEST(Symbolic, GcdTimesLcmIdentityIsModularIntoMulRational) {
  const SymbolicStructure s = make_symbolic({SymbolicFamily::LcmGcd});
  const SymbolicFunction f = make_symbolic_function(s, Codomain::positive_rationals(), "identity");
  const PropertyReport r = check_property(f, Property::Modular, {5000, 4});
  EXPECT_EQ(r.verdict, Verdict::HoldsOnSample);
  EXPECT_EQ(r.checked, 5000u);
}

TEST(Symbolic, IdentityIsNotModularIntoTheIntegers) {
  const SymbolicStructure s = make_symbolic({SymbolicFamily::LcmGcd});
  const SymbolicFunction f = make_symbolic_function(s, Codomain::integers(), "identity");
  const PropertyReport r = check_property(f, Property::Modular, {5000, 4});
  ASSERT_EQ(r.verdict, Verdict::Fails);
  ASSERT_EQ(r.witness.size(), 2u);
  const std::int64_t a = std::stoll(r.witness[0]), b = std::stoll(r.witness[1]);
  EXPECT_NE(std::lcm(a, b) + std::gcd(a, b), a + b);
}

TEST(Symbolic, SampledVerdictIsDeterministic) {
  const SymbolicStructure s = make_symbolic({SymbolicFamily::Tropical});
  const SymbolicFunction f = make_symbolic_function(s, Codomain::integers(), "const:3");
  const PropertyReport a = check_property(f, Property::Modular, {1000, 2});
  const PropertyReport b = check_property(f, Property::Modular, {1000, 2});
  EXPECT_EQ(a.verdict, Verdict::HoldsOnSample);
  EXPECT_EQ(a.checked, b.checked);
  EXPECT_THROW(make_symbolic_function(s, Codomain::integers(), "nonsense"), ParseError);
}

TEST(ProductSpace, CoordinateEvents) {
  const FiniteStructure s = product_space(2);
  EXPECT_EQ(s.size(), 16u);
  const FiniteFunction p = uniform_probability(s);
  EXPECT_EQ(p(coordinate_event(2, 0)), q(1, 2));
  EXPECT_EQ(p(s.mul(coordinate_event(2, 0), coordinate_event(2, 1))), q(1, 4));
}
