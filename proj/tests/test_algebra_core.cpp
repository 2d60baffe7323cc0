#include "oracles.hpp"

#include "semimod/axioms.hpp"
#include "semimod/errors.hpp"
#include "semimod/instances.hpp"
#include "semimod/rational.hpp"
#include "semimod/rng.hpp"
#include "semimod/structure.hpp"

#include <gtest/gtest.h>

using namespace semimod;

namespace {

StructureTables tables_of(const oracle::Table& t) {
  StructureTables out;
  out.size = t.n;
  out.add.assign(t.add.begin(), t.add.end());
  out.mul.assign(t.mul.begin(), t.mul.end());
  return out;
}

FiniteStructure boolean2() {
  StructureTables t;
  t.size = 2;
  t.add = {0, 1, 1, 1};
  t.mul = {0, 0, 0, 1};
  t.zero = 0;
  t.one = 1;
  return FiniteStructure::from_tables(t);
}

}  // namespace

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
  EXPECT_EQ(to_string(parse_rational("-3")), "-3");
  EXPECT_EQ(parse_rational("6/3"), make_rational(2));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Rational, OverflowThrowsInsteadOfWrapping) {
  Rational big(Integer(1) << 100);
  EXPECT_THROW(big * big, std::overflow_error);
}

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(a.below(1000), b.below(1000));
}

TEST(Rng, BoundedDrawsStayInRange) {
  Rng r(7);
  for (int k = 0; k < 10000; ++k) {
    const auto v = r.between(-5, 5);
    EXPECT_GE(v, -5);
    EXPECT_LE(v, 5);
  }
}

TEST(Classify, TwoElementBooleanIsSemiring) {
  const AxiomReport r = classify_structure(boolean2());
  EXPECT_EQ(r.verified_class, StructureClass::Semiring);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Classify, BniTablesFromTheCongruenceRuleAreSemirings) {
  auto t = tables_of(oracle::bni_table(4, 2));
  t.zero = 0;
  t.one = 1;
  const FiniteStructure s = FiniteStructure::from_tables(t);
  EXPECT_EQ(classify_structure(s).verified_class, StructureClass::Semiring);
  EXPECT_EQ(s, make_finite(BnI{4, 2}));
}

TEST(Classify, MutatedCellBreaksDistributivityWithReproducibleWitness) {
  auto t = tables_of(oracle::bni_table(4, 2));
  t.zero = 0;
  t.mul[1 * 4 + 2] = 3;
  t.mul[2 * 4 + 1] = 3;
  const FiniteStructure s = FiniteStructure::from_tables(t);
  const AxiomReport r = classify_structure(s);
  EXPECT_FALSE(r.holds(Axiom::Distributive));
  EXPECT_LT(r.verified_class, StructureClass::Semiring);
  bool found = false;
  for (const auto& v : r.violations) {
    if (v.axiom != Axiom::Distributive) continue;
    found = true;
    ASSERT_EQ(v.indices.size(), 3u);
    const Index a = v.indices[0], b = v.indices[1], c = v.indices[2];
    const bool left = s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c));
    const bool right = s.mul(s.add(a, b), c) != s.add(s.mul(a, c), s.mul(b, c));
    EXPECT_TRUE(left || right);
  }
  EXPECT_TRUE(found);
}

TEST(Classify, OutOfRangeIndexIsAStructuralError) {
  StructureTables t;
  t.size = 2;
  t.add = {0, 1, 1, 2};
  t.mul = {0, 0, 0, 1};
  EXPECT_THROW(FiniteStructure::from_tables(t), StructureError);
}

TEST(Classify, DeclaredZeroThatIsNotNeutralIsRejected) {
  StructureTables t;
  t.size = 2;
  t.add = {0, 1, 1, 1};
  t.mul = {0, 0, 0, 1};
  t.zero = 1;
  EXPECT_THROW(FiniteStructure::from_tables(t), StructureError);
}

TEST(Classify, EveryBuiltinInstanceInRange) {
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned i = 1; i < n; ++i) {
      const AxiomReport r = classify_structure(make_finite(BnI{n, i}));
      EXPECT_EQ(r.verified_class, StructureClass::Semiring) << "bni " << n << "," << i;
      EXPECT_TRUE(r.violations.empty());
      EXPECT_TRUE(oracle::is_semiring(oracle::bni_table(n, i), 0, 1));
    }
  }
  for (unsigned k = 1; k <= 4; ++k) {
    EXPECT_EQ(classify_structure(make_finite(Truncation{k})).verified_class, StructureClass::Semiring);
  }
  for (unsigned m = 1; m <= 4; ++m) {
    EXPECT_EQ(classify_structure(make_finite(BooleanPowerset{m})).verified_class, StructureClass::Semiring);
  }
  for (unsigned n = 1; n <= 5; ++n) {
    const AxiomReport r = classify_structure(make_finite(BottleneckChain{n}));
    EXPECT_EQ(r.verified_class, StructureClass::PreSemiring) << n;
    EXPECT_TRUE(r.violations.empty());
  }
  for (unsigned n = 2; n <= 5; ++n) {
    EXPECT_EQ(classify_structure(make_finite(BottleneckChain{n, true})).verified_class, StructureClass::Semiring);
  }
}

TEST(Classify, VerificationIsIdempotentOnRandomTuples) {
  Rng rng(3);
  for (const FiniteKind& kind : {FiniteKind{BnI{6, 3}}, FiniteKind{Truncation{4}}, FiniteKind{BooleanPowerset{4}}}) {
    const FiniteStructure s = make_finite(kind);
    ASSERT_EQ(classify_structure(s).verified_class, StructureClass::Semiring);
    for (int k = 0; k < 1000; ++k) {
      const auto a = static_cast<Index>(rng.below(s.size()));
      const auto b = static_cast<Index>(rng.below(s.size()));
      const auto c = static_cast<Index>(rng.below(s.size()));
      EXPECT_EQ(s.add(a, s.add(b, c)), s.add(s.add(a, b), c));
      EXPECT_EQ(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c)));
      EXPECT_EQ(s.mul(a, *s.zero()), *s.zero());
    }
  }
}

TEST(Classify, SymbolicReportIsDeterministicAndLabeledSampled) {
  const SymbolicStructure s = make_symbolic({SymbolicFamily::Tropical});
  const AxiomReport a = classify_structure(s, {2000, 9});
  const AxiomReport b = classify_structure(s, {2000, 9});
  EXPECT_TRUE(a.sampled);
  EXPECT_EQ(a.verified_class, b.verified_class);
  EXPECT_EQ(a.checked_tuples, b.checked_tuples);
  EXPECT_EQ(a.verified_class, StructureClass::Semiring);
}

TEST(Flags, PowersetOfThreeSet) {
  const StructureFlags f = structure_flags(make_finite(BooleanPowerset{3}));
  EXPECT_TRUE(f.zerosumfree.holds());
  EXPECT_TRUE(f.simple.holds());
  EXPECT_TRUE(f.multiplicatively_idempotent.holds());
  // Disjoint nonempty sets are zero divisors, so the powerset is not entire.
  EXPECT_EQ(f.entire.status, FlagStatus::Fails);
  ASSERT_EQ(f.entire.indices.size(), 2u);
  const FiniteStructure s = make_finite(BooleanPowerset{3});
  EXPECT_EQ(s.mul(f.entire.indices[0], f.entire.indices[1]), *s.zero());
}

TEST(Flags, Bni42AsRecorded) {
  const FiniteStructure s = make_finite(BnI{4, 2});
  const StructureFlags f = structure_flags(s);
  EXPECT_TRUE(f.zerosumfree.holds());
  // The wrap keeps every product of nonzero elements nonzero.
  EXPECT_TRUE(f.entire.holds());
  for (Index a = 1; a < 4; ++a) {
    for (Index b = 1; b < 4; ++b) EXPECT_NE(s.mul(a, b), 0u);
  }
  EXPECT_EQ(f.simple.status, FlagStatus::Fails);
}

TEST(Flags, TruncationTwoIsNotSimple) {
  const FiniteStructure s = make_finite(Truncation{2});
  const FlagResult r = decide_flag(s, Flag::Simple);
  EXPECT_EQ(r.status, FlagStatus::Fails);
  ASSERT_EQ(r.indices.size(), 1u);
  EXPECT_NE(s.add(r.indices[0], *s.one()), *s.one());
}

TEST(Flags, MissingZeroIsInapplicable) {
  const FiniteStructure chain = make_finite(BottleneckChain{3});
  EXPECT_THROW(decide_flag(chain, Flag::Zerosumfree), InapplicableError);
  EXPECT_EQ(structure_flags(chain).entire.status, FlagStatus::Inapplicable);
}

TEST(Emit, RoundTripThroughTables) {
  const FiniteStructure s = make_finite(Truncation{3});
  const FiniteStructure back = FiniteStructure::from_tables(s.tables());
  EXPECT_EQ(s, back);
  EXPECT_NE(emit_structure(s).find("semiring v1"), std::string::npos);
}
