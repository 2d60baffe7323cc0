#include "oracles.hpp"

#include "semimod/axioms.hpp"
#include "semimod/complements.hpp"
#include "semimod/errors.hpp"
#include "semimod/instances.hpp"

#include <gtest/gtest.h>

using namespace semimod;

namespace {

FiniteStructure powerset(unsigned m) { return FiniteStructure::powerset(m); }

}  // namespace

TEST(Complement, PowersetIsSetComplement) {
  const FiniteStructure s = powerset(3);
  EXPECT_EQ(complement(s, s.index_of("{1,2}")), s.find("{3}"));
}

TEST(Complement, TruncationTwo) {
  const FiniteStructure s = make_finite(Truncation{2});
  EXPECT_EQ(complement(s, s.index_of("0")), s.find("ninf"));
  EXPECT_EQ(complement(s, s.index_of("1")), std::nullopt);
  const ComplementMap map = complemented_elements(s);
  EXPECT_EQ(s.names_of(map.elements), s.names_of({s.index_of("ninf"), s.index_of("0")}));
}

TEST(Complement, NeedsASemiring) {
  EXPECT_THROW(complement(make_finite(BottleneckChain{3}), 0), HypothesisError);
}

TEST(Complement, AgreesWithBruteForceScan) {
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned i = 1; i < n; ++i) {
      const FiniteStructure s = make_finite(BnI{n, i});
      const oracle::Table t = oracle::bni_table(n, i);
      for (Index x = 0; x < n; ++x) {
        const auto expect = oracle::complements_of(t, x, 0, 1);
        ASSERT_LE(expect.size(), 1u);
        const auto got = complement(s, x);
        EXPECT_EQ(got.has_value(), !expect.empty());
        if (got) EXPECT_EQ(*got, expect.front());
      }
    }
  }
}

TEST(Complement, Bni42HasOnlyZeroAndOne) {
  const FiniteStructure s = make_finite(BnI{4, 2});
  EXPECT_EQ(complemented_elements(s).elements, (std::vector<Index>{0, 1}));
}

TEST(Complement, MapInvariants) {
  for (const FiniteKind& kind : {FiniteKind{BooleanPowerset{3}}, FiniteKind{BnI{5, 2}}, FiniteKind{Truncation{3}},
                                 FiniteKind{ArcticWindow{4}}, FiniteKind{BottleneckChain{4, true}}}) {
    const FiniteStructure s = make_finite(kind);
    const ComplementMap map = complemented_elements(s);
    EXPECT_TRUE(map.contains(*s.zero()));
    EXPECT_EQ(map.of(*s.zero()), *s.one());
    for (Index x : map.elements) {
      const Index c = map.of(x);
      EXPECT_EQ(s.mul(x, c), *s.zero());
      EXPECT_EQ(s.add(x, c), *s.one());
      EXPECT_EQ(map.of(c), x);
    }
  }
}

TEST(SymmetricDifference, Examples) {
  const FiniteStructure s = powerset(3);
  EXPECT_EQ(s.name(symdiff(s, s.index_of("{1,2}"), s.index_of("{2,3}"))), "{1,3}");
  for (Index x = 0; x < s.size(); ++x) EXPECT_EQ(symdiff(s, x, x), *s.zero());
  const FiniteStructure p2 = powerset(2);
  EXPECT_EQ(p2.name(sqcup(p2, p2.index_of("{1}"), p2.index_of("{2}"))), "{1,2}");
}

TEST(SymmetricDifference, MatchesSetOracleAndCommutes) {
  const FiniteStructure s = powerset(4);
  for (Index a = 0; a < s.size(); ++a) {
    for (Index b = 0; b < s.size(); ++b) {
      EXPECT_EQ(symdiff(s, a, b), symdiff(s, b, a));
      EXPECT_EQ(oracle::set_of_mask(symdiff(s, a, b)), oracle::set_symdiff(oracle::set_of_mask(a), oracle::set_of_mask(b)));
      EXPECT_EQ(oracle::set_of_mask(sqcup(s, a, b)), oracle::set_union(oracle::set_of_mask(a), oracle::set_of_mask(b)));
    }
  }
}

TEST(SymmetricDifference, NonComplementedOperandIsADomainError) {
  const FiniteStructure s = make_finite(Truncation{2});
  EXPECT_THROW(symdiff(s, s.index_of("1"), s.index_of("0")), DomainError);
  EXPECT_THROW(sqcup(s, s.index_of("1"), s.index_of("0")), DomainError);
}

TEST(CompAlgebra, EquivalentConditionsAgreeOnEveryBuiltin) {
  std::vector<FiniteKind> kinds;
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned i = 1; i < n; ++i) kinds.push_back(BnI{n, i});
  }
  for (unsigned k = 1; k <= 4; ++k) kinds.push_back(Truncation{k});
  for (unsigned m = 1; m <= 4; ++m) kinds.push_back(BooleanPowerset{m});
  for (unsigned n = 2; n <= 5; ++n) kinds.push_back(BottleneckChain{n, true});
  for (const auto& kind : kinds) {
    const CompAlgebraReport r = comp_boolean_algebra(make_finite(kind));
    EXPECT_TRUE(r.equivalence_holds()) << to_string(kind) << ": " << r.reason;
    if (r.algebra) {
      EXPECT_EQ(classify_structure(*r.algebra).verified_class, StructureClass::Semiring);
      EXPECT_EQ(complemented_elements(*r.algebra).elements.size(), r.algebra->size());
    }
  }
}

TEST(CompAlgebra, PowersetIsItsOwnAlgebra) {
  const CompAlgebraReport r = comp_boolean_algebra(powerset(3));
  ASSERT_TRUE(r.algebra);
  EXPECT_EQ(*r.algebra, powerset(3));
  EXPECT_TRUE(r.boolean_algebra);
}

TEST(CompAlgebra, OnePlusOneNotComplemented) {
  // In B(4,2), 1+1 = 2 has no complement.
  const CompAlgebraReport r = comp_boolean_algebra(make_finite(BnI{4, 2}));
  EXPECT_FALSE(r.one_plus_one_complemented);
  EXPECT_FALSE(r.closed_under_add);
  EXPECT_FALSE(r.algebra);
  EXPECT_TRUE(r.equivalence_holds());
}

TEST(Disjointify, Examples) {
  const FiniteStructure s = powerset(3);
  const auto b = disjointify(s, {s.index_of("{1,2}"), s.index_of("{2,3}")});
  EXPECT_EQ(s.names_of(b), s.names_of({s.index_of("{1,2}"), s.index_of("{3}")}));
  EXPECT_EQ(disjointify(s, {5}), std::vector<Index>{5});
  const Index all = *s.one();
  EXPECT_EQ(disjointify(s, {all, all}), (std::vector<Index>{all, *s.zero()}));
}

TEST(Disjointify, PostconditionsOnRandomTuples) {
  Rng rng(21);
  for (int k = 0; k < 1000; ++k) {
    const unsigned m = 1 + static_cast<unsigned>(rng.below(6));
    const FiniteStructure s = powerset(m);
    const std::size_t n = 1 + rng.below(5);
    std::vector<Index> a;
    for (std::size_t j = 0; j < n; ++j) a.push_back(static_cast<Index>(rng.below(s.size())));
    const auto b = disjointify(s, a);
    std::vector<oracle::Set> as, bs;
    for (auto x : a) as.push_back(oracle::set_of_mask(x));
    for (auto x : b) bs.push_back(oracle::set_of_mask(x));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) EXPECT_TRUE(oracle::set_intersection(bs[i], bs[j]).empty());
    }
    EXPECT_EQ(oracle::union_size(as), oracle::union_size(bs));
    oracle::Set ua, ub;
    for (auto& x : as) ua.insert(x.begin(), x.end());
    for (auto& x : bs) ub.insert(x.begin(), x.end());
    EXPECT_EQ(ua, ub);
  }
}

TEST(Disjointify, NeedsABooleanAlgebra) {
  EXPECT_THROW(disjointify(make_finite(Truncation{2}), {1, 2}), HypothesisError);
}

TEST(SymbolicComplement, FiniteCofiniteAnalytic) {
  const SymbolicStructure s = make_symbolic({SymbolicFamily::FiniteCofinite});
  const auto c = complement(s, FiniteCofiniteSet::cofinite({2}));
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, Element(FiniteCofiniteSet::finite({2})));
}

TEST(SymbolicComplement, CandidateScan) {
  const SymbolicStructure s = make_symbolic({SymbolicFamily::Tropical});
  // zero = pinf and one = 0 complement each other; 3 has no complement.
  const std::vector<Element> candidates{ExtInt::of(0), ExtInt::of(3), ExtInt::pos_inf()};
  EXPECT_EQ(complement(s, ExtInt::of(0), candidates), std::optional<Element>(ExtInt::pos_inf()));
  EXPECT_EQ(complement(s, ExtInt::of(3), candidates), std::nullopt);
}
