#include "oracles.hpp"

#include "semimod/errors.hpp"
#include "semimod/ideals.hpp"
#include "semimod/rng.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace semimod;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

// f on Id(Z) from the ModularSpec's raw values, primes found by trial division.
Value oracle_eval(const ModularSpec& spec, const std::set<std::uint64_t>& primes, bool zero = false) {
  const Codomain& c = spec.codomain;
  if (zero) return c.normalize(spec.at_zero);
  if (primes.empty()) return c.normalize(spec.at_whole);
  Value out = c.neutral();
  for (auto p : primes) out = c.plus(out, spec.at(p));
  return c.minus(out, c.repeat(spec.at_whole, static_cast<std::int64_t>(primes.size()) - 1));
}

Value oracle_eval(const ModularSpec& spec, std::uint64_t g) {
  return g == 0 ? oracle_eval(spec, {}, true) : oracle_eval(spec, oracle::distinct_primes(g));
}

std::set<std::uint64_t> merge(std::set<std::uint64_t> a, const std::set<std::uint64_t>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

}  // namespace

TEST(Factor, Examples) {
  EXPECT_EQ(factor(12), (Factorization{{2, 2}, {3, 1}}));
  EXPECT_TRUE(factor(1).empty());
  EXPECT_EQ(factor(999983), (Factorization{{999983, 1}}));
  EXPECT_THROW(factor(0), ParameterError);
  EXPECT_THROW(factor(kFactorBound + 1), BoundError);
  EXPECT_THROW(factor(1000, 999), BoundError);
}

TEST(Factor, MatchesTrialDivisionUpTo100000) {
  for (std::uint64_t g = 1; g <= 100000; ++g) {
    Factorization expect;
    for (auto p : oracle::trial_factor(g)) ++expect[p];
    ASSERT_EQ(factor(g), expect) << g;
  }
}

TEST(Factor, LargeInputsMultiplyBack) {
  Rng rng(99);
  const std::vector<std::uint64_t> fixed{kFactorBound, 600851475143ull, 9999999967ull * 3ull,
                                         1000000007ull * 998244353ull, 4611686014132420609ull};
  std::vector<std::uint64_t> inputs = fixed;
  for (int k = 0; k < 200; ++k) inputs.push_back(1 + rng.below(kFactorBound));
  for (auto g : inputs) {
    const Factorization f = factor(g);
    unsigned __int128 prod = 1;
    for (const auto& [p, e] : f) {
      EXPECT_TRUE(is_prime(p)) << p;
      for (unsigned j = 0; j < e; ++j) prod *= p;
    }
    EXPECT_EQ(static_cast<std::uint64_t>(prod), g);
  }
  EXPECT_EQ(factor(4611686014132420609ull), (Factorization{{2147483647ull, 2}}));
}

TEST(Primality, AgreesWithNaiveCheck) {
  for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), oracle::naive_prime(n)) << n;
  EXPECT_TRUE(is_prime(2305843009213693951ull));
  EXPECT_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(IdealZ, SumProductLcm) {
  const IdealZ a = IdealZ::of(12), b = IdealZ::of(18);
  EXPECT_EQ(ideal_sum(a, b).generator, 6u);
  EXPECT_EQ(ideal_product(a, b).generator, 216u);
  EXPECT_EQ(ideal_lcm(a, b).generator, 36u);
  EXPECT_EQ(ideal_sum(IdealZ::of(0), b).generator, 18u);
  EXPECT_EQ(ideal_product(IdealZ::of(0), b).generator, 0u);
  EXPECT_THROW(ideal_product(IdealZ::of(1ull << 40), IdealZ::of(1ull << 40)), BoundError);
  EXPECT_EQ(IdealZ::of(72).radical().generator, 6u);
}

TEST(IdealZ, FactorizationInvariant) {
  for (std::uint64_t g = 2; g < 3000; ++g) {
    const IdealZ a = IdealZ::of(g);
    std::uint64_t prod = 1;
    for (const auto& [p, e] : a.factorization) {
      for (unsigned j = 0; j < e; ++j) prod *= p;
    }
    EXPECT_EQ(prod, g);
  }
  EXPECT_TRUE(IdealZ::of(0).factorization.empty());
  EXPECT_TRUE(IdealZ::of(1).factorization.empty());
}

TEST(EvalModular, Examples) {
  const ModularSpec counting = counting_spec();
  EXPECT_EQ(eval_modular(counting, IdealZ::of(12)), q(2));
  EXPECT_EQ(eval_modular(counting, IdealZ::of(1)), counting.at_whole);
  ModularSpec s;
  s.primes = {{2, q(5)}, {3, q(7)}};
  s.at_whole = q(1);
  EXPECT_EQ(eval_modular(s, IdealZ::of(12)), q(11));
}

TEST(EvalModular, ExponentInvariantAndMatchesOracle) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (const Codomain& c : {Codomain::integers(), Codomain::integers_mod(7)}) {
      const ModularSpec spec = random_spec(seed, c);
      for (std::uint64_t g = 0; g <= 5000; ++g) {
        const IdealZ a = IdealZ::of(g);
        EXPECT_EQ(eval_modular(spec, a), eval_modular(spec, a.radical()));
        EXPECT_EQ(eval_modular(spec, a), oracle_eval(spec, g)) << g;
      }
    }
  }
}

TEST(VerifyModular, ProofCases) {
  const ModularSpec counting = counting_spec();
  const PropertyReport common = verify_modular(counting, IdealZ::of(12), IdealZ::of(18));
  EXPECT_EQ(common.verdict, Verdict::Holds);
  EXPECT_EQ(common.lhs, q(4));
  EXPECT_EQ(common.note, "common factors");
  const PropertyReport comax = verify_modular(counting, IdealZ::of(4), IdealZ::of(9));
  EXPECT_EQ(comax.lhs, q(2));
  EXPECT_EQ(comax.rhs, q(2));
  EXPECT_EQ(comax.note, "comaximal");
  EXPECT_EQ(verify_modular(counting, IdealZ::of(0), IdealZ::of(9)).note, "zero ideal");
  EXPECT_EQ(verify_modular(counting, IdealZ::of(1), IdealZ::of(9)).note, "whole ring");
}

TEST(VerifyModular, TenThousandPairsUnderCountingAndRandomSpecs) {
  std::vector<ModularSpec> specs{counting_spec()};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) specs.push_back(random_spec(seed));
  for (const auto& spec : specs) {
    const PropertyReport r = verify_modular_random(spec, 10000, 7);
    EXPECT_EQ(r.verdict, Verdict::HoldsOnSample);
    EXPECT_EQ(r.checked, 10000u);
  }
}

TEST(VerifyModular, OracleCheckOnSeededPairs) {
  Rng rng(123);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ModularSpec spec = random_spec(seed);
    for (int k = 0; k < 300; ++k) {
      const std::uint64_t a = rng.below(1000001), b = rng.below(1000001);
      const auto pa = oracle::distinct_primes(a), pb = oracle::distinct_primes(b);
      const std::uint64_t g = std::gcd(a, b);
      const bool zero_product = a == 0 || b == 0;
      const Value lhs = spec.codomain.plus(oracle_eval(spec, g), oracle_eval(spec, merge(pa, pb), zero_product));
      const Value rhs = spec.codomain.plus(oracle_eval(spec, a), oracle_eval(spec, b));
      EXPECT_EQ(lhs, rhs);
      const PropertyReport r = verify_modular(spec, IdealZ::of(a), IdealZ::of(b));
      EXPECT_EQ(r.lhs, lhs);
      EXPECT_TRUE(r.holds());
    }
  }
}

TEST(VerifyModular, ResultDoesNotDependOnWorkers) {
  const ModularSpec spec = random_spec(3);
  const PropertyReport one = verify_modular_random(spec, 2000, 5, 1000000, 1);
  const PropertyReport many = verify_modular_random(spec, 2000, 5, 1000000, 6);
  EXPECT_EQ(one.verdict, many.verdict);
  EXPECT_EQ(one.checked, many.checked);
}

TEST(FactoredIdeals, LabelSpec) {
  LabelModularSpec spec;
  spec.primes = {{"p", q(2)}, {"q", q(3)}};
  spec.default_prime = q(1);
  spec.at_whole = q(0);
  const FactoredIdeal p{false, {{"p", 2}}}, pq{false, {{"p", 1}, {"q", 1}}}, r{false, {{"r", 1}}};
  EXPECT_EQ(eval_modular(spec, pq), q(5));
  EXPECT_EQ(to_string(ideal_product(p, pq)), "p^3*q");
  EXPECT_EQ(to_string(ideal_sum(p, pq)), "p");
  EXPECT_EQ(to_string(ideal_sum(p, r)), "D");
  EXPECT_EQ(to_string(FactoredIdeal{true, {}}), "(0)");
  for (const auto& a : {p, pq, r, FactoredIdeal{}, FactoredIdeal{true, {}}}) {
    for (const auto& b : {p, pq, r, FactoredIdeal{}, FactoredIdeal{true, {}}}) {
      EXPECT_TRUE(verify_modular(spec, a, b).holds()) << to_string(a) << " " << to_string(b);
    }
  }
}

TEST(SimplePowerReduction, OnIdealsOfZ) {
  const ModularSpec counting = counting_spec();
  const PropertyReport r = simple_power_reduction(counting, IdealZ::of(2), IdealZ::of(3), 2, 2);
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_EQ(r.lhs, q(2));
  EXPECT_EQ(simple_power_reduction(counting, IdealZ::of(10), IdealZ::of(21), 1, 1).verdict, Verdict::Holds);
  const ModularSpec spec = random_spec(4);
  for (std::uint64_t x = 1; x < 40; ++x) {
    for (std::uint64_t y = 1; y < 40; ++y) {
      EXPECT_EQ(simple_power_reduction(spec, IdealZ::of(x), IdealZ::of(y), 3, 2).verdict, Verdict::Holds);
    }
  }
}

TEST(SimplePowerReduction, OnAFinitePowerset) {
  const FiniteStructure s = FiniteStructure::powerset(3);
  const FiniteFunction f = counting_measure(s);
  EXPECT_EQ(simple_power_reduction(f, 3, 6, 2, 5).verdict, Verdict::Holds);
}

TEST(Corollary, GcdVariantHoldsUpTo500) {
  const ModularSpec counting = counting_spec();
  for (std::uint64_t a = 1; a <= 500; ++a) {
    for (std::uint64_t b = 1; b <= 500; ++b) {
      const CorollaryResult r = corollary_check(counting, a, b);
      ASSERT_TRUE(r.gcd.holds) << a << " " << b;
      const auto expect =
          static_cast<std::int64_t>(oracle::distinct_primes(std::gcd(a, b)).size() +
                                    merge(oracle::distinct_primes(a), oracle::distinct_primes(b)).size());
      ASSERT_EQ(r.gcd.lhs, q(expect));
    }
  }
}

TEST(Corollary, LcmVariantIsRefutedAtTwoThree) {
  const ModularSpec counting = counting_spec();
  const CorollaryResult r = corollary_check(counting, 2, 3);
  EXPECT_FALSE(r.lcm.holds);
  EXPECT_EQ(r.lcm.lhs, q(4));
  EXPECT_EQ(r.lcm.rhs, q(2));
  EXPECT_TRUE(r.gcd.holds);
  const CorollaryResult four_six = corollary_check(counting, 4, 6);
  EXPECT_EQ(four_six.gcd.lhs, q(3));
  EXPECT_EQ(four_six.gcd.rhs, q(3));
  for (std::uint64_t a = 1; a <= 50; ++a) {
    const CorollaryResult same = corollary_check(counting, a, a);
    EXPECT_TRUE(same.gcd.holds && same.lcm.holds);
  }
  EXPECT_THROW(corollary_check(counting, 0, 3), ParameterError);
}

TEST(SpecFormat, RoundTripAndErrors) {
  const ModularSpec spec = random_spec(2, Codomain::integers_mod(11));
  const ModularSpec back = parse_modular_spec(emit_modular_spec(spec));
  EXPECT_EQ(back.codomain, spec.codomain);
  EXPECT_EQ(back.at_zero, spec.at_zero);
  EXPECT_EQ(back.at_whole, spec.at_whole);
  EXPECT_EQ(back.default_prime, spec.default_prime);
  EXPECT_EQ(back.primes, spec.primes);

  const ModularSpec ok = parse_modular_spec("modularspec v1\n# comment\ncodomain int\nzero 0\nD 1\ndefault 2\n5 -3\n");
  EXPECT_EQ(ok.at(5), q(-3));
  EXPECT_EQ(ok.at(7), q(2));

  const auto line_of = [](const std::string& text) {
    try {
      parse_modular_spec(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("nope\n"), 1u);
  EXPECT_THROW(parse_modular_spec("modularspec v1\ncodomain int\nzero 0\nD 0\n"), ParseError);
  EXPECT_EQ(line_of("modularspec v1\ncodomain int\nzero 0\nD 0\ndefault 0\n6 1\n"), 6u);
  EXPECT_EQ(line_of("modularspec v1\ncodomain rational\n"), 2u);
}
