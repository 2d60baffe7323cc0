/**
 * @file ideals.hpp
 * @brief The ideal semiring of Z and modular functions on Dedekind domains.
 *
 * An ideal of Z is stored by its non-negative generator: (0) is the zero
 * ideal and (1) the whole ring D. Ideal sum is the gcd of generators and
 * ideal product the product. Other Dedekind domains enter through
 * pre-factored ideals over abstract prime labels.
 */
#pragma once

#include "semimod/codomain.hpp"
#include "semimod/function.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace semimod {

using Factorization = std::map<std::uint64_t, unsigned>;

inline constexpr std::uint64_t kFactorBound = (std::uint64_t{1} << 63) - 1;

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Exact factorization of g >= 1; throws BoundError above bound and
/// ParameterError for g = 0.
Factorization factor(std::uint64_t g, std::uint64_t bound = kFactorBound);

struct IdealZ {
  std::uint64_t generator = 1;
  Factorization factorization;

  /// Throws BoundError when g exceeds kFactorBound.
  static IdealZ of(std::uint64_t g);
  bool is_zero() const { return generator == 0; }
  bool is_whole() const { return generator == 1; }
  /// Same ideal with every exponent set to one.
  IdealZ radical() const;
};

/// (a) + (b) = (gcd(a, b)).
IdealZ ideal_sum(const IdealZ& a, const IdealZ& b);
/// (a)(b) = (ab); throws BoundError when ab exceeds kFactorBound.
IdealZ ideal_product(const IdealZ& a, const IdealZ& b);
/// (lcm(a, b)); throws BoundError on overflow.
IdealZ ideal_lcm(const IdealZ& a, const IdealZ& b);

/// Ideal of a general Dedekind domain given by its prime factorization
/// over abstract labels. zero = false with no factors is the whole ring.
struct FactoredIdeal {
  bool zero = false;
  std::map<std::string, unsigned> factors;
};
FactoredIdeal ideal_sum(const FactoredIdeal& a, const FactoredIdeal& b);
FactoredIdeal ideal_product(const FactoredIdeal& a, const FactoredIdeal& b);
std::string to_string(const FactoredIdeal& a);

/// Values of f at (0), at D and at every maximal ideal; unlisted primes
/// take the default value. Codomain must be int or zmod.
template <class Prime>
struct BasicModularSpec {
  Codomain codomain = Codomain::integers();
  Value at_zero = 0;
  Value at_whole = 0;
  Value default_prime = 0;
  std::map<Prime, Value> primes;

  const Value& at(const Prime& p) const {
    auto it = primes.find(p);
    return it == primes.end() ? default_prime : it->second;
  }
};

using ModularSpec = BasicModularSpec<std::uint64_t>;
using LabelModularSpec = BasicModularSpec<std::string>;

/// f(D) = 0, f(p) = 1 for every p, f(0) = 0.
ModularSpec counting_spec(const Codomain& codomain = Codomain::integers());

/// Seeded spec: f(0), f(D), the default and every prime below 1000 drawn
/// from [-50, 50] (reduced for zmod).
ModularSpec random_spec(std::uint64_t seed, const Codomain& codomain = Codomain::integers());

/// f(p1^a1 ... pk^ak) = f(p1) + ... + f(pk) - (k-1) f(D).
Value eval_modular(const ModularSpec& spec, const IdealZ& a);
Value eval_modular(const LabelModularSpec& spec, const FactoredIdeal& a);

/// f(a+b) + f(ab) = f(a) + f(b). The note names the case: zero ideal,
/// whole ring, comaximal or common factors.
PropertyReport verify_modular(const ModularSpec& spec, const IdealZ& a, const IdealZ& b);
PropertyReport verify_modular(const LabelModularSpec& spec, const FactoredIdeal& a, const FactoredIdeal& b);

/// Seeded random pairs with generators in [0, max_generator]. Trial t
/// depends only on (seed, t), so the verdict and the first witness do not
/// depend on the number of workers.
PropertyReport verify_modular_random(const ModularSpec& spec, std::uint64_t trials, std::uint64_t seed,
                                     std::uint64_t max_generator = 1000000, unsigned workers = 0);

/// f(x^m y^n) = f(xy) on a simple finite domain with f modular.
PropertyReport simple_power_reduction(const FiniteFunction& f, Index x, Index y, unsigned m, unsigned n);
/// The same on Id(Z), which is simple since (a) + (1) = (1).
PropertyReport simple_power_reduction(const ModularSpec& spec, const IdealZ& x, const IdealZ& y, unsigned m,
                                      unsigned n);

struct CorollaryResult {
  struct Variant {
    Value lhs;
    Value rhs;
    bool holds = false;
  };
  Variant gcd;  // f(gcd(a,b)) + f(ab) = f(a) + f(b)
  Variant lcm;  // f(lcm(a,b)) + f(ab) = f(a) + f(b)
};
/// a, b >= 1.
CorollaryResult corollary_check(const ModularSpec& spec, std::uint64_t a, std::uint64_t b);

/// Text format:
///   modularspec v1
///   codomain int | codomain zmod <m>
///   zero <v>
///   D <v>
///   default <v>
///   <prime> <v>      (any number of lines)
/// `#` starts a comment. Throws ParseError.
ModularSpec parse_modular_spec(std::string_view text);
std::string emit_modular_spec(const ModularSpec& spec);

}  // namespace semimod
