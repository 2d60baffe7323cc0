#include "semimod/ideals.hpp"

#include "hypotheses.hpp"
#include "semimod/errors.hpp"
#include "semimod/identities.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace semimod {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr u64 kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Brent's variant of Pollard rho with f(x) = x^2 + c. Returns a nontrivial
// factor of the odd composite n, or n when this c fails.
u64 brent(u64 n, u64 c) {
  auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
  u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
  const u64 block = 128;
  for (u64 r = 1; g == 1; r <<= 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    for (u64 k = 0; k < r && g == 1; k += block) {
      ys = y;
      for (u64 i = 0; i < std::min(block, r - k); ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
    }
    if (r > (u64{1} << 40)) break;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

u64 trial_division_factor(u64 n) {
  for (u64 d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return d;
  }
  return n;
}

void split(u64 n, Factorization& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = n;
  for (u64 c = 1; c <= 64 && (d == n || d == 1); ++c) d = brent(n, c);
  if (d == n || d == 1) d = trial_division_factor(n);
  split(d, out);
  split(n / d, out);
}

u64 checked_product(u64 a, u64 b) {
  u128 p = static_cast<u128>(a) * b;
  if (p > kFactorBound) {
    throw BoundError("ideal generator " + std::to_string(a) + " * " + std::to_string(b) + " exceeds 2^63-1");
  }
  return static_cast<u64>(p);
}

Factorization merge_add(const Factorization& a, const Factorization& b) {
  Factorization out = a;
  for (const auto& [p, e] : b) out[p] += e;
  return out;
}

std::string ideal_name(const IdealZ& a) { return "(" + std::to_string(a.generator) + ")"; }

template <class Spec, class Map>
Value eval_factors(const Spec& spec, const Map& factors) {
  const Codomain& c = spec.codomain;
  if (factors.empty()) return c.normalize(spec.at_whole);
  Value sum = c.neutral();
  for (const auto& entry : factors) sum = c.plus(sum, spec.at(entry.first));
  return c.minus(sum, c.repeat(spec.at_whole, static_cast<std::int64_t>(factors.size()) - 1));
}

std::string case_of(bool zero_a, bool zero_b, bool whole_a, bool whole_b, bool comaximal) {
  if (zero_a || zero_b) return "zero ideal";
  if (whole_a || whole_b) return "whole ring";
  if (comaximal) return "comaximal";
  return "common factors";
}

PropertyReport modular_report(const Codomain& c, const Value& fa, const Value& fb, const Value& fsum,
                              const Value& fprod) {
  PropertyReport r;
  r.property = "modular";
  r.checked = 1;
  r.lhs = c.plus(fsum, fprod);
  r.rhs = c.plus(fa, fb);
  r.verdict = *r.lhs == *r.rhs ? Verdict::Holds : Verdict::Fails;
  return r;
}

void require_spec_codomain(const Codomain& c) {
  if (c.kind() != Codomain::Kind::Integers && c.kind() != Codomain::Kind::IntegersMod) {
    throw InapplicableError("modular specs take values in int or zmod, not " + c.name());
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : kSmallPrimes) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (u64 a : kSmallPrimes) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factor(std::uint64_t g, std::uint64_t bound) {
  if (g == 0) throw ParameterError("factor needs g >= 1");
  if (g > bound) throw BoundError(std::to_string(g) + " exceeds the factorization bound " + std::to_string(bound));
  Factorization out;
  for (u64 p : kSmallPrimes) {
    while (g % p == 0) {
      ++out[p];
      g /= p;
    }
  }
  split(g, out);
  return out;
}

IdealZ IdealZ::of(std::uint64_t g) {
  IdealZ a;
  a.generator = g;
  if (g >= 2) a.factorization = factor(g);
  return a;
}

IdealZ IdealZ::radical() const {
  if (generator < 2) return *this;
  IdealZ r;
  r.generator = 1;
  for (const auto& [p, e] : factorization) {
    r.generator *= p;
    r.factorization[p] = 1;
  }
  return r;
}

IdealZ ideal_sum(const IdealZ& a, const IdealZ& b) {
  IdealZ out;
  out.generator = std::gcd(a.generator, b.generator);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  for (const auto& [p, e] : a.factorization) {
    auto it = b.factorization.find(p);
    if (it != b.factorization.end()) out.factorization[p] = std::min(e, it->second);
  }
  return out;
}

IdealZ ideal_product(const IdealZ& a, const IdealZ& b) {
  if (a.is_zero() || b.is_zero()) return IdealZ::of(0);
  IdealZ out;
  out.generator = checked_product(a.generator, b.generator);
  out.factorization = merge_add(a.factorization, b.factorization);
  return out;
}

IdealZ ideal_lcm(const IdealZ& a, const IdealZ& b) {
  if (a.is_zero() || b.is_zero()) return IdealZ::of(0);
  IdealZ out;
  out.generator = checked_product(a.generator / std::gcd(a.generator, b.generator), b.generator);
  out.factorization = a.factorization;
  for (const auto& [p, e] : b.factorization) out.factorization[p] = std::max(out.factorization[p], e);
  return out;
}

FactoredIdeal ideal_sum(const FactoredIdeal& a, const FactoredIdeal& b) {
  if (a.zero) return b;
  if (b.zero) return a;
  FactoredIdeal out;
  for (const auto& [p, e] : a.factors) {
    auto it = b.factors.find(p);
    if (it != b.factors.end()) out.factors[p] = std::min(e, it->second);
  }
  return out;
}

FactoredIdeal ideal_product(const FactoredIdeal& a, const FactoredIdeal& b) {
  if (a.zero || b.zero) return FactoredIdeal{true, {}};
  FactoredIdeal out = a;
  for (const auto& [p, e] : b.factors) out.factors[p] += e;
  return out;
}

std::string to_string(const FactoredIdeal& a) {
  if (a.zero) return "(0)";
  if (a.factors.empty()) return "D";
  std::string out;
  for (const auto& [p, e] : a.factors) {
    if (!out.empty()) out += "*";
    out += p;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

ModularSpec counting_spec(const Codomain& codomain) {
  require_spec_codomain(codomain);
  ModularSpec s;
  s.codomain = codomain;
  s.at_zero = 0;
  s.at_whole = 0;
  s.default_prime = codomain.normalize(1);
  return s;
}

ModularSpec random_spec(std::uint64_t seed, const Codomain& codomain) {
  require_spec_codomain(codomain);
  Rng rng(seed);
  auto draw = [&] { return codomain.normalize(Value(Integer(rng.between(-50, 50)))); };
  ModularSpec s;
  s.codomain = codomain;
  s.at_zero = draw();
  s.at_whole = draw();
  s.default_prime = draw();
  for (u64 p = 2; p < 1000; ++p) {
    if (is_prime(p)) s.primes[p] = draw();
  }
  return s;
}

Value eval_modular(const ModularSpec& spec, const IdealZ& a) {
  if (a.is_zero()) return spec.codomain.normalize(spec.at_zero);
  return eval_factors(spec, a.factorization);
}

Value eval_modular(const LabelModularSpec& spec, const FactoredIdeal& a) {
  if (a.zero) return spec.codomain.normalize(spec.at_zero);
  return eval_factors(spec, a.factors);
}

PropertyReport verify_modular(const ModularSpec& spec, const IdealZ& a, const IdealZ& b) {
  const IdealZ sum = ideal_sum(a, b);
  const IdealZ prod = ideal_product(a, b);
  auto eval = [&](const IdealZ& x) { return eval_modular(spec, x); };
  PropertyReport r = modular_report(spec.codomain, eval(a), eval(b), eval(sum), eval(prod));
  r.note = case_of(a.is_zero(), b.is_zero(), a.is_whole(), b.is_whole(), sum.is_whole());
  if (!r.holds()) r.witness = {ideal_name(a), ideal_name(b)};
  return r;
}

PropertyReport verify_modular(const LabelModularSpec& spec, const FactoredIdeal& a, const FactoredIdeal& b) {
  const FactoredIdeal sum = ideal_sum(a, b);
  const FactoredIdeal prod = ideal_product(a, b);
  auto eval = [&](const FactoredIdeal& x) { return eval_modular(spec, x); };
  PropertyReport r = modular_report(spec.codomain, eval(a), eval(b), eval(sum), eval(prod));
  const bool whole_a = !a.zero && a.factors.empty();
  const bool whole_b = !b.zero && b.factors.empty();
  r.note = case_of(a.zero, b.zero, whole_a, whole_b, !sum.zero && sum.factors.empty());
  if (!r.holds()) r.witness = {to_string(a), to_string(b)};
  return r;
}

PropertyReport verify_modular_random(const ModularSpec& spec, std::uint64_t trials, std::uint64_t seed,
                                     std::uint64_t max_generator, unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  workers = static_cast<unsigned>(std::min<u64>(workers, std::max<u64>(trials, 1)));

  struct Partial {
    u64 first_failure = UINT64_MAX;
    PropertyReport report;
    std::string error;
  };
  std::vector<Partial> partial(workers);
  auto run = [&](unsigned w) {
    Partial& out = partial[w];
    try {
      for (u64 t = w; t < trials; t += workers) {
        Rng rng(seed ^ (0x9E3779B97F4A7C15ULL * (t + 1)));
        auto draw = [&]() -> u64 {
          // Keep the zero ideal and the whole ring in play.
          if (rng.chance(1, 64)) return rng.below(2);
          return rng.below(max_generator + 1);
        };
        const u64 a = draw();
        const u64 b = draw();
        PropertyReport r = verify_modular(spec, IdealZ::of(a), IdealZ::of(b));
        if (!r.holds()) {
          out.first_failure = t;
          out.report = std::move(r);
          return;
        }
      }
    } catch (const std::exception& e) {
      out.error = e.what();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
  run(0);
  for (auto& t : pool) t.join();

  for (const auto& p : partial) {
    if (!p.error.empty()) throw BoundError(p.error);
  }
  auto worst = std::min_element(partial.begin(), partial.end(),
                                [](const Partial& x, const Partial& y) { return x.first_failure < y.first_failure; });
  PropertyReport r;
  if (worst->first_failure != UINT64_MAX) {
    r = worst->report;
    r.checked = worst->first_failure + 1;
    r.note = "trial " + std::to_string(worst->first_failure) + ", " + r.note;
    return r;
  }
  r.property = "modular";
  r.verdict = Verdict::HoldsOnSample;
  r.checked = trials;
  r.note = "sampled, not proven";
  return r;
}

PropertyReport simple_power_reduction(const FiniteFunction& f, Index x, Index y, unsigned m, unsigned n) {
  PropertyReport r = verify_identity(f, Identity::L1, {x, y}, {m, n});
  r.property = "simple power reduction";
  return r;
}

PropertyReport simple_power_reduction(const ModularSpec& spec, const IdealZ& x, const IdealZ& y, unsigned m,
                                      unsigned n) {
  if (m < 1 || n < 1) throw ParameterError("simple power reduction needs exponents m, n >= 1");
  IdealZ lhs_ideal = x;
  for (unsigned k = 1; k < m; ++k) lhs_ideal = ideal_product(lhs_ideal, x);
  for (unsigned k = 0; k < n; ++k) lhs_ideal = ideal_product(lhs_ideal, y);
  PropertyReport r;
  r.property = "simple power reduction";
  r.checked = 1;
  r.lhs = eval_modular(spec, lhs_ideal);
  r.rhs = eval_modular(spec, ideal_product(x, y));
  if (*r.lhs != *r.rhs) {
    r.verdict = Verdict::Fails;
    r.witness = {ideal_name(x), ideal_name(y)};
  }
  return r;
}

CorollaryResult corollary_check(const ModularSpec& spec, std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b < 1) throw ParameterError("corollary check needs a, b >= 1");
  const Codomain& c = spec.codomain;
  const IdealZ ia = IdealZ::of(a), ib = IdealZ::of(b);
  const Value fprod = eval_modular(spec, ideal_product(ia, ib));
  const Value rhs = c.plus(eval_modular(spec, ia), eval_modular(spec, ib));
  CorollaryResult out;
  out.gcd.lhs = c.plus(eval_modular(spec, ideal_sum(ia, ib)), fprod);
  out.gcd.rhs = rhs;
  out.gcd.holds = out.gcd.lhs == rhs;
  out.lcm.lhs = c.plus(eval_modular(spec, ideal_lcm(ia, ib)), fprod);
  out.lcm.rhs = rhs;
  out.lcm.holds = out.lcm.lhs == rhs;
  return out;
}

ModularSpec parse_modular_spec(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  ModularSpec spec;
  bool have_codomain = false, have_zero = false, have_whole = false, have_default = false;
  std::vector<std::pair<std::string, std::size_t>> pending;  // values parsed after the codomain
  auto strip = [](std::string s) {
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    return s;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream words(strip(line));
    std::vector<std::string> w;
    for (std::string t; words >> t;) w.push_back(t);
    if (w.empty()) continue;
    if (!header) {
      if (w.size() != 2 || w[0] != "modularspec" || w[1] != "v1") {
        throw ParseError(lineno, 1, "expected header 'modularspec v1'");
      }
      header = true;
      continue;
    }
    if (w[0] == "codomain") {
      if (have_codomain) throw ParseError(lineno, 1, "duplicate codomain");
      std::string rest = w.size() > 1 ? w[1] : "";
      for (std::size_t k = 2; k < w.size(); ++k) rest += " " + w[k];
      try {
        spec.codomain = parse_codomain(rest);
        require_spec_codomain(spec.codomain);
      } catch (const Error& e) {
        throw ParseError(lineno, 10, e.what());
      }
      have_codomain = true;
      continue;
    }
    if (w.size() != 2) throw ParseError(lineno, 1, "expected '<key> <value>'");
    pending.emplace_back(line, lineno);
  }
  if (!header) throw ParseError(lineno + 1, 1, "missing header 'modularspec v1'");

  for (const auto& [raw, no] : pending) {
    std::istringstream words(strip(raw));
    std::string key, val;
    words >> key >> val;
    const std::size_t col = raw.find(val, raw.find(key) + key.size()) + 1;
    Value v;
    try {
      v = spec.codomain.normalize(spec.codomain.parse(val));
    } catch (const Error& e) {
      throw ParseError(no, col, std::string("bad value: ") + e.what());
    }
    auto once = [&](bool& flag) {
      if (flag) throw ParseError(no, 1, "duplicate '" + key + "'");
      flag = true;
    };
    if (key == "zero") {
      once(have_zero);
      spec.at_zero = v;
    } else if (key == "D") {
      once(have_whole);
      spec.at_whole = v;
    } else if (key == "default") {
      once(have_default);
      spec.default_prime = v;
    } else {
      if (key.empty() || !std::all_of(key.begin(), key.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
          key.size() > 19) {
        throw ParseError(no, 1, "unknown key '" + key + "'");
      }
      const u64 p = std::stoull(key);
      if (!is_prime(p)) throw ParseError(no, 1, key + " is not prime");
      if (!spec.primes.emplace(p, v).second) throw ParseError(no, 1, "duplicate prime " + key);
    }
  }
  if (!have_default) throw ParseError(0, 0, "missing 'default' line");
  return spec;
}

std::string emit_modular_spec(const ModularSpec& spec) {
  const Codomain& c = spec.codomain;
  std::string out = "modularspec v1\n";
  out += c.kind() == Codomain::Kind::IntegersMod ? "codomain zmod " + std::to_string(c.modulus()) + "\n"
                                                  : "codomain int\n";
  out += "zero " + c.format(spec.at_zero) + "\n";
  out += "D " + c.format(spec.at_whole) + "\n";
  out += "default " + c.format(spec.default_prime) + "\n";
  for (const auto& [p, v] : spec.primes) out += std::to_string(p) + " " + c.format(v) + "\n";
  return out;
}

}  // namespace semimod
