#include "semimod/theorems.hpp"

#include "semimod/errors.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace semimod {

namespace {

constexpr std::uint64_t kChunk = 1 << 16;
constexpr std::uint64_t kFnvBasis = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t word) {
  for (int k = 0; k < 8; ++k) {
    h ^= (word >> (8 * k)) & 0xff;
    h *= kFnvPrime;
  }
  return h;
}

template <class T>
const char* kind_name(const T&);
template <>
const char* kind_name(const BooleanPowerset&) { return "powerset"; }
template <>
const char* kind_name(const BnI&) { return "bni"; }
template <>
const char* kind_name(const Truncation&) { return "truncation"; }
template <>
const char* kind_name(const BottleneckChain&) { return "bottleneck"; }
template <>
const char* kind_name(const ArcticWindow&) { return "arctic_window"; }

struct ChunkResult {
  std::uint64_t modular = 0;
  std::uint64_t finitely_additive = 0;
  std::uint64_t digest = kFnvBasis;
  std::vector<std::uint64_t> listed;
  std::optional<std::uint64_t> forward_witness;
  std::optional<std::uint64_t> converse_witness;
};

}  // namespace

ClassificationClaim claim_for(const FiniteKind& kind) {
  ClassificationClaim c;
  c.name = std::visit([](const auto& k) { return std::string(kind_name(k)); }, kind);
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, BnI>) {
          c.shape = ClassificationClaim::Shape::ConstantOffExceptions;
          c.exceptions = {0};
          c.note = "constant on B(n,i) minus {0}";
        } else if constexpr (std::is_same_v<K, Truncation>) {
          c.shape = ClassificationClaim::Shape::ConstantOffExceptions;
          c.exceptions = {0};
          c.note = "constant on T_k minus {ninf}";
        } else if constexpr (std::is_same_v<K, ArcticWindow>) {
          c.shape = ClassificationClaim::Shape::ConstantOffExceptions;
          c.exceptions = {0};
          c.note = "constant off {ninf}; f(ninf) is left free";
        } else if constexpr (std::is_same_v<K, BottleneckChain>) {
          c.shape = ClassificationClaim::Shape::AllFunctions;
          c.note = "every function on a bottleneck chain is modular";
        } else {
          c.shape = ClassificationClaim::Shape::BooleanCorollary;
          c.note = "finitely additive iff modular with f(0) = 0";
        }
      },
      kind);
  return c;
}

ClassificationClaim claim_by_name(std::string_view name, const FiniteKind& kind) {
  if (name == "none") {
    ClassificationClaim c;
    c.name = "none";
    return c;
  }
  ClassificationClaim c = claim_for(kind);
  const bool boolean_alias = name == "boolean" && c.name == "powerset";
  if (name != c.name && !boolean_alias) {
    throw ParameterError("claim '" + std::string(name) + "' does not apply to " + to_string(kind));
  }
  return c;
}

std::uint64_t function_count(std::size_t n, std::uint64_t m, std::uint64_t budget) {
  if (m == 0) throw ParameterError("codomain modulus must be positive");
  std::uint64_t count = 1;
  bool over = false;
  std::string text = std::to_string(m) + "^" + std::to_string(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (count > budget / m + 1) {
      over = true;
      break;
    }
    count *= m;
  }
  if (over || count > budget) {
    throw BudgetError("enumeration of " + text + " functions exceeds the budget of " + std::to_string(budget));
  }
  return count;
}

std::vector<std::uint32_t> function_table(std::uint64_t index, std::size_t n, std::uint64_t m) {
  std::vector<std::uint32_t> table(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    table[k] = static_cast<std::uint32_t>(index % m);
    index /= m;
  }
  return table;
}

std::uint64_t function_index(const std::vector<std::uint32_t>& table, std::uint64_t m) {
  std::uint64_t index = 0;
  for (std::uint32_t v : table) index = index * m + v;
  return index;
}

FiniteFunction function_at(const FiniteStructure& s, const Codomain& zmod, std::uint64_t index) {
  const auto table = function_table(index, s.size(), zmod.modulus());
  std::vector<Value> values;
  values.reserve(table.size());
  for (auto v : table) values.emplace_back(Integer(v));
  return FiniteFunction(s, zmod, std::move(values));
}

void enumerate_functions(const FiniteStructure& s, const Codomain& zmod,
                         const std::function<bool(std::uint64_t, const std::vector<std::uint32_t>&)>& visit,
                         std::uint64_t budget) {
  if (zmod.kind() != Codomain::Kind::IntegersMod) throw InapplicableError("enumeration needs a zmod codomain");
  const std::uint64_t m = zmod.modulus();
  const std::uint64_t total = function_count(s.size(), m, budget);
  std::vector<std::uint32_t> table(s.size(), 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    if (!visit(index, table)) return;
    for (std::size_t k = table.size(); k-- > 0;) {
      if (++table[k] < m) break;
      table[k] = 0;
    }
  }
}

EnumerationResult classify_modular(const FiniteStructure& s, const Codomain& zmod, const ClassificationClaim& claim,
                                   unsigned workers, std::uint64_t budget) {
  using Shape = ClassificationClaim::Shape;
  if (zmod.kind() != Codomain::Kind::IntegersMod) throw InapplicableError("enumeration needs a zmod codomain");
  const std::size_t n = s.size();
  const std::uint64_t m = zmod.modulus();
  EnumerationResult result;
  result.claim = claim;
  result.total = function_count(n, m, budget);

  std::vector<bool> exception(n, false);
  for (Index x : claim.exceptions) {
    if (x >= n) throw ParameterError("claim exception outside the carrier");
    exception[x] = true;
  }
  std::optional<Index> zero = s.zero();
  if (claim.shape == Shape::BooleanCorollary && !zero) throw InapplicableError("Boolean claim needs a domain zero");

  std::vector<std::uint32_t> add(n * n), mul(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      add[a * n + b] = s.add(a, b);
      mul[a * n + b] = s.mul(a, b);
    }
  }
  std::vector<std::pair<Index, Index>> disjoint;
  if (zero) {
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (mul[a * n + b] == *zero) disjoint.emplace_back(a, b);
      }
    }
  }

  auto is_modular = [&](const std::vector<std::uint32_t>& v) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if ((v[add[a * n + b]] + v[mul[a * n + b]]) % m != (v[a] + v[b]) % m) return false;
      }
    }
    return true;
  };
  auto is_fa = [&](const std::vector<std::uint32_t>& v) {
    for (auto [a, b] : disjoint) {
      if (v[add[a * n + b]] != (v[a] + v[b]) % m) return false;
    }
    return true;
  };
  auto constant_off = [&](const std::vector<std::uint32_t>& v) {
    std::optional<std::uint32_t> c;
    for (std::size_t x = 0; x < n; ++x) {
      if (exception[x]) continue;
      if (c && *c != v[x]) return false;
      c = v[x];
    }
    return true;
  };

  const std::uint64_t chunks = (result.total + kChunk - 1) / kChunk;
  std::vector<ChunkResult> parts(chunks);
  std::atomic<std::uint64_t> next{0};
  auto run = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      ChunkResult& out = parts[c];
      const std::uint64_t begin = c * kChunk;
      const std::uint64_t end = std::min(result.total, begin + kChunk);
      std::vector<std::uint32_t> v = function_table(begin, n, m);
      for (std::uint64_t index = begin; index < end; ++index) {
        const bool mod = is_modular(v);
        if (mod) {
          ++out.modular;
          out.digest = fnv_mix(out.digest, index);
          if (out.listed.size() < EnumerationResult::kListed) out.listed.push_back(index);
        }
        switch (claim.shape) {
          case Shape::ConstantOffExceptions: {
            const bool shaped = constant_off(v);
            if (mod && !shaped && !out.forward_witness) out.forward_witness = index;
            if (!mod && shaped && !out.converse_witness) out.converse_witness = index;
            break;
          }
          case Shape::AllFunctions:
            if (!mod && !out.converse_witness) out.converse_witness = index;
            break;
          case Shape::BooleanCorollary: {
            const bool fa = is_fa(v);
            if (fa) ++out.finitely_additive;
            const bool rhs = mod && v[*zero] == 0;
            if (fa && !rhs && !out.forward_witness) out.forward_witness = index;
            if (!fa && rhs && !out.converse_witness) out.converse_witness = index;
            break;
          }
          case Shape::None:
            break;
        }
        for (std::size_t k = n; k-- > 0;) {
          if (++v[k] < m) break;
          v[k] = 0;
        }
      }
    }
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(chunks, 1)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();

  result.digest = kFnvBasis;
  for (const auto& p : parts) {
    result.modular += p.modular;
    result.finitely_additive += p.finitely_additive;
    result.digest = fnv_mix(result.digest, p.digest);
    for (auto idx : p.listed) {
      if (result.listed.size() < EnumerationResult::kListed) result.listed.push_back(idx);
    }
    if (p.forward_witness && !result.forward_witness) result.forward_witness = p.forward_witness;
    if (p.converse_witness && !result.converse_witness) result.converse_witness = p.converse_witness;
  }
  if (claim.shape != Shape::None) {
    result.forward = !result.forward_witness.has_value();
    result.converse = !result.converse_witness.has_value();
  }
  result.reverified = std::all_of(result.listed.begin(), result.listed.end(), [&](std::uint64_t idx) {
    return check_property(function_at(s, zmod, idx), Property::Modular).holds();
  });
  return result;
}

// ---------------------------------------------------------------------------
// Forcing identities on symbolic instances
// ---------------------------------------------------------------------------

namespace {

constexpr std::pair<ForcingTheorem, const char*> kTheorems[] = {
    {ForcingTheorem::Arctic, "arctic"},
    {ForcingTheorem::Tropical, "tropical"},
    {ForcingTheorem::GMinPlus, "gminplus"},
    {ForcingTheorem::OneHasInverse, "one-has-inverse"},
    {ForcingTheorem::Litvinov, "litvinov"},
    {ForcingTheorem::Semifield, "semifield"},
    {ForcingTheorem::Basic, "basic"},
};

struct Forcing {
  const SymbolicFunction& f;
  PropertyReport& r;

  // One instance of the modular law; records the pair on failure.
  bool instance(const Element& a, const Element& b) {
    const SymbolicStructure& s = f.domain;
    const Codomain& c = f.codomain;
    ++r.checked;
    const Value lhs = c.plus(f(s.add(a, b)), f(s.mul(a, b)));
    const Value rhs = c.plus(f(a), f(b));
    if (lhs == rhs) return true;
    r.verdict = Verdict::Fails;
    r.witness = {to_string(a), to_string(b)};
    r.lhs = lhs;
    r.rhs = rhs;
    r.note = "forcing instance broken";
    return false;
  }

  // The value the theorem forces at x.
  bool forced(const Element& x, const Element& reference) {
    ++r.checked;
    const Value fx = f(x);
    const Value fr = f(reference);
    if (fx == fr) return true;
    r.verdict = Verdict::Fails;
    r.witness = {to_string(x)};
    r.lhs = fx;
    r.rhs = fr;
    r.note = "forced constancy violated: f(" + to_string(x) + ") differs from f(" + to_string(reference) + ")";
    return false;
  }
};

void require_family(const SymbolicStructure& s, ForcingTheorem t, std::initializer_list<const char*> families) {
  for (const char* fam : families) {
    if (s.family == fam) return;
  }
  throw InapplicableError("theorem " + to_string(t) + " does not cover " + s.family);
}

std::int64_t negate(std::int64_t v) { return checked_mul(v, -1); }

}  // namespace

std::string to_string(ForcingTheorem t) {
  for (const auto& [id, name] : kTheorems) {
    if (id == t) return name;
  }
  return "?";
}

ForcingTheorem parse_forcing_theorem(std::string_view text) {
  for (const auto& [id, name] : kTheorems) {
    if (text == name) return id;
  }
  throw ParseError(0, 0, "unknown theorem '" + std::string(text) + "'");
}

PropertyReport sampled_constancy_check(const SymbolicFunction& f, ForcingTheorem theorem,
                                       const SampleBudget& budget) {
  const SymbolicStructure& s = f.domain;
  PropertyReport r;
  r.property = "forcing " + to_string(theorem);
  r.verdict = Verdict::HoldsOnSample;
  Forcing force{f, r};
  Rng rng(budget.seed);
  std::string reading;

  switch (theorem) {
    case ForcingTheorem::Arctic: {
      require_family(s, theorem, {"arctic"});
      reading = "; f(ninf) is left free";
      const Element zero = ExtInt::of(0);
      for (std::uint64_t k = 0; k < budget.samples; ++k) {
        const Element x = s.sample(rng);
        if (!std::get<ExtInt>(x).finite()) continue;
        // max(x,0) = x and x+0 = x give f(x) = f(0).
        if (!force.instance(x, zero) || !force.forced(x, zero)) return r;
      }
      break;
    }
    case ForcingTheorem::Tropical: {
      require_family(s, theorem, {"tropical"});
      reading = "; f(0) and f(pinf) are free";
      const Element one = ExtInt::of(1);
      for (std::uint64_t k = 0; k < budget.samples; ++k) {
        const Element x = s.sample(rng);
        const ExtInt& e = std::get<ExtInt>(x);
        if (!e.finite() || e.value < 1) continue;
        // min(x,1) = 1 gives f(x+1) = f(x).
        if (!force.instance(x, one) || !force.forced(x, one)) return r;
      }
      break;
    }
    case ForcingTheorem::GMinPlus: {
      require_family(s, theorem, {"gminplus"});
      const Element zero = ExtInt::of(0);
      for (std::uint64_t k = 0; k < budget.samples; ++k) {
        const Element x = s.sample(rng);
        const std::int64_t v = std::get<ExtInt>(x).value;
        // x >= 0: min(x,-x) = -x gives m(x) = m(0); x < 0: min(x,0) = x.
        const Element partner = v >= 0 ? Element(ExtInt::of(negate(v))) : zero;
        if (!force.instance(x, partner) || !force.forced(x, zero)) return r;
      }
      break;
    }
    case ForcingTheorem::OneHasInverse: {
      if (!s.zero || !s.one) throw InapplicableError(s.family + " lacks a zero or a one");
      std::optional<Element> minus_one;
      std::vector<Element> candidates{*s.zero, *s.one};
      for (int k = 0; k < 64; ++k) candidates.push_back(s.sample(rng));
      for (const auto& u : candidates) {
        if (s.equal(s.add(u, *s.one), *s.zero)) {
          minus_one = u;
          break;
        }
      }
      if (!minus_one) throw InapplicableError("1 has no additive inverse in " + s.family);
      for (std::uint64_t k = 0; k < budget.samples; ++k) {
        const Element x = s.sample(rng);
        // (x - 1) + 1 = x, so f(x) = f(1).
        const Element shifted = s.add(x, *minus_one);
        if (!force.instance(shifted, *s.one) || !force.forced(x, *s.one)) return r;
      }
      break;
    }
    case ForcingTheorem::Litvinov: {
      require_family(s, theorem, {"litvinov"});
      reading = "; f(ninf) is left free";
      const Element unit = RatPair::of(0, 0);
      for (std::uint64_t k = 0; k < budget.samples; ++k) {
        const Element x = s.sample(rng);
        const RatPair& p = std::get<RatPair>(x);
        if (p.neg_inf) continue;
        const Rational a = abs(p.first), b = abs(p.second);
        const Element neg = RatPair::of(-p.first, -p.second);
        if (!force.instance(x, unit) || !force.instance(x, neg) ||
            !force.instance(RatPair::of(a, b), RatPair::of(a, -b)) ||
            !force.instance(RatPair::of(a, b), RatPair::of(-a, b)) || !force.forced(x, unit)) {
          return r;
        }
      }
      break;
    }
    case ForcingTheorem::Semifield: {
      require_family(s, theorem, {"qnonneg", "sh", "maxplusq"});
      reading = "; f(0) is free";
      const Element one = *s.one;
      for (std::uint64_t k = 0; k < budget.samples; ++k) {
        const Element x = s.sample(rng);
        if (s.equal(x, *s.zero)) continue;
        const Element inv = s.inverse(x);
        if (!force.instance(x, one) || !force.instance(inv, one) || !force.instance(x, inv) ||
            !force.forced(x, one)) {
          return r;
        }
      }
      break;
    }
    case ForcingTheorem::Basic: {
      if (!s.one) throw InapplicableError(s.family + " has no one");
      Element x = *s.one;
      for (std::uint64_t k = 0; k < budget.samples; ++k) {
        const Element y = s.sample(rng);
        if (!force.instance(y, *s.one)) return r;
        // Walk the basic sub-structure 1, 1+1, 1+1+1, ...
        if (k < 64) {
          x = s.add(x, *s.one);
          if (!force.forced(x, *s.one)) return r;
        }
      }
      reading = "; only the basic sub-structure is forced";
      break;
    }
  }

  const PropertyReport modular = check_property(f, Property::Modular, budget);
  r.checked += modular.checked;
  if (!modular.holds()) {
    r.verdict = Verdict::Fails;
    r.witness = modular.witness;
    r.lhs = modular.lhs;
    r.rhs = modular.rhs;
    r.note = "forcing identities consistent, modular law fails";
    return r;
  }
  r.note = "forcing identities consistent, modular on " + std::to_string(modular.checked) +
           " samples; sampled, not proven" + reading;
  return r;
}

}  // namespace semimod
