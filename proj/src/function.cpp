#include "semimod/function.hpp"

#include "semimod/errors.hpp"

#include <mutex>

namespace semimod {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::HoldsOnSample:
      return "holds-on-sample";
  }
  return "?";
}

std::string to_string(Property p) {
  switch (p) {
    case Property::FinitelyAdditive:
      return "finitely_additive";
    case Property::Modular:
      return "modular";
    case Property::Normalized:
      return "normalized";
    case Property::Probability:
      return "probability";
  }
  return "?";
}

Property parse_property(std::string_view text) {
  if (text == "finitely_additive") return Property::FinitelyAdditive;
  if (text == "modular") return Property::Modular;
  if (text == "normalized") return Property::Normalized;
  if (text == "probability") return Property::Probability;
  throw ParseError(0, 0, "unknown property '" + std::string(text) + "'");
}

struct FiniteFunction::Impl {
  Impl(FiniteStructure d, Codomain c, std::vector<Value> v)
      : domain(std::move(d)), codomain(c), values(std::move(v)) {}

  FiniteStructure domain;
  Codomain codomain;
  std::vector<Value> values;

  mutable std::once_flag fa_once;
  mutable std::unique_ptr<PropertyReport> fa;
  mutable std::once_flag modular_once;
  mutable std::unique_ptr<PropertyReport> modular;
};

namespace {

PropertyReport compute_finitely_additive(const FiniteFunction& f);
PropertyReport compute_modular(const FiniteFunction& f);

}  // namespace

FiniteFunction::FiniteFunction(FiniteStructure domain, Codomain codomain, std::vector<Value> values) {
  if (values.size() != domain.size()) {
    throw DomainError("function has " + std::to_string(values.size()) + " values for a domain of size " +
                      std::to_string(domain.size()));
  }
  for (auto& v : values) v = codomain.normalize(v);
  impl_ = std::make_shared<Impl>(std::move(domain), codomain, std::move(values));
}

FiniteFunction FiniteFunction::from_rule(FiniteStructure domain, Codomain codomain,
                                         const std::function<Value(Index)>& rule) {
  std::vector<Value> values;
  values.reserve(domain.size());
  for (Index x = 0; x < domain.size(); ++x) values.push_back(rule(x));
  return FiniteFunction(std::move(domain), codomain, std::move(values));
}

const FiniteStructure& FiniteFunction::domain() const { return impl_->domain; }
const Codomain& FiniteFunction::codomain() const { return impl_->codomain; }
const Value& FiniteFunction::operator()(Index x) const { return impl_->values.at(x); }
const std::vector<Value>& FiniteFunction::values() const { return impl_->values; }

const PropertyReport& FiniteFunction::finitely_additive_report() const {
  std::call_once(impl_->fa_once,
                 [this] { impl_->fa = std::make_unique<PropertyReport>(compute_finitely_additive(*this)); });
  return *impl_->fa;
}

const PropertyReport& FiniteFunction::modular_report() const {
  std::call_once(impl_->modular_once,
                 [this] { impl_->modular = std::make_unique<PropertyReport>(compute_modular(*this)); });
  return *impl_->modular;
}

Value SymbolicFunction::operator()(const Element& e) const { return codomain.normalize(rule(e)); }

namespace {

void fail_with(PropertyReport& r, const FiniteStructure& s, std::vector<Index> idx, Value lhs, Value rhs) {
  r.verdict = Verdict::Fails;
  r.witness.clear();
  for (Index i : idx) r.witness.push_back(s.name(i));
  r.witness_indices = std::move(idx);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
}

std::uint64_t pow3(unsigned m) {
  std::uint64_t out = 1;
  for (unsigned k = 0; k < m; ++k) out *= 3;
  return out;
}

PropertyReport compute_finitely_additive(const FiniteFunction& f) {
  const FiniteStructure& s = f.domain();
  const Codomain& c = f.codomain();
  if (!s.zero()) throw InapplicableError("finitely_additive requires a domain zero");
  PropertyReport r;
  r.property = to_string(Property::FinitelyAdditive);
  const Index z = *s.zero();

  const auto check = [&](Index a, Index b) {
    ++r.checked;
    const Value lhs = f(s.add(a, b));
    const Value rhs = c.plus(f(a), f(b));
    if (lhs != rhs) {
      fail_with(r, s, {a, b}, lhs, rhs);
      return false;
    }
    return true;
  };

  if (const auto bits = s.powerset_bits()) {
    const Index full = *s.one();
    if (pow3(*bits) <= kPairBudget) {
      for (Index a = 0; a <= full; ++a) {
        const Index rest = full ^ a;
        Index b = 0;
        while (true) {
          if (!check(a, b)) return r;
          if (b == rest) break;
          b = (b - rest) & rest;
        }
      }
      return r;
    }
    // f is finitely additive iff f({}) + f({}) = f({}) and
    // f(A) = f({min A}) + f(A \ {min A}) for every A with two or more points.
    r.note = "decided by singleton decomposition";
    if (!check(z, z)) return r;
    for (Index a = 1; a <= full; ++a) {
      const Index low = a & (~a + 1);
      if (low == a) continue;
      if (!check(low, a ^ low)) return r;
    }
    return r;
  }

  const std::uint64_t n = s.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (s.mul(a, b) != z) continue;
      if (!check(a, b)) return r;
    }
  }
  return r;
}

PropertyReport compute_modular(const FiniteFunction& f) {
  const FiniteStructure& s = f.domain();
  const Codomain& c = f.codomain();
  PropertyReport r;
  r.property = to_string(Property::Modular);
  const auto check = [&](Index a, Index b) {
    ++r.checked;
    const Value lhs = c.plus(f(s.add(a, b)), f(s.mul(a, b)));
    const Value rhs = c.plus(f(a), f(b));
    if (lhs != rhs) {
      fail_with(r, s, {a, b}, lhs, rhs);
      return false;
    }
    return true;
  };
  const std::uint64_t n = s.size();
  if (n * n <= kPairBudget) {
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (!check(a, b)) return r;
      }
    }
    return r;
  }
  if (!s.powerset_bits()) throw BudgetError("modularity check exceeds the pair budget");
  // Over a cancellative codomain, m is modular on a powerset iff m - m({})
  // is additive over singletons.
  r.note = "decided by singleton decomposition";
  for (Index a = 1; a <= *s.one(); ++a) {
    const Index low = a & (~a + 1);
    if (low == a) continue;
    if (!check(low, a ^ low)) return r;
  }
  return r;
}

PropertyReport check_normalized(const FiniteFunction& f) {
  const FiniteStructure& s = f.domain();
  const Codomain& c = f.codomain();
  if (!s.one()) throw InapplicableError("normalized requires a domain one");
  if (!c.is_ring()) throw InapplicableError("normalized requires a codomain with a unit");
  PropertyReport r;
  r.property = to_string(Property::Normalized);
  r.checked = 1;
  const Index o = *s.one();
  if (f(o) != c.unit()) fail_with(r, s, {o}, f(o), c.unit());
  return r;
}

PropertyReport check_probability(const FiniteFunction& f) {
  const FiniteStructure& s = f.domain();
  const Codomain& c = f.codomain();
  if (!c.is_ordered_ring()) throw InapplicableError("probability requires an ordered ring codomain");
  if (!s.zero() || !s.one()) throw InapplicableError("probability requires a domain zero and one");
  PropertyReport r;
  r.property = to_string(Property::Probability);
  for (Index x = 0; x < s.size(); ++x) {
    ++r.checked;
    if (!c.less_equal(c.neutral(), f(x))) {
      fail_with(r, s, {x}, f(x), c.neutral());
      r.note = "clause 1: p(s) >= 0";
      return r;
    }
  }
  const PropertyReport norm = check_normalized(f);
  r.checked += norm.checked;
  if (!norm.holds()) {
    r.verdict = Verdict::Fails;
    r.witness = norm.witness;
    r.witness_indices = norm.witness_indices;
    r.lhs = norm.lhs;
    r.rhs = norm.rhs;
    r.note = "clause 2: p(1) = 1";
    return r;
  }
  const PropertyReport& fa = f.finitely_additive_report();
  r.checked += fa.checked;
  if (!fa.holds()) {
    r.verdict = Verdict::Fails;
    r.witness = fa.witness;
    r.witness_indices = fa.witness_indices;
    r.lhs = fa.lhs;
    r.rhs = fa.rhs;
    r.note = "clause 3: p(s+t) = p(s) + p(t) for st = 0";
  }
  return r;
}

}  // namespace

PropertyReport check_property(const FiniteFunction& f, Property which) {
  switch (which) {
    case Property::FinitelyAdditive:
      return f.finitely_additive_report();
    case Property::Modular:
      return f.modular_report();
    case Property::Normalized:
      return check_normalized(f);
    case Property::Probability:
      return check_probability(f);
  }
  throw InapplicableError("unknown property");
}

// ---------------------------------------------------------------------------
// Symbolic domains
// ---------------------------------------------------------------------------

namespace {

void fail_with(PropertyReport& r, std::vector<Element> elems, Value lhs, Value rhs) {
  r.verdict = Verdict::Fails;
  r.witness.clear();
  for (const auto& e : elems) r.witness.push_back(to_string(e));
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
}

}  // namespace

PropertyReport check_property(const SymbolicFunction& f, Property which, const SampleBudget& budget) {
  const SymbolicStructure& s = f.domain;
  const Codomain& c = f.codomain;
  PropertyReport r;
  r.property = to_string(which);
  r.verdict = Verdict::HoldsOnSample;
  r.note = "sampled, not proven";
  Rng rng(budget.seed);

  const auto check_fa = [&](const Element& a, const Element& b) {
    if (!s.equal(s.mul(a, b), *s.zero)) return true;
    ++r.checked;
    const Value lhs = f(s.add(a, b));
    const Value rhs = c.plus(f(a), f(b));
    if (lhs != rhs) {
      fail_with(r, {a, b}, lhs, rhs);
      return false;
    }
    return true;
  };

  switch (which) {
    case Property::Modular:
      for (std::uint64_t k = 0; k < budget.samples; ++k) {
        const Element a = s.sample(rng);
        const Element b = s.sample(rng);
        ++r.checked;
        const Value lhs = c.plus(f(s.add(a, b)), f(s.mul(a, b)));
        const Value rhs = c.plus(f(a), f(b));
        if (lhs != rhs) {
          fail_with(r, {a, b}, lhs, rhs);
          return r;
        }
      }
      return r;
    case Property::FinitelyAdditive:
      if (!s.zero) throw InapplicableError("finitely_additive requires a domain zero");
      for (std::uint64_t k = 0; k < budget.samples; ++k) {
        const Element a = s.sample(rng);
        const Element b = s.sample(rng);
        if (!check_fa(a, b)) return r;
        if (!check_fa(a, *s.zero)) return r;
        if (s.complement) {
          if (auto ca = s.complement(a); ca && !check_fa(s.mul(b, *ca), a)) return r;
        }
      }
      return r;
    case Property::Normalized:
    case Property::Probability: {
      if (!s.one) throw InapplicableError(to_string(which) + " requires a domain one");
      if (!c.is_ring()) throw InapplicableError(to_string(which) + " requires a codomain with a unit");
      if (which == Property::Probability && !c.is_ordered_ring()) {
        throw InapplicableError("probability requires an ordered ring codomain");
      }
      ++r.checked;
      if (f(*s.one) != c.unit()) {
        fail_with(r, {*s.one}, f(*s.one), c.unit());
        r.note = which == Property::Probability ? "clause 2: p(1) = 1" : "";
        return r;
      }
      if (which == Property::Normalized) return r;
      for (std::uint64_t k = 0; k < budget.samples; ++k) {
        const Element a = s.sample(rng);
        ++r.checked;
        if (!c.less_equal(c.neutral(), f(a))) {
          fail_with(r, {a}, f(a), c.neutral());
          r.note = "clause 1: p(s) >= 0";
          return r;
        }
      }
      PropertyReport fa = check_property(f, Property::FinitelyAdditive, budget);
      r.checked += fa.checked;
      if (!fa.holds()) {
        fa.property = r.property;
        fa.note = "clause 3: p(s+t) = p(s) + p(t) for st = 0";
        return fa;
      }
      return r;
    }
  }
  throw InapplicableError("unknown property");
}

// ---------------------------------------------------------------------------
// Built-in functions
// ---------------------------------------------------------------------------

namespace {

unsigned require_powerset(const FiniteStructure& s) {
  const auto bits = s.powerset_bits();
  if (!bits) throw InapplicableError("function is only defined on powerset domains");
  return *bits;
}

}  // namespace

FiniteFunction counting_measure(const FiniteStructure& powerset, const Codomain& codomain) {
  require_powerset(powerset);
  return FiniteFunction::from_rule(powerset, codomain, [](Index x) {
    return Value(static_cast<std::int64_t>(__builtin_popcount(x)));
  });
}

FiniteFunction uniform_probability(const FiniteStructure& powerset) {
  const unsigned m = require_powerset(powerset);
  return FiniteFunction::from_rule(powerset, Codomain::rationals(), [m](Index x) {
    return make_rational(__builtin_popcount(x), m);
  });
}

FiniteFunction weighted_probability(const FiniteStructure& powerset, const std::vector<Value>& weights) {
  const unsigned m = require_powerset(powerset);
  if (weights.size() != m) throw DomainError("expected one weight per base point");
  return FiniteFunction::from_rule(powerset, Codomain::rationals(), [&](Index x) {
    Value sum = 0;
    for (unsigned j = 0; j < m; ++j) {
      if (x & (Index{1} << j)) sum += weights[j];
    }
    return sum;
  });
}

FiniteStructure product_space(unsigned n) {
  if (n < 1 || n > 4) throw ParameterError("product_space(n) requires 1 <= n <= 4");
  return FiniteStructure::powerset(1u << n);
}

Index coordinate_event(unsigned n, unsigned j) {
  if (n < 1 || n > 4 || j >= n) throw ParameterError("coordinate_event(n, j) requires j < n <= 4");
  Index mask = 0;
  for (unsigned w = 0; w < (1u << n); ++w) {
    if (w & (1u << j)) mask |= Index{1} << w;
  }
  return mask;
}

namespace {

Value numeric_value(const Element& e) {
  if (const auto* x = std::get_if<ExtInt>(&e)) {
    if (!x->finite()) throw DomainError("identity is undefined at " + to_string(*x));
    return make_rational(x->value);
  }
  if (const auto* x = std::get_if<ExtRational>(&e)) {
    if (x->neg_inf) throw DomainError("identity is undefined at ninf");
    return x->value;
  }
  throw DomainError("identity needs a numeric element, got " + to_string(e));
}

}  // namespace

SymbolicFunction make_symbolic_function(const SymbolicStructure& domain, const Codomain& codomain,
                                        std::string_view spec) {
  SymbolicFunction f;
  f.domain = domain;
  f.codomain = codomain;
  f.description = std::string(spec);

  if (spec.substr(0, 6) == "const:") {
    const Value v = codomain.parse(spec.substr(6));
    f.rule = [v](const Element&) { return v; };
    return f;
  }
  if (spec == "identity") {
    f.rule = numeric_value;
    return f;
  }
  if (spec == "numerator-parity") {
    f.rule = [](const Element& e) {
      const Value v = numeric_value(e);
      return Value(Integer(v.numerator() % 2 == 0 ? 0 : 1));
    };
    return f;
  }
  if (spec == "indicator-cofinite") {
    f.rule = [](const Element& e) {
      const auto* x = std::get_if<FiniteCofiniteSet>(&e);
      if (!x) throw DomainError("indicator-cofinite needs a finite/cofinite set");
      return Value(x->is_cofinite() ? 1 : 0);
    };
    return f;
  }
  if (spec == "interval-length") {
    const auto* whole = domain.one ? std::get_if<IntervalUnionSet>(&*domain.one) : nullptr;
    if (!whole || whole->parts().size() != 1) {
      throw InapplicableError("interval-length needs an interval_unions domain");
    }
    const Rational lo = whole->parts().front().lo;
    const Rational hi = whole->parts().front().hi;
    f.rule = [lo, hi](const Element& e) {
      const auto* x = std::get_if<IntervalUnionSet>(&e);
      if (!x) throw DomainError("interval-length needs an interval union");
      return interval_length_prob(*x, lo, hi);
    };
    return f;
  }
  if (spec.substr(0, 10) == "piecewise:") {
    // piecewise:label=v,...,default=v
    std::vector<std::pair<Element, Value>> points;
    std::optional<Value> fallback;
    std::string_view rest = spec.substr(10);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      const auto eq = item.rfind('=');
      if (eq == std::string_view::npos) throw ParseError(0, 0, "piecewise entries are label=value");
      const Value v = codomain.parse(item.substr(eq + 1));
      if (item.substr(0, eq) == "default") {
        fallback = v;
      } else {
        points.emplace_back(domain.parse(item.substr(0, eq)), v);
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (!fallback) throw ParseError(0, 0, "piecewise needs a default=value entry");
    const auto equal = domain.equal;
    f.rule = [points, fallback, equal](const Element& e) {
      for (const auto& [x, v] : points) {
        if (equal(x, e)) return v;
      }
      return *fallback;
    };
    return f;
  }
  throw ParseError(0, 0, "unknown function '" + std::string(spec) + "'");
}

}  // namespace semimod
