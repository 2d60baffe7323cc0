#include "semimod/inclusion_exclusion.hpp"

#include "hypotheses.hpp"
#include "semimod/complements.hpp"
#include "semimod/errors.hpp"

namespace semimod {

using namespace detail;

InequalityResult poincare(const FiniteFunction& m, const std::vector<Index>& elements) {
  const FiniteStructure& s = m.domain();
  const Codomain& c = m.codomain();
  if (elements.empty()) throw ParameterError("poincare needs at least one element");
  if (elements.size() > 20) throw BudgetError("poincare is limited to 20 elements");
  require_indices(s, elements);
  require_idempotent(s);
  require_modular(m);

  InequalityResult out;
  out.lhs = m(sum_of(s, elements));
  out.rhs = c.neutral();
  std::uint64_t terms = 1;
  for (std::size_t k = 1; k <= elements.size(); ++k) {
    Value& side = k % 2 == 0 ? out.lhs : out.rhs;
    for (const auto& pick : subsets_of_size(elements.size(), k)) {
      side = c.plus(side, m(product_of(s, elements, pick)));
      ++terms;
    }
  }
  out.report.property = "poincare";
  out.report.checked = terms;
  out.report.lhs = out.lhs;
  out.report.rhs = out.rhs;
  if (out.lhs != out.rhs) {
    out.report.verdict = Verdict::Fails;
    for (Index x : elements) out.report.witness.push_back(s.name(x));
    out.report.witness_indices = elements;
  }
  return out;
}

PropertyReport independence_propagation(const FiniteFunction& f, const std::vector<Index>& elements) {
  const FiniteStructure& s = f.domain();
  const Codomain& c = f.codomain();
  if (elements.size() < 2) throw ParameterError("independence_propagation needs n >= 2");
  require_indices(s, elements);
  require_idempotent(s);
  require_ring(c);
  require_modular(f);
  const PropertyReport ind = are_independent(f, elements);
  if (!ind.holds()) {
    std::string names;
    for (const auto& w : ind.witness) names += (names.empty() ? "" : " ") + w;
    throw HypothesisError("independent", "product of {" + names + "} breaks independence");
  }
  const std::vector<Index> head(elements.begin(), elements.end() - 1);
  const Index first = sum_of(s, head);
  const Index last = elements.back();
  PropertyReport r;
  r.property = "independence propagation";
  r.checked = 1;
  r.lhs = f(s.mul(first, last));
  r.rhs = c.times(f(first), f(last));
  if (*r.lhs != *r.rhs) {
    r.verdict = Verdict::Fails;
    for (Index x : elements) r.witness.push_back(s.name(x));
    r.witness_indices = elements;
  }
  return r;
}

CorollaryCheck boolean_corollary(const FiniteFunction& f) {
  const FiniteStructure& s = f.domain();
  require_boolean(s);
  CorollaryCheck out;
  out.finitely_additive = f.finitely_additive_report().holds();
  out.modular = f.modular_report().holds();
  out.zero_at_zero = f(*s.zero()) == f.codomain().neutral();
  return out;
}

Restriction restrict_to_comp(const FiniteFunction& f) {
  const FiniteStructure& s = f.domain();
  require_boolean_comp(s);
  const CompAlgebraReport comp = comp_boolean_algebra(s);
  if (!comp.algebra) throw HypothesisError("1+1 complemented", comp.reason);

  std::vector<Value> values;
  values.reserve(comp.embedding.size());
  for (Index x : comp.embedding) values.push_back(f(x));
  Restriction out{FiniteFunction(*comp.algebra, f.codomain(), std::move(values)), comp.embedding, false, {}, {}};
  out.finitely_additive = f.finitely_additive_report().holds();
  out.modular = out.restricted.modular_report();
  out.modular.property = "modular on comp(S)";
  if (!out.modular.holds()) {
    // Report witnesses with the original structure's names and indices.
    for (auto& idx : out.modular.witness_indices) idx = out.embedding[idx];
  }
  if (!out.finitely_additive) out.modular.note = "f is not finitely additive; the theorem does not apply";
  if (comp.embedding.size() == s.size()) out.corollary = boolean_corollary(f);
  return out;
}

SymbolicRestriction restrict_to_comp(const SymbolicFunction& f, const SampleBudget& budget) {
  const SymbolicStructure& s = f.domain;
  if (!s.complement) throw InapplicableError(s.family + " has no analytic complement");
  if (!s.zero || !s.one) throw HypothesisError("semiring", s.family + " lacks a zero or a one");
  if (!complement(s, s.add(*s.one, *s.one))) throw HypothesisError("1+1 complemented", "1+1 has no complement");

  SymbolicRestriction out;
  out.finitely_additive = check_property(f, Property::FinitelyAdditive, budget);
  PropertyReport& r = out.modular;
  r.property = "modular on comp(S)";
  r.verdict = Verdict::HoldsOnSample;
  r.note = "sampled, not proven";
  out.boolean_domain = true;
  Rng rng(budget.seed);
  const Codomain& c = f.codomain;
  for (std::uint64_t k = 0; k < budget.samples; ++k) {
    const Element a = s.sample(rng);
    const Element b = s.sample(rng);
    const bool ca = complement(s, a).has_value();
    const bool cb = complement(s, b).has_value();
    if (!ca || !cb) {
      out.boolean_domain = false;
      continue;
    }
    ++r.checked;
    const Value lhs = c.plus(f(s.add(a, b)), f(s.mul(a, b)));
    const Value rhs = c.plus(f(a), f(b));
    if (lhs != rhs) {
      r.verdict = Verdict::Fails;
      r.witness = {to_string(a), to_string(b)};
      r.lhs = lhs;
      r.rhs = rhs;
      break;
    }
  }
  return out;
}

}  // namespace semimod
