#include "semimod/probability.hpp"

#include "hypotheses.hpp"
#include "semimod/complements.hpp"
#include "semimod/errors.hpp"

namespace semimod {

using namespace detail;

namespace {

void set_witness(PropertyReport& r, const FiniteStructure& s, const std::vector<Index>& xs) {
  r.witness.clear();
  for (Index x : xs) r.witness.push_back(s.name(x));
  r.witness_indices = xs;
}

Value product_of_values(const Codomain& c, const FiniteFunction& f, const std::vector<Index>& xs) {
  Value out = c.unit();
  for (Index x : xs) out = c.times(out, f(x));
  return out;
}

void require_partition(const FiniteFunction& p, const std::vector<Index>& partition) {
  const FiniteStructure& s = p.domain();
  if (partition.empty()) throw ParameterError("partition must be nonempty");
  require_indices(s, partition);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    for (std::size_t j = i + 1; j < partition.size(); ++j) {
      if (s.mul(partition[i], partition[j]) != *s.zero()) {
        throw HypothesisError("partition disjoint",
                              s.name(partition[i]) + " * " + s.name(partition[j]) + " is not 0");
      }
    }
  }
  const Index total = sum_of(s, partition);
  if (total != *s.one()) throw HypothesisError("partition sums to 1", "sum is " + s.name(total));
  for (Index t : partition) {
    if (!p.codomain().is_unit(p(t))) {
      throw ConditioningError("p(" + s.name(t) + ") = " + to_string(p(t)) + " is not invertible");
    }
  }
}

}  // namespace

PropertyReport are_independent(const FiniteFunction& f, const std::vector<Index>& elements) {
  const FiniteStructure& s = f.domain();
  const Codomain& c = f.codomain();
  if (elements.empty()) throw ParameterError("independence needs at least one element");
  require_indices(s, elements);
  require_ring(c);
  PropertyReport r;
  r.property = "independent";
  for (std::size_t k = 1; k <= elements.size(); ++k) {
    for (const auto& pick : subsets_of_size(elements.size(), k)) {
      ++r.checked;
      std::vector<Index> chosen;
      for (std::size_t i : pick) chosen.push_back(elements[i]);
      const Value lhs = f(product_of(s, chosen));
      const Value rhs = product_of_values(c, f, chosen);
      if (lhs != rhs) {
        r.verdict = Verdict::Fails;
        set_witness(r, s, chosen);
        r.lhs = lhs;
        r.rhs = rhs;
        return r;
      }
    }
  }
  return r;
}

IndependenceEquivalence independence_complement_equiv(const FiniteFunction& f,
                                                      const std::vector<Index>& elements) {
  const FiniteStructure& s = f.domain();
  const Codomain& c = f.codomain();
  if (elements.empty()) throw ParameterError("independence needs at least one element");
  if (elements.size() > 16) throw BudgetError("at most 16 elements");
  require_semiring(s);
  require_ring(c);
  require_finitely_additive(f);
  require_normalized(f);
  std::vector<Index> comps;
  for (Index x : elements) comps.push_back(require_complemented(s, x));

  IndependenceEquivalence out;
  out.report.property = "independence complement equivalence";
  out.independent = are_independent(f, elements).holds();
  out.all_patterns_independent = true;
  out.all_pattern_products = true;
  std::vector<Index> first_dependent, first_unequal;
  const std::size_t n = elements.size();
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << n); ++pattern) {
    std::vector<Index> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back((pattern >> i) & 1 ? comps[i] : elements[i]);
    const PropertyReport ind = are_independent(f, t);
    out.report.checked += ind.checked + 1;
    if (!ind.holds() && out.all_patterns_independent) {
      out.all_patterns_independent = false;
      first_dependent = t;
    }
    if (f(product_of(s, t)) != product_of_values(c, f, t) && out.all_pattern_products) {
      out.all_pattern_products = false;
      first_unequal = t;
    }
  }
  const bool agree = out.independent == out.all_patterns_independent &&
                     out.all_patterns_independent == out.all_pattern_products;
  if (!agree) {
    out.report.verdict = Verdict::Fails;
    if (!first_dependent.empty()) {
      set_witness(out.report, s, first_dependent);
      out.report.note = "condition (2) fails on this pattern while another condition holds";
    } else {
      set_witness(out.report, s, first_unequal);
      out.report.note = "condition (3) fails on this pattern while another condition holds";
    }
  }
  return out;
}

MetricResult semi_metric(const FiniteFunction& f, const std::vector<Index>& points) {
  const FiniteStructure& s = f.domain();
  const Codomain& c = f.codomain();
  require_zerosumfree(s);
  require_ordered_group(c);
  for (Index x = 0; x < s.size(); ++x) {
    if (!c.less_equal(c.neutral(), f(x))) {
      throw HypothesisError("non-negative", "f(" + s.name(x) + ") = " + to_string(f(x)));
    }
  }
  require_finitely_additive(f);

  MetricResult out;
  if (points.empty()) {
    out.points = complemented_elements(s).elements;
  } else {
    require_indices(s, points);
    for (Index x : points) require_complemented(s, x);
    out.points = points;
  }
  const std::size_t k = out.points.size();
  out.distance.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out.distance[i * k + j] = f(symdiff(s, out.points[i], out.points[j]));
  }

  PropertyReport& r = out.report;
  r.property = "semi-metric";
  const auto fail = [&](std::vector<Index> xs, const Value& lhs, const Value& rhs, const char* note) {
    r.verdict = Verdict::Fails;
    set_witness(r, s, xs);
    r.lhs = lhs;
    r.rhs = rhs;
    r.note = note;
  };
  for (std::size_t i = 0; i < k && r.holds(); ++i) {
    for (std::size_t j = 0; j < k && r.holds(); ++j) {
      ++r.checked;
      const Value& d = out.at(i, j);
      if (!c.less_equal(c.neutral(), d)) {
        fail({out.points[i], out.points[j]}, d, c.neutral(), "non-negativity");
      } else if (i == j && d != c.neutral()) {
        fail({out.points[i], out.points[j]}, d, c.neutral(), "d(s,s) = 0");
      } else if (d != out.at(j, i)) {
        fail({out.points[i], out.points[j]}, d, out.at(j, i), "symmetry");
      }
    }
  }
  for (std::size_t i = 0; i < k && r.holds(); ++i) {
    for (std::size_t j = 0; j < k && r.holds(); ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        ++r.checked;
        const Value via = c.plus(out.at(i, j), out.at(j, l));
        if (!c.less_equal(out.at(i, l), via)) {
          fail({out.points[i], out.points[j], out.points[l]}, out.at(i, l), via, "triangle inequality");
          break;
        }
      }
    }
  }

  out.positive = true;
  for (Index x = 0; x < s.size(); ++x) {
    if ((f(x) == c.neutral()) != (x == *s.zero())) {
      out.positive = false;
      break;
    }
  }
  if (out.positive) {
    out.metric = r.holds();
    for (std::size_t i = 0; i < k && out.metric; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i != j && out.at(i, j) == c.neutral()) {
          out.metric = false;
          fail({out.points[i], out.points[j]}, out.at(i, j), c.neutral(), "positive f but d(s,t) = 0 for s != t");
          break;
        }
      }
    }
  }
  return out;
}

Value conditional(const FiniteFunction& p, Index s, Index t) {
  const FiniteStructure& d = p.domain();
  require_indices(d, {s, t});
  require_probability(p);
  const Codomain& c = p.codomain();
  if (!c.is_unit(p(t))) throw ConditioningError("p(" + d.name(t) + ") = " + to_string(p(t)) + " is not invertible");
  return c.divide(p(d.mul(s, t)), p(t));
}

ConditionalFunction conditional_function(const FiniteFunction& p, Index t) {
  const FiniteStructure& d = p.domain();
  require_indices(d, {t});
  require_probability(p);
  const Codomain& c = p.codomain();
  if (!c.is_unit(p(t))) throw ConditioningError("p(" + d.name(t) + ") = " + to_string(p(t)) + " is not invertible");
  const Value pt = p(t);
  FiniteFunction pt_fn =
      FiniteFunction::from_rule(d, c, [&](Index s) { return c.divide(p(d.mul(s, t)), pt); });
  PropertyReport report = check_property(pt_fn, Property::Probability);
  return ConditionalFunction{std::move(pt_fn), std::move(report)};
}

TotalProbability total_probability(const FiniteFunction& p, Index s, const std::vector<Index>& partition) {
  const FiniteStructure& d = p.domain();
  const Codomain& c = p.codomain();
  require_indices(d, {s});
  require_probability(p);
  require_partition(p, partition);
  TotalProbability out;
  out.direct = p(s);
  out.decomposed = c.neutral();
  for (Index t : partition) out.decomposed = c.plus(out.decomposed, c.times(conditional(p, s, t), p(t)));
  out.report.property = "total probability";
  out.report.checked = partition.size();
  out.report.lhs = out.direct;
  out.report.rhs = out.decomposed;
  if (out.direct != out.decomposed) {
    out.report.verdict = Verdict::Fails;
    set_witness(out.report, d, {s});
  }
  return out;
}

BayesResult bayes(const FiniteFunction& p, Index s, const std::vector<Index>& partition, std::size_t k) {
  const FiniteStructure& d = p.domain();
  const Codomain& c = p.codomain();
  require_indices(d, {s});
  require_probability(p);
  require_partition(p, partition);
  if (k >= partition.size()) throw ParameterError("partition index out of range");
  if (!c.is_unit(p(s))) throw ConditioningError("p(" + d.name(s) + ") = " + to_string(p(s)) + " is not invertible");

  std::vector<Value> joint;
  Value denominator = c.neutral();
  for (Index t : partition) {
    joint.push_back(c.times(conditional(p, s, t), p(t)));
    denominator = c.plus(denominator, joint.back());
  }
  BayesResult out;
  out.posterior_sum = c.neutral();
  for (const Value& j : joint) {
    out.posteriors.push_back(c.divide(j, denominator));
    out.posterior_sum = c.plus(out.posterior_sum, out.posteriors.back());
  }
  out.posterior = out.posteriors[k];
  out.direct = conditional(p, partition[k], s);
  out.report.property = "bayes";
  out.report.checked = partition.size();
  out.report.lhs = out.posterior;
  out.report.rhs = out.direct;
  if (out.posterior != out.direct || out.posterior_sum != c.unit()) {
    out.report.verdict = Verdict::Fails;
    set_witness(out.report, d, {s, partition[k]});
    if (out.posterior == out.direct) out.report.note = "posteriors do not sum to 1";
  }
  return out;
}

InequalityResult boole_bound(const FiniteFunction& p, const std::vector<Index>& elements) {
  const FiniteStructure& d = p.domain();
  const Codomain& c = p.codomain();
  if (elements.empty()) throw ParameterError("boole_bound needs at least one element");
  require_indices(d, elements);
  require_probability(p);
  require_boolean_comp(d);
  for (Index x : elements) require_complemented(d, x);

  const std::vector<Index> pieces = disjointify_complemented(d, elements);
  InequalityResult out;
  out.lhs = p(sum_of(d, elements));
  Value via_pieces = c.neutral();
  for (Index b : pieces) via_pieces = c.plus(via_pieces, p(b));
  if (via_pieces != out.lhs) throw CorruptionError("disjoint pieces do not add up to p(sum)");
  out.rhs = c.neutral();
  for (Index x : elements) out.rhs = c.plus(out.rhs, p(x));
  out.report.property = "boole";
  out.report.checked = elements.size();
  out.report.lhs = out.lhs;
  out.report.rhs = out.rhs;
  out.report.note = "lhs <= rhs";
  if (!c.less_equal(out.lhs, out.rhs)) {
    out.report.verdict = Verdict::Fails;
    set_witness(out.report, d, elements);
  }
  return out;
}

InequalityResult parallel_systems(const FiniteFunction& f, const std::vector<Index>& elements) {
  const FiniteStructure& d = f.domain();
  const Codomain& c = f.codomain();
  if (elements.empty()) throw ParameterError("parallel_systems needs at least one element");
  require_indices(d, elements);
  require_boolean_comp(d);
  require_ring(c);
  require_finitely_additive(f);
  require_normalized(f);
  for (Index x : elements) require_complemented(d, x);
  const PropertyReport ind = are_independent(f, elements);
  if (!ind.holds()) {
    std::string names;
    for (const auto& w : ind.witness) names += (names.empty() ? "" : " ") + w;
    throw HypothesisError("independent", "product of {" + names + "} breaks independence");
  }

  InequalityResult out;
  out.lhs = f(sum_of(d, elements));
  Value prod = c.unit();
  for (Index x : elements) prod = c.times(prod, c.minus(c.unit(), f(x)));
  out.rhs = c.minus(c.unit(), prod);
  out.report.property = "parallel systems";
  out.report.checked = 1;
  out.report.lhs = out.lhs;
  out.report.rhs = out.rhs;
  if (out.lhs != out.rhs) {
    out.report.verdict = Verdict::Fails;
    set_witness(out.report, d, elements);
  }
  return out;
}

}  // namespace semimod
