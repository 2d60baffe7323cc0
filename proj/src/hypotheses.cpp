#include "hypotheses.hpp"

#include "semimod/axioms.hpp"
#include "semimod/complements.hpp"
#include "semimod/errors.hpp"

namespace semimod::detail {
namespace {

std::string witness_text(const PropertyReport& r) {
  std::string out;
  for (const auto& w : r.witness) out += (out.empty() ? "" : " ") + w;
  return out.empty() ? "" : " (witness " + out + ")";
}

}  // namespace

void require_semiring(const FiniteStructure& s) {
  const AxiomReport& report = s.axioms();
  if (!report.at_least(StructureClass::Semiring)) {
    throw HypothesisError("semiring", "domain classifies as " + to_string(report.verified_class));
  }
}

void require_zerosumfree(const FiniteStructure& s) {
  require_semiring(s);
  const FlagResult r = decide_flag(s, Flag::Zerosumfree);
  if (!r.holds()) {
    throw HypothesisError("zerosumfree", r.witness.at(0) + " + " + r.witness.at(1) + " = 0");
  }
}

void require_boolean_comp(const FiniteStructure& s) {
  require_zerosumfree(s);
  if (s.powerset_bits()) return;
  const Index o = *s.one();
  const Index two = s.add(o, o);
  if (!complement(s, two)) throw HypothesisError("1+1 complemented", "1+1 = " + s.name(two) + " has no complement");
}

Index require_complemented(const FiniteStructure& s, Index x) {
  if (x >= s.size()) throw DomainError("element index out of range");
  if (auto c = complement(s, x)) return *c;
  throw HypothesisError("complemented", "element " + s.name(x) + " has no complement");
}

void require_ring(const Codomain& c) {
  if (!c.is_ring()) throw HypothesisError("ring codomain", c.name() + " has no ring multiplication");
}

void require_ordered_group(const Codomain& c) {
  if (!c.is_ordered()) throw HypothesisError("ordered codomain", c.name() + " is not ordered");
}

void require_finitely_additive(const FiniteFunction& f) {
  const PropertyReport& r = f.finitely_additive_report();
  if (!r.holds()) throw HypothesisError("finitely additive", "f is not finitely additive" + witness_text(r));
}

void require_normalized(const FiniteFunction& f) {
  require_ring(f.codomain());
  if (!f.domain().one()) throw HypothesisError("normalized", "domain has no one");
  const Index o = *f.domain().one();
  if (f(o) != f.codomain().unit()) {
    throw HypothesisError("normalized", "f(1) = " + to_string(f(o)));
  }
}

void require_probability(const FiniteFunction& f) {
  if (!f.codomain().is_ordered_ring()) {
    throw HypothesisError("probability", "codomain " + f.codomain().name() + " is not an ordered ring");
  }
  if (!f.domain().zero() || !f.domain().one()) throw HypothesisError("probability", "domain lacks 0 or 1");
  const PropertyReport r = check_property(f, Property::Probability);
  if (!r.holds()) throw HypothesisError("probability", r.note + witness_text(r));
}

void require_modular(const FiniteFunction& f) {
  const PropertyReport& r = f.modular_report();
  if (!r.holds()) throw HypothesisError("modular", "f is not modular" + witness_text(r));
}

void require_idempotent(const FiniteStructure& s) {
  const FlagResult r = decide_flag(s, Flag::MultiplicativelyIdempotent);
  if (!r.holds()) {
    throw HypothesisError("multiplicatively idempotent", r.witness.at(0) + " * " + r.witness.at(0) + " differs");
  }
}

void require_simple(const FiniteStructure& s) {
  require_semiring(s);
  const FlagResult r = decide_flag(s, Flag::Simple);
  if (!r.holds()) throw HypothesisError("simple", r.witness.at(0) + " + 1 differs from 1");
}

void require_indices(const FiniteStructure& s, const std::vector<Index>& xs) {
  for (Index x : xs) {
    if (x >= s.size()) throw DomainError("element index " + std::to_string(x) + " out of range");
  }
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

Index product_of(const FiniteStructure& s, const std::vector<Index>& xs) {
  if (xs.empty()) {
    if (!s.one()) throw InapplicableError("empty product needs a one");
    return *s.one();
  }
  Index out = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) out = s.mul(out, xs[i]);
  return out;
}

Index product_of(const FiniteStructure& s, const std::vector<Index>& xs, const std::vector<std::size_t>& pick) {
  std::vector<Index> chosen;
  for (std::size_t i : pick) chosen.push_back(xs[i]);
  return product_of(s, chosen);
}

Index sum_of(const FiniteStructure& s, const std::vector<Index>& xs) {
  if (xs.empty()) {
    if (!s.zero()) throw InapplicableError("empty sum needs a zero");
    return *s.zero();
  }
  Index out = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) out = s.add(out, xs[i]);
  return out;
}

}  // namespace semimod::detail
