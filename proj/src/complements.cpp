#include "semimod/complements.hpp"

#include "semimod/axioms.hpp"
#include "semimod/errors.hpp"

namespace semimod {
namespace {

void require_semiring(const FiniteStructure& s) {
  const AxiomReport& report = s.axioms();
  if (!report.at_least(StructureClass::Semiring)) {
    throw HypothesisError("semiring", "structure classifies as " + to_string(report.verified_class));
  }
}

std::optional<Index> scan_complement(const FiniteStructure& s, Index x) {
  const Index z = *s.zero();
  const Index o = *s.one();
  std::optional<Index> found;
  for (Index c = 0; c < s.size(); ++c) {
    if (s.mul(x, c) != z || s.add(x, c) != o) continue;
    if (found) {
      throw CorruptionError("element " + s.name(x) + " has two complements: " + s.name(*found) +
                            " and " + s.name(c));
    }
    found = c;
  }
  return found;
}

}  // namespace

std::optional<Index> complement(const FiniteStructure& s, Index element) {
  require_semiring(s);
  if (element >= s.size()) throw DomainError("element index out of range");
  if (s.powerset_bits()) return *s.one() ^ element;
  return scan_complement(s, element);
}

Index ComplementMap::of(Index x) const {
  if (!contains(x)) throw DomainError("element " + std::to_string(x) + " is not complemented");
  return *partner[x];
}

ComplementMap complemented_elements(const FiniteStructure& s) {
  require_semiring(s);
  ComplementMap map;
  map.partner.resize(s.size());
  const bool powerset = s.powerset_bits().has_value();
  for (Index x = 0; x < s.size(); ++x) {
    map.partner[x] = powerset ? std::optional<Index>(*s.one() ^ x) : scan_complement(s, x);
    if (map.partner[x]) map.elements.push_back(x);
  }
  return map;
}

namespace {

Index complement_or_throw(const FiniteStructure& s, Index x) {
  if (auto c = complement(s, x)) return *c;
  throw DomainError("element " + s.name(x) + " is not complemented");
}

}  // namespace

Index symdiff(const FiniteStructure& s, Index a, Index b) {
  const Index ca = complement_or_throw(s, a);
  const Index cb = complement_or_throw(s, b);
  return s.add(s.mul(ca, b), s.mul(a, cb));
}

Index sqcup(const FiniteStructure& s, Index a, Index b) {
  if (b >= s.size()) throw DomainError("element index out of range");
  const Index ca = complement_or_throw(s, a);
  return s.add(a, s.mul(ca, b));
}

bool CompAlgebraReport::equivalence_holds() const {
  if (!zerosumfree) return true;
  return one_plus_one_complemented == closed_under_add && closed_under_add == add_is_sqcup &&
         add_is_sqcup == boolean_algebra;
}

CompAlgebraReport comp_boolean_algebra(const FiniteStructure& s) {
  require_semiring(s);
  CompAlgebraReport report;
  const FlagResult zsf = decide_flag(s, Flag::Zerosumfree);
  report.zerosumfree = zsf.holds();
  report.zerosumfree_witness = zsf.witness;

  if (s.powerset_bits()) {
    report.one_plus_one_complemented = true;
    report.closed_under_add = true;
    report.add_is_sqcup = true;
    report.boolean_algebra = true;
    report.algebra = s;
    report.embedding.resize(s.size());
    for (Index x = 0; x < s.size(); ++x) report.embedding[x] = x;
    return report;
  }

  const ComplementMap map = complemented_elements(s);
  const Index o = *s.one();
  report.one_plus_one_complemented = map.contains(s.add(o, o));

  report.closed_under_add = true;
  report.add_is_sqcup = true;
  for (Index a : map.elements) {
    for (Index b : map.elements) {
      const Index sum = s.add(a, b);
      if (report.closed_under_add && !map.contains(sum)) {
        report.closed_under_add = false;
        if (report.witness.empty()) report.witness = {s.name(a), s.name(b)};
      }
      if (report.add_is_sqcup && sum != s.add(a, s.mul(map.of(a), b))) {
        report.add_is_sqcup = false;
        if (report.witness.empty()) report.witness = {s.name(a), s.name(b)};
      }
    }
  }

  if (report.closed_under_add) {
    // Products of complemented elements are complemented in any semiring
    // whose comp(S) is closed under +; check rather than assume.
    const std::size_t k = map.elements.size();
    std::vector<Index> local(s.size(), 0);
    for (std::size_t i = 0; i < k; ++i) local[map.elements[i]] = static_cast<Index>(i);
    StructureTables t;
    t.size = k;
    t.add.resize(k * k);
    t.mul.resize(k * k);
    bool closed = true;
    for (std::size_t i = 0; i < k && closed; ++i) {
      t.names.push_back(s.name(map.elements[i]));
      for (std::size_t j = 0; j < k; ++j) {
        const Index sum = s.add(map.elements[i], map.elements[j]);
        const Index prod = s.mul(map.elements[i], map.elements[j]);
        if (!map.contains(prod)) {
          closed = false;
          break;
        }
        t.add[i * k + j] = local[sum];
        t.mul[i * k + j] = local[prod];
      }
    }
    if (closed) {
      t.zero = local[*s.zero()];
      t.one = local[o];
      const FiniteStructure algebra = FiniteStructure::from_tables(std::move(t));
      bool boolean = algebra.axioms().at_least(StructureClass::Semiring);
      if (boolean) {
        const ComplementMap inner = complemented_elements(algebra);
        boolean = inner.elements.size() == algebra.size() &&
                  decide_flag(algebra, Flag::MultiplicativelyIdempotent).holds();
      }
      report.boolean_algebra = boolean;
      if (report.zerosumfree && report.one_plus_one_complemented) {
        report.algebra = algebra;
        report.embedding = map.elements;
      }
    }
  }

  if (!report.zerosumfree) {
    report.reason = "zerosumfree fails";
    report.algebra.reset();
    report.embedding.clear();
  } else if (!report.one_plus_one_complemented) {
    report.reason = "1+1 not complemented";
  } else if (!report.equivalence_holds()) {
    report.reason = "equivalent conditions disagree";
  }
  return report;
}

void require_boolean(const FiniteStructure& b) {
  if (b.powerset_bits()) return;
  require_semiring(b);
  const ComplementMap map = complemented_elements(b);
  if (map.elements.size() != b.size()) {
    for (Index x = 0; x < b.size(); ++x) {
      if (!map.contains(x)) throw HypothesisError("boolean", "element " + b.name(x) + " is not complemented");
    }
  }
  const FlagResult idem = decide_flag(b, Flag::MultiplicativelyIdempotent);
  if (!idem.holds()) {
    throw HypothesisError("boolean", "element " + idem.witness.at(0) + " is not idempotent");
  }
}

namespace {

std::vector<Index> disjointify_with(const FiniteStructure& s, const std::vector<Index>& a,
                                    const std::vector<Index>& complements) {
  std::vector<Index> out;
  out.reserve(a.size());
  Index prefix = *s.one();  // a_1' ... a_{k-1}'
  for (std::size_t k = 0; k < a.size(); ++k) {
    out.push_back(s.mul(a[k], prefix));
    prefix = s.mul(prefix, complements[k]);
  }

  const Index z = *s.zero();
  Index sum_a = z;
  Index sum_b = z;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum_a = s.add(sum_a, a[i]);
    sum_b = s.add(sum_b, out[i]);
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (s.mul(out[i], out[j]) != z) {
        throw CorruptionError("disjointified elements " + s.name(out[i]) + " and " + s.name(out[j]) +
                              " are not disjoint");
      }
    }
  }
  if (sum_a != sum_b) throw CorruptionError("disjointification changed the sum");
  return out;
}

}  // namespace

std::vector<Index> disjointify(const FiniteStructure& b, const std::vector<Index>& a) {
  require_boolean(b);
  std::vector<Index> comps;
  for (Index x : a) {
    if (x >= b.size()) throw DomainError("element index out of range");
    comps.push_back(complement_or_throw(b, x));
  }
  return disjointify_with(b, a, comps);
}

std::vector<Index> disjointify_complemented(const FiniteStructure& s, const std::vector<Index>& a) {
  std::vector<Index> comps;
  for (Index x : a) {
    if (x >= s.size()) throw DomainError("element index out of range");
    const auto c = complement(s, x);
    if (!c) throw HypothesisError("complemented", "element " + s.name(x) + " is not complemented");
    comps.push_back(*c);
  }
  return disjointify_with(s, a, comps);
}

std::optional<Element> complement(const SymbolicStructure& s, const Element& element,
                                  const std::vector<Element>& candidates) {
  if (!s.zero || !s.one) throw HypothesisError("semiring", s.family + " lacks a zero or a one");
  const auto is_complement = [&](const Element& c) {
    return s.equal(s.mul(element, c), *s.zero) && s.equal(s.add(element, c), *s.one);
  };
  if (s.complement) {
    auto c = s.complement(element);
    if (c && !is_complement(*c)) {
      throw CorruptionError("analytic complement of " + to_string(element) + " fails the equations");
    }
    return c;
  }
  std::optional<Element> found;
  for (const Element& c : candidates) {
    if (!is_complement(c)) continue;
    if (found && !s.equal(*found, c)) {
      throw CorruptionError("element " + to_string(element) + " has two complements");
    }
    found = c;
  }
  return found;
}

}  // namespace semimod
