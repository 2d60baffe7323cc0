#include "semimod/identities.hpp"

#include "hypotheses.hpp"
#include "semimod/complements.hpp"
#include "semimod/errors.hpp"

namespace semimod {

namespace {

struct Entry {
  Identity id;
  const char* name;
  std::size_t arity;
};

constexpr Entry kCatalog[] = {
    {Identity::C1, "C1", 2}, {Identity::C2, "C2", 2}, {Identity::N1, "N1", 1},   {Identity::N2, "N2", 2},
    {Identity::P1, "P1", 1}, {Identity::P2, "P2", 2}, {Identity::P3, "P3", 2},   {Identity::L1, "L1", 2},
    {Identity::MOD, "MOD", 2}, {Identity::FA, "FA", 2},
};

const Entry& entry(Identity id) {
  for (const auto& e : kCatalog) {
    if (e.id == id) return e;
  }
  throw ParameterError("unknown identity");
}

Index power(const FiniteStructure& s, Index x, unsigned k) {
  Index out = x;
  for (unsigned i = 1; i < k; ++i) out = s.mul(out, x);
  return out;
}

}  // namespace

std::string to_string(Identity id) { return entry(id).name; }

Identity parse_identity(std::string_view text) {
  for (const auto& e : kCatalog) {
    if (text == e.name) return e.id;
  }
  throw ParseError(0, 0, "unknown identity '" + std::string(text) + "'");
}

std::size_t identity_arity(Identity id) { return entry(id).arity; }

PropertyReport verify_identity(const FiniteFunction& f, Identity id, const std::vector<Index>& args,
                               const std::vector<unsigned>& exponents) {
  using namespace detail;
  const FiniteStructure& s = f.domain();
  const Codomain& c = f.codomain();
  if (args.size() != identity_arity(id)) {
    throw ParameterError(to_string(id) + " takes " + std::to_string(identity_arity(id)) + " element(s)");
  }
  require_indices(s, args);
  const Index a = args[0];
  const Index b = args.size() > 1 ? args[1] : a;

  PropertyReport r;
  r.property = "identity " + to_string(id);
  r.checked = 1;
  for (Index x : args) r.witness.push_back(s.name(x));
  r.witness_indices = args;

  Value lhs, rhs;
  bool holds = false;
  switch (id) {
    case Identity::C1: {
      require_semiring(s);
      require_finitely_additive(f);
      const Index ca = require_complemented(s, a);
      lhs = f(b);
      rhs = c.plus(f(s.mul(b, a)), f(s.mul(b, ca)));
      holds = lhs == rhs;
      break;
    }
    case Identity::C2: {
      require_semiring(s);
      require_finitely_additive(f);
      require_complemented(s, a);
      require_complemented(s, b);
      lhs = c.plus(f(symdiff(s, a, b)), c.repeat(f(s.mul(a, b)), 2));
      rhs = c.plus(f(a), f(b));
      holds = lhs == rhs;
      break;
    }
    case Identity::N1: {
      require_semiring(s);
      require_finitely_additive(f);
      require_ring(c);
      if (f(*s.zero()) != c.neutral()) throw HypothesisError("f(0) = 0", "f(0) = " + to_string(f(*s.zero())));
      require_normalized(f);
      const Index ca = require_complemented(s, a);
      lhs = c.plus(f(a), f(ca));
      rhs = c.unit();
      holds = lhs == rhs;
      break;
    }
    case Identity::N2: {
      require_zerosumfree(s);
      require_ring(c);
      require_finitely_additive(f);
      require_normalized(f);
      const Index ca = require_complemented(s, a);
      const Index cb = require_complemented(s, b);
      lhs = f(s.mul(ca, cb));
      rhs = c.plus(c.minus(c.minus(c.unit(), f(a)), f(b)), f(s.mul(a, b)));
      holds = lhs == rhs;
      break;
    }
    case Identity::P1: {
      require_semiring(s);
      require_probability(f);
      require_complemented(s, a);
      lhs = f(a);
      rhs = c.unit();
      holds = c.less_equal(c.neutral(), lhs) && c.less_equal(lhs, rhs);
      r.note = "0 <= lhs <= rhs";
      break;
    }
    case Identity::P2: {
      require_semiring(s);
      require_probability(f);
      require_complemented(s, a);
      lhs = f(s.mul(b, a));
      rhs = f(b);
      holds = c.less_equal(lhs, rhs);
      r.note = "lhs <= rhs";
      break;
    }
    case Identity::P3: {
      require_zerosumfree(s);
      require_probability(f);
      require_complemented(s, a);
      require_complemented(s, b);
      lhs = f(s.mul(a, b));
      rhs = c.minus(c.plus(f(a), f(b)), c.unit());
      holds = c.less_equal(rhs, lhs);
      r.note = "lhs >= rhs";
      break;
    }
    case Identity::L1: {
      if (exponents.size() != 2 || exponents[0] < 1 || exponents[1] < 1) {
        throw ParameterError("L1 needs exponents m, n >= 1");
      }
      require_simple(s);
      require_modular(f);
      lhs = f(s.mul(power(s, a, exponents[0]), power(s, b, exponents[1])));
      rhs = f(s.mul(a, b));
      holds = lhs == rhs;
      break;
    }
    case Identity::MOD:
      lhs = c.plus(f(s.add(a, b)), f(s.mul(a, b)));
      rhs = c.plus(f(a), f(b));
      holds = lhs == rhs;
      break;
    case Identity::FA:
      if (!s.zero()) throw HypothesisError("hemiring", "domain has no zero");
      if (s.mul(a, b) != *s.zero()) throw HypothesisError("disjoint", s.name(a) + " * " + s.name(b) + " is not 0");
      lhs = f(s.add(a, b));
      rhs = c.plus(f(a), f(b));
      holds = lhs == rhs;
      break;
  }
  r.lhs = lhs;
  r.rhs = rhs;
  r.verdict = holds ? Verdict::Holds : Verdict::Fails;
  if (holds) {
    r.witness.clear();
    r.witness_indices.clear();
  }
  return r;
}

}  // namespace semimod
