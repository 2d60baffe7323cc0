#include "semimod/axioms.hpp"

#include "semimod/errors.hpp"

#include <algorithm>
#include <array>

namespace semimod {

std::string to_string(StructureClass c) {
  switch (c) {
    case StructureClass::NotAStructure:
      return "not-a-structure";
    case StructureClass::PreSemiring:
      return "pre-semiring";
    case StructureClass::Hemiring:
      return "hemiring";
    case StructureClass::Semiring:
      return "semiring";
  }
  return "?";
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::Closure:
      return "closure";
    case Axiom::AddCommutative:
      return "add-commutative";
    case Axiom::MulCommutative:
      return "mul-commutative";
    case Axiom::AddAssociative:
      return "add-associative";
    case Axiom::MulAssociative:
      return "mul-associative";
    case Axiom::ZeroNeutral:
      return "zero-neutral";
    case Axiom::OneNeutral:
      return "one-neutral";
    case Axiom::ZeroNotOne:
      return "zero-not-one";
    case Axiom::ZeroAbsorbing:
      return "zero-absorbing";
    case Axiom::Distributive:
      return "distributive";
  }
  return "?";
}

std::string to_string(Flag f) {
  switch (f) {
    case Flag::Zerosumfree:
      return "zerosumfree";
    case Flag::Entire:
      return "entire";
    case Flag::Simple:
      return "simple";
    case Flag::MultiplicativelyIdempotent:
      return "multiplicatively-idempotent";
  }
  return "?";
}

bool AxiomReport::holds(Axiom a) const {
  return std::none_of(violations.begin(), violations.end(),
                      [a](const Violation& v) { return v.axiom == a; });
}

const FlagResult& StructureFlags::get(Flag f) const {
  switch (f) {
    case Flag::Zerosumfree:
      return zerosumfree;
    case Flag::Entire:
      return entire;
    case Flag::Simple:
      return simple;
    case Flag::MultiplicativelyIdempotent:
      break;
  }
  return multiplicatively_idempotent;
}

namespace {

// Check order; violations are reported in this order.
constexpr std::array kAxiomOrder = {
    Axiom::Closure,        Axiom::AddCommutative, Axiom::MulCommutative, Axiom::AddAssociative,
    Axiom::MulAssociative, Axiom::ZeroNeutral,    Axiom::OneNeutral,     Axiom::ZeroNotOne,
    Axiom::ZeroAbsorbing,  Axiom::Distributive,
};

/// Collects the first witness per axiom.
class ViolationLog {
 public:
  bool seen(Axiom a) const { return found_[static_cast<std::size_t>(a)].has_value(); }

  void record(Axiom a, std::vector<std::string> witness, std::vector<Index> indices = {}) {
    auto& slot = found_[static_cast<std::size_t>(a)];
    if (!slot) slot = Violation{a, std::move(witness), std::move(indices)};
  }

  std::vector<Violation> ordered() const {
    std::vector<Violation> out;
    for (Axiom a : kAxiomOrder) {
      if (const auto& slot = found_[static_cast<std::size_t>(a)]) out.push_back(*slot);
    }
    return out;
  }

 private:
  std::array<std::optional<Violation>, kAxiomOrder.size()> found_;
};

StructureClass derive_class(const AxiomReport& r, bool has_zero, bool has_one) {
  const bool pre = r.holds(Axiom::Closure) && r.holds(Axiom::AddCommutative) &&
                   r.holds(Axiom::MulCommutative) && r.holds(Axiom::AddAssociative) &&
                   r.holds(Axiom::MulAssociative) && r.holds(Axiom::Distributive);
  if (!pre) return StructureClass::NotAStructure;
  if (!has_zero || !r.holds(Axiom::ZeroNeutral) || !r.holds(Axiom::ZeroAbsorbing)) {
    return StructureClass::PreSemiring;
  }
  if (!has_one || !r.holds(Axiom::OneNeutral) || !r.holds(Axiom::ZeroNotOne)) {
    return StructureClass::Hemiring;
  }
  return StructureClass::Semiring;
}

}  // namespace

AxiomReport classify_structure(const FiniteStructure& s, std::uint64_t tuple_budget) {
  const std::uint64_t n = s.size();
  AxiomReport report;
  if (n * n * n > tuple_budget) {
    if (s.powerset_bits()) {
      // Bitwise OR/AND on masks form a Boolean algebra for every m.
      report.by_construction = true;
      report.verified_class = StructureClass::Semiring;
      return report;
    }
    throw BudgetError("exhaustive classification needs " + std::to_string(n * n * n) +
                      " triples, budget is " + std::to_string(tuple_budget));
  }

  ViolationLog log;
  const auto label = [&](std::initializer_list<Index> idx) {
    std::vector<std::string> out;
    for (Index i : idx) out.push_back(s.name(i));
    return out;
  };

  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (s.add(a, b) != s.add(b, a)) log.record(Axiom::AddCommutative, label({a, b}), {a, b});
      if (s.mul(a, b) != s.mul(b, a)) log.record(Axiom::MulCommutative, label({a, b}), {a, b});
      const Index ab_sum = s.add(a, b);
      const Index ab_prod = s.mul(a, b);
      for (Index c = 0; c < n; ++c) {
        if (s.add(ab_sum, c) != s.add(a, s.add(b, c))) {
          log.record(Axiom::AddAssociative, label({a, b, c}), {a, b, c});
        }
        if (s.mul(ab_prod, c) != s.mul(a, s.mul(b, c))) {
          log.record(Axiom::MulAssociative, label({a, b, c}), {a, b, c});
        }
        if (s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c))) {
          log.record(Axiom::Distributive, label({a, b, c}), {a, b, c});
        }
      }
    }
  }

  if (const auto z = s.zero()) {
    for (Index x = 0; x < n; ++x) {
      if (s.add(*z, x) != x || s.add(x, *z) != x) log.record(Axiom::ZeroNeutral, label({x}), {x});
      if (s.mul(*z, x) != *z || s.mul(x, *z) != *z) {
        log.record(Axiom::ZeroAbsorbing, label({x}), {x});
      }
    }
  }
  if (const auto o = s.one()) {
    for (Index x = 0; x < n; ++x) {
      if (s.mul(*o, x) != x || s.mul(x, *o) != x) log.record(Axiom::OneNeutral, label({x}), {x});
    }
    if (s.zero() && *s.zero() == *o) log.record(Axiom::ZeroNotOne, label({*o}), {*o});
  }

  report.checked_tuples = n * n * n;
  report.violations = log.ordered();
  report.verified_class = derive_class(report, s.zero().has_value(), s.one().has_value());
  return report;
}

AxiomReport classify_structure(const SymbolicStructure& s, const SampleBudget& budget) {
  AxiomReport report;
  report.sampled = true;
  Rng rng(budget.seed);
  ViolationLog log;
  const auto eq = [&](const Element& x, const Element& y) { return s.equal(x, y); };
  const auto label = [](std::initializer_list<const Element*> xs) {
    std::vector<std::string> out;
    for (const Element* x : xs) out.push_back(to_string(*x));
    return out;
  };
  const auto closed = [&](const Element& r, std::initializer_list<const Element*> xs) {
    if (s.contains && !s.contains(r)) log.record(Axiom::Closure, label(xs));
  };

  for (std::uint64_t k = 0; k < budget.samples; ++k) {
    const Element a = s.sample(rng);
    const Element b = s.sample(rng);
    const Element c = s.sample(rng);
    const Element ab_sum = s.add(a, b);
    const Element ab_prod = s.mul(a, b);
    closed(ab_sum, {&a, &b});
    closed(ab_prod, {&a, &b});
    if (!eq(ab_sum, s.add(b, a))) log.record(Axiom::AddCommutative, label({&a, &b}));
    if (!eq(ab_prod, s.mul(b, a))) log.record(Axiom::MulCommutative, label({&a, &b}));
    if (!eq(s.add(ab_sum, c), s.add(a, s.add(b, c)))) {
      log.record(Axiom::AddAssociative, label({&a, &b, &c}));
    }
    if (!eq(s.mul(ab_prod, c), s.mul(a, s.mul(b, c)))) {
      log.record(Axiom::MulAssociative, label({&a, &b, &c}));
    }
    if (!eq(s.mul(a, s.add(b, c)), s.add(ab_prod, s.mul(a, c)))) {
      log.record(Axiom::Distributive, label({&a, &b, &c}));
    }
    if (s.zero) {
      const Element& z = *s.zero;
      if (!eq(s.add(z, a), a) || !eq(s.add(a, z), a)) log.record(Axiom::ZeroNeutral, label({&a}));
      if (!eq(s.mul(z, a), z) || !eq(s.mul(a, z), z)) log.record(Axiom::ZeroAbsorbing, label({&a}));
    }
    if (s.one) {
      const Element& o = *s.one;
      if (!eq(s.mul(o, a), a) || !eq(s.mul(a, o), a)) log.record(Axiom::OneNeutral, label({&a}));
    }
  }
  if (s.zero && s.one && eq(*s.zero, *s.one)) log.record(Axiom::ZeroNotOne, label({&*s.one}));

  report.checked_tuples = budget.samples;
  report.violations = log.ordered();
  report.verified_class = derive_class(report, s.zero.has_value(), s.one.has_value());
  return report;
}

namespace {

constexpr std::uint64_t kPairBudget = std::uint64_t{1} << 26;

FlagResult fails(Flag f, const FiniteStructure& s, std::vector<Index> idx) {
  FlagResult r{f, FlagStatus::Fails};
  for (Index i : idx) r.witness.push_back(s.name(i));
  r.indices = std::move(idx);
  return r;
}

FlagResult decide_pair_flag(const FiniteStructure& s, Flag f) {
  const Index z = *s.zero();
  const std::uint64_t n = s.size();
  if (n * n > kPairBudget) {
    if (const auto bits = s.powerset_bits()) {
      // a | b == 0 only for a = b = 0; {1} & {2} == 0 when m >= 2.
      if (f == Flag::Entire && *bits >= 2) return fails(f, s, {1, 2});
      return FlagResult{f, FlagStatus::Holds};
    }
    throw BudgetError("pair enumeration exceeds budget");
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (f == Flag::Zerosumfree) {
        if (s.add(a, b) == z && (a != z || b != z)) return fails(f, s, {a, b});
      } else if (a != z && b != z && s.mul(a, b) == z) {
        return fails(f, s, {a, b});
      }
    }
  }
  return FlagResult{f, FlagStatus::Holds};
}

}  // namespace

FlagResult decide_flag(const FiniteStructure& s, Flag f) {
  switch (f) {
    case Flag::Zerosumfree:
    case Flag::Entire:
      if (!s.zero()) throw InapplicableError(to_string(f) + " requires a zero");
      return decide_pair_flag(s, f);
    case Flag::Simple: {
      if (!s.one()) throw InapplicableError("simple requires a one");
      const Index o = *s.one();
      for (Index x = 0; x < s.size(); ++x) {
        if (s.add(x, o) != o) return fails(f, s, {x});
      }
      return FlagResult{f, FlagStatus::Holds};
    }
    case Flag::MultiplicativelyIdempotent:
      for (Index x = 0; x < s.size(); ++x) {
        if (s.mul(x, x) != x) return fails(f, s, {x});
      }
      return FlagResult{f, FlagStatus::Holds};
  }
  throw InapplicableError("unknown flag");
}

StructureFlags structure_flags(const FiniteStructure& s) {
  StructureFlags out;
  const auto fill = [&](FlagResult& slot, Flag f) {
    try {
      slot = decide_flag(s, f);
    } catch (const InapplicableError&) {
      slot = FlagResult{f, FlagStatus::Inapplicable};
    }
  };
  fill(out.zerosumfree, Flag::Zerosumfree);
  fill(out.entire, Flag::Entire);
  fill(out.simple, Flag::Simple);
  fill(out.multiplicatively_idempotent, Flag::MultiplicativelyIdempotent);
  return out;
}

StructureFlags structure_flags(const SymbolicStructure& s, const SampleBudget& budget) {
  StructureFlags out;
  out.zerosumfree.status = s.zero ? FlagStatus::Holds : FlagStatus::Inapplicable;
  out.entire.status = s.zero ? FlagStatus::Holds : FlagStatus::Inapplicable;
  out.simple.status = s.one ? FlagStatus::Holds : FlagStatus::Inapplicable;
  out.multiplicatively_idempotent.status = FlagStatus::Holds;

  const auto fail = [](FlagResult& slot, std::vector<std::string> witness) {
    if (slot.status != FlagStatus::Holds) return;
    slot.status = FlagStatus::Fails;
    slot.witness = std::move(witness);
  };

  Rng rng(budget.seed);
  for (std::uint64_t k = 0; k < budget.samples; ++k) {
    const Element a = s.sample(rng);
    const Element b = s.sample(rng);
    if (s.zero) {
      const Element& z = *s.zero;
      const bool both_zero = s.equal(a, z) && s.equal(b, z);
      if (s.equal(s.add(a, b), z) && !both_zero) fail(out.zerosumfree, {to_string(a), to_string(b)});
      if (!s.equal(a, z) && !s.equal(b, z) && s.equal(s.mul(a, b), z)) {
        fail(out.entire, {to_string(a), to_string(b)});
      }
    }
    if (s.one && !s.equal(s.add(a, *s.one), *s.one)) fail(out.simple, {to_string(a)});
    if (!s.equal(s.mul(a, a), a)) fail(out.multiplicatively_idempotent, {to_string(a)});
  }
  return out;
}

}  // namespace semimod
