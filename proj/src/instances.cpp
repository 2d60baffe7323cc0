#include "semimod/instances.hpp"

#include "semimod/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace semimod {
namespace {

// ---------------------------------------------------------------------------
// Finite kinds
// ---------------------------------------------------------------------------

struct TableBuilder {
  explicit TableBuilder(std::size_t n) {
    t.size = n;
    t.add.resize(n * n);
    t.mul.resize(n * n);
  }
  template <class Add, class Mul>
  void fill(Add add, Mul mul) {
    for (Index a = 0; a < t.size; ++a) {
      for (Index b = 0; b < t.size; ++b) {
        t.add[a * t.size + b] = add(a, b);
        t.mul[a * t.size + b] = mul(a, b);
      }
    }
  }
  StructureTables t;
};

/// Reduces a natural number into B(n,i): values above n-1 map to the unique
/// l in [i, n-1] with l = value (mod n-i).
Index reduce_bni(unsigned value, unsigned n, unsigned i) {
  if (value <= n - 1) return value;
  return i + (value - i) % (n - i);
}

FiniteStructure build(const BooleanPowerset& k) {
  if (k.m < 1) throw ParameterError("powerset(m) requires m >= 1");
  return FiniteStructure::powerset(k.m);
}

FiniteStructure build(const BnI& k) {
  if (!(0 < k.i && k.i < k.n)) throw ParameterError("bni(n,i) requires 0 < i < n");
  if (k.n > 4096) throw ParameterError("bni(n,i) requires n <= 4096");
  TableBuilder b(k.n);
  b.fill([&](Index x, Index y) { return reduce_bni(x + y, k.n, k.i); },
         [&](Index x, Index y) { return reduce_bni(x * y, k.n, k.i); });
  b.t.zero = 0;
  b.t.one = 1;
  return FiniteStructure::from_tables(std::move(b.t));
}

/// {ninf, 0..limit} with max and saturated addition; index 0 is ninf and
/// index v+1 is the value v.
FiniteStructure saturated_max_plus(unsigned limit) {
  TableBuilder b(limit + 2);
  b.fill([](Index x, Index y) { return std::max(x, y); },
         [&](Index x, Index y) -> Index {
           if (x == 0 || y == 0) return 0;
           return std::min((x - 1) + (y - 1), limit) + 1;
         });
  b.t.names.push_back("ninf");
  for (unsigned v = 0; v <= limit; ++v) b.t.names.push_back(std::to_string(v));
  b.t.zero = 0;
  b.t.one = 1;
  return FiniteStructure::from_tables(std::move(b.t));
}

FiniteStructure build(const Truncation& k) {
  if (k.k < 1) throw ParameterError("truncation(k) requires k >= 1");
  if (k.k > 4000) throw ParameterError("truncation(k) requires k <= 4000");
  return saturated_max_plus(k.k);
}

FiniteStructure build(const ArcticWindow& k) {
  if (k.limit < 1) throw ParameterError("arctic_window(N) requires N >= 1");
  if (k.limit > 4000) throw ParameterError("arctic_window(N) requires N <= 4000");
  return saturated_max_plus(k.limit);
}

FiniteStructure build(const BottleneckChain& k) {
  if (k.n < 1) throw ParameterError("bottleneck(n) requires n >= 1");
  if (k.n > 4096) throw ParameterError("bottleneck(n) requires n <= 4096");
  TableBuilder b(k.n);
  b.fill([](Index x, Index y) { return std::max(x, y); },
         [](Index x, Index y) { return std::min(x, y); });
  if (k.with_endpoints) {
    b.t.zero = 0;
    b.t.one = k.n - 1;
  }
  return FiniteStructure::from_tables(std::move(b.t));
}

// ---------------------------------------------------------------------------
// Kind names
// ---------------------------------------------------------------------------

struct CallSyntax {
  std::string name;
  std::vector<std::string> args;
};

CallSyntax split_call(std::string_view text) {
  CallSyntax out;
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    out.name = std::string(text);
    return out;
  }
  if (text.back() != ')') throw ParseError(0, text.size(), "missing ')' in '" + std::string(text) + "'");
  out.name = std::string(text.substr(0, open));
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  while (true) {
    const auto comma = body.find(',');
    out.args.emplace_back(body.substr(0, comma));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

unsigned parse_unsigned(const std::string& text) {
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(0, 0, "expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

void expect_args(const CallSyntax& call, std::size_t count) {
  if (call.args.size() != count) {
    throw ParseError(0, 0, call.name + " expects " + std::to_string(count) + " argument(s)");
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

FiniteStructure make_finite(const FiniteKind& kind) {
  return std::visit([](const auto& k) { return build(k); }, kind);
}

std::string to_string(const FiniteKind& kind) {
  struct Visitor {
    std::string operator()(const BooleanPowerset& k) const { return "powerset(" + std::to_string(k.m) + ")"; }
    std::string operator()(const BnI& k) const {
      return "bni(" + std::to_string(k.n) + "," + std::to_string(k.i) + ")";
    }
    std::string operator()(const Truncation& k) const { return "truncation(" + std::to_string(k.k) + ")"; }
    std::string operator()(const BottleneckChain& k) const {
      return "bottleneck(" + std::to_string(k.n) + (k.with_endpoints ? ",endpoints)" : ")");
    }
    std::string operator()(const ArcticWindow& k) const {
      return "arctic_window(" + std::to_string(k.limit) + ")";
    }
  };
  return std::visit(Visitor{}, kind);
}

FiniteKind parse_finite_kind(std::string_view text) {
  const CallSyntax call = split_call(text);
  if (call.name == "powerset") {
    expect_args(call, 1);
    return BooleanPowerset{parse_unsigned(call.args[0])};
  }
  if (call.name == "bni") {
    expect_args(call, 2);
    return BnI{parse_unsigned(call.args[0]), parse_unsigned(call.args[1])};
  }
  if (call.name == "truncation") {
    expect_args(call, 1);
    return Truncation{parse_unsigned(call.args[0])};
  }
  if (call.name == "bottleneck") {
    if (call.args.size() == 2 && call.args[1] == "endpoints") {
      return BottleneckChain{parse_unsigned(call.args[0]), true};
    }
    expect_args(call, 1);
    return BottleneckChain{parse_unsigned(call.args[0]), false};
  }
  if (call.name == "arctic_window") {
    expect_args(call, 1);
    return ArcticWindow{parse_unsigned(call.args[0])};
  }
  throw ParseError(0, 0, "unknown finite instance '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Symbolic kinds
// ---------------------------------------------------------------------------

namespace {

template <class T>
const T& as(const Element& e, const std::string& family) {
  if (const T* p = std::get_if<T>(&e)) return *p;
  throw DomainError("element '" + to_string(e) + "' does not belong to " + family);
}

std::int64_t parse_int64(std::string_view text) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(0, 0, "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

Rational sample_rational(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
  return make_rational(rng.between(lo, hi), rng.between(1, max_den));
}

bool variant_equal(const Element& a, const Element& b) { return a == b; }

SymbolicStructure base(std::string family, std::string description) {
  SymbolicStructure s;
  s.family = std::move(family);
  s.description = std::move(description);
  s.equal = variant_equal;
  return s;
}

// ---- extended naturals / integers ----------------------------------------

ExtInt parse_ext_int(std::string_view text) {
  if (text == "ninf") return ExtInt::neg_inf();
  if (text == "pinf") return ExtInt::pos_inf();
  return ExtInt::of(parse_int64(text));
}

SymbolicStructure tropical() {
  auto s = base("tropical", "(N0 u {pinf}, min, +)");
  const std::string fam = s.family;
  s.add = [fam](const Element& a, const Element& b) -> Element {
    return std::min(as<ExtInt>(a, fam), as<ExtInt>(b, fam));
  };
  s.mul = [fam](const Element& a, const Element& b) -> Element {
    const auto& x = as<ExtInt>(a, fam);
    const auto& y = as<ExtInt>(b, fam);
    if (!x.finite() || !y.finite()) return ExtInt::pos_inf();
    return ExtInt::of(checked_add(x.value, y.value));
  };
  s.zero = ExtInt::pos_inf();
  s.one = ExtInt::of(0);
  s.contains = [](const Element& e) {
    const auto* x = std::get_if<ExtInt>(&e);
    return x && (x->kind == ExtInt::Kind::PosInf || (x->finite() && x->value >= 0));
  };
  s.sample = [](Rng& rng) -> Element {
    switch (rng.below(10)) {
      case 0:
        return ExtInt::pos_inf();
      case 1:
        return ExtInt::of(0);
      case 2:
        return ExtInt::of(1);
      default:
        return ExtInt::of(rng.between(0, 1000));
    }
  };
  s.parse = [](std::string_view t) -> Element { return parse_ext_int(t); };
  return s;
}

SymbolicStructure arctic() {
  auto s = base("arctic", "(N0 u {ninf}, max, +)");
  const std::string fam = s.family;
  s.add = [fam](const Element& a, const Element& b) -> Element {
    return std::max(as<ExtInt>(a, fam), as<ExtInt>(b, fam));
  };
  s.mul = [fam](const Element& a, const Element& b) -> Element {
    const auto& x = as<ExtInt>(a, fam);
    const auto& y = as<ExtInt>(b, fam);
    if (!x.finite() || !y.finite()) return ExtInt::neg_inf();
    return ExtInt::of(checked_add(x.value, y.value));
  };
  s.zero = ExtInt::neg_inf();
  s.one = ExtInt::of(0);
  s.contains = [](const Element& e) {
    const auto* x = std::get_if<ExtInt>(&e);
    return x && (x->kind == ExtInt::Kind::NegInf || (x->finite() && x->value >= 0));
  };
  s.sample = [](Rng& rng) -> Element {
    switch (rng.below(10)) {
      case 0:
        return ExtInt::neg_inf();
      case 1:
        return ExtInt::of(0);
      case 2:
        return ExtInt::of(1);
      default:
        return ExtInt::of(rng.between(0, 1000));
    }
  };
  s.parse = [](std::string_view t) -> Element { return parse_ext_int(t); };
  return s;
}

SymbolicStructure gminplus() {
  auto s = base("gminplus", "(Z, min, +)");
  const std::string fam = s.family;
  s.add = [fam](const Element& a, const Element& b) -> Element {
    return std::min(as<ExtInt>(a, fam), as<ExtInt>(b, fam));
  };
  s.mul = [fam](const Element& a, const Element& b) -> Element {
    return ExtInt::of(checked_add(as<ExtInt>(a, fam).value, as<ExtInt>(b, fam).value));
  };
  s.one = ExtInt::of(0);
  s.contains = [](const Element& e) {
    const auto* x = std::get_if<ExtInt>(&e);
    return x && x->finite();
  };
  s.sample = [](Rng& rng) -> Element {
    if (rng.below(10) == 0) return ExtInt::of(0);
    return ExtInt::of(rng.between(-1000, 1000));
  };
  s.parse = [](std::string_view t) -> Element { return ExtInt::of(parse_int64(t)); };
  return s;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

SymbolicStructure lcmgcd() {
  auto s = base("lcmgcd", "(N, lcm, gcd)");
  const std::string fam = s.family;
  s.add = [fam](const Element& a, const Element& b) -> Element {
    return ExtInt::of(checked_lcm(as<ExtInt>(a, fam).value, as<ExtInt>(b, fam).value));
  };
  s.mul = [fam](const Element& a, const Element& b) -> Element {
    return ExtInt::of(std::gcd(as<ExtInt>(a, fam).value, as<ExtInt>(b, fam).value));
  };
  // 1 is neutral for lcm and absorbing for gcd; gcd has no neutral in N.
  s.zero = ExtInt::of(1);
  s.contains = [](const Element& e) {
    const auto* x = std::get_if<ExtInt>(&e);
    return x && x->finite() && x->value >= 1;
  };
  s.sample = [](Rng& rng) -> Element {
    if (rng.below(10) == 0) return ExtInt::of(1);
    return ExtInt::of(rng.between(1, 1000));
  };
  s.parse = [](std::string_view t) -> Element { return ExtInt::of(parse_int64(t)); };
  return s;
}

SymbolicStructure gcdmul() {
  auto s = base("gcdmul", "(N0, gcd, *), the ideals of Z");
  const std::string fam = s.family;
  s.add = [fam](const Element& a, const Element& b) -> Element {
    return ExtInt::of(std::gcd(as<ExtInt>(a, fam).value, as<ExtInt>(b, fam).value));
  };
  s.mul = [fam](const Element& a, const Element& b) -> Element {
    return ExtInt::of(checked_mul(as<ExtInt>(a, fam).value, as<ExtInt>(b, fam).value));
  };
  s.zero = ExtInt::of(0);
  s.one = ExtInt::of(1);
  s.contains = [](const Element& e) {
    const auto* x = std::get_if<ExtInt>(&e);
    return x && x->finite() && x->value >= 0;
  };
  s.sample = [](Rng& rng) -> Element {
    switch (rng.below(10)) {
      case 0:
        return ExtInt::of(0);
      case 1:
        return ExtInt::of(1);
      default:
        return ExtInt::of(rng.between(0, 1000));
    }
  };
  s.parse = [](std::string_view t) -> Element { return ExtInt::of(parse_int64(t)); };
  return s;
}

// ---- rational instances ---------------------------------------------------

SymbolicStructure litvinov() {
  auto s = base("litvinov", "((Q x Q) u {ninf}, componentwise max, componentwise +)");
  const std::string fam = s.family;
  s.add = [fam](const Element& a, const Element& b) -> Element {
    const auto& x = as<RatPair>(a, fam);
    const auto& y = as<RatPair>(b, fam);
    if (x.neg_inf) return y;
    if (y.neg_inf) return x;
    return RatPair::of(std::max(x.first, y.first), std::max(x.second, y.second));
  };
  s.mul = [fam](const Element& a, const Element& b) -> Element {
    const auto& x = as<RatPair>(a, fam);
    const auto& y = as<RatPair>(b, fam);
    if (x.neg_inf || y.neg_inf) return RatPair::minus_infinity();
    return RatPair::of(x.first + y.first, x.second + y.second);
  };
  s.zero = RatPair::minus_infinity();
  s.one = RatPair::of(0, 0);
  s.contains = [](const Element& e) { return std::holds_alternative<RatPair>(e); };
  s.sample = [](Rng& rng) -> Element {
    switch (rng.below(20)) {
      case 0:
        return RatPair::minus_infinity();
      case 1:
        return RatPair::of(0, 0);
      default:
        return RatPair::of(sample_rational(rng, -20, 20, 4), sample_rational(rng, -20, 20, 4));
    }
  };
  s.parse = [](std::string_view t) -> Element {
    if (t == "ninf") return RatPair::minus_infinity();
    if (t.size() < 5 || t.front() != '(' || t.back() != ')') {
      throw ParseError(0, 1, "expected (a,b) or ninf: '" + std::string(t) + "'");
    }
    const auto body = t.substr(1, t.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw ParseError(0, 1, "expected (a,b): '" + std::string(t) + "'");
    return RatPair::of(parse_rational(body.substr(0, comma)), parse_rational(body.substr(comma + 1)));
  };
  return s;
}

SymbolicStructure maxplusq() {
  auto s = base("maxplusq", "(Q u {ninf}, max, +)");
  const std::string fam = s.family;
  s.add = [fam](const Element& a, const Element& b) -> Element {
    const auto& x = as<ExtRational>(a, fam);
    const auto& y = as<ExtRational>(b, fam);
    if (x.neg_inf) return y;
    if (y.neg_inf) return x;
    return ExtRational::of(std::max(x.value, y.value));
  };
  s.mul = [fam](const Element& a, const Element& b) -> Element {
    const auto& x = as<ExtRational>(a, fam);
    const auto& y = as<ExtRational>(b, fam);
    if (x.neg_inf || y.neg_inf) return ExtRational::minus_infinity();
    return ExtRational::of(x.value + y.value);
  };
  s.zero = ExtRational::minus_infinity();
  s.one = ExtRational::of(0);
  s.inverse = [fam](const Element& a) -> Element {
    const auto& x = as<ExtRational>(a, fam);
    if (x.neg_inf) throw DomainError("ninf has no multiplicative inverse");
    return ExtRational::of(-x.value);
  };
  s.contains = [](const Element& e) { return std::holds_alternative<ExtRational>(e); };
  s.sample = [](Rng& rng) -> Element {
    switch (rng.below(20)) {
      case 0:
        return ExtRational::minus_infinity();
      case 1:
        return ExtRational::of(0);
      default:
        return ExtRational::of(sample_rational(rng, -40, 40, 6));
    }
  };
  s.parse = [](std::string_view t) -> Element {
    if (t == "ninf") return ExtRational::minus_infinity();
    return ExtRational::of(parse_rational(t));
  };
  return s;
}

SymbolicStructure qnonneg() {
  auto s = base("qnonneg", "(Q>=0, +, *)");
  const std::string fam = s.family;
  s.add = [fam](const Element& a, const Element& b) -> Element {
    return ExtRational::of(as<ExtRational>(a, fam).value + as<ExtRational>(b, fam).value);
  };
  s.mul = [fam](const Element& a, const Element& b) -> Element {
    return ExtRational::of(as<ExtRational>(a, fam).value * as<ExtRational>(b, fam).value);
  };
  s.zero = ExtRational::of(0);
  s.one = ExtRational::of(1);
  s.inverse = [fam](const Element& a) -> Element {
    const auto& x = as<ExtRational>(a, fam);
    if (x.value == Rational(0)) throw DomainError("0 has no multiplicative inverse");
    return ExtRational::of(1 / x.value);
  };
  s.contains = [](const Element& e) {
    const auto* x = std::get_if<ExtRational>(&e);
    return x && !x->neg_inf && x->value >= 0;
  };
  s.sample = [](Rng& rng) -> Element {
    switch (rng.below(20)) {
      case 0:
        return ExtRational::of(0);
      case 1:
        return ExtRational::of(1);
      default:
        return ExtRational::of(sample_rational(rng, 0, 30, 6));
    }
  };
  s.parse = [](std::string_view t) -> Element {
    const Rational v = parse_rational(t);
    if (v < 0) throw ParseError(0, 1, "qnonneg elements are non-negative");
    return ExtRational::of(v);
  };
  return s;
}

SymbolicStructure sh(double h) {
  if (!(h > 0)) throw ParameterError("sh(h) requires h > 0");
  auto s = base("sh", "(R>=0, (a^(1/h)+b^(1/h))^h, *) with h = " + format_double(h));
  const std::string fam = s.family;
  s.exact = false;
  s.add = [fam, h](const Element& a, const Element& b) -> Element {
    const double x = as<double>(a, fam);
    const double y = as<double>(b, fam);
    return std::pow(std::pow(x, 1.0 / h) + std::pow(y, 1.0 / h), h);
  };
  s.mul = [fam](const Element& a, const Element& b) -> Element {
    return as<double>(a, fam) * as<double>(b, fam);
  };
  s.zero = 0.0;
  s.one = 1.0;
  s.inverse = [fam](const Element& a) -> Element {
    const double x = as<double>(a, fam);
    if (x == 0) throw DomainError("0 has no multiplicative inverse");
    return 1.0 / x;
  };
  s.equal = [](const Element& a, const Element& b) {
    const auto* x = std::get_if<double>(&a);
    const auto* y = std::get_if<double>(&b);
    if (!x || !y) return false;
    if (*x == *y) return true;
    return std::fabs(*x - *y) <= kShTolerance * std::max(std::fabs(*x), std::fabs(*y));
  };
  s.contains = [](const Element& e) {
    const auto* x = std::get_if<double>(&e);
    return x && *x >= 0 && std::isfinite(*x);
  };
  s.sample = [](Rng& rng) -> Element {
    switch (rng.below(20)) {
      case 0:
        return 0.0;
      case 1:
        return 1.0;
      default:
        return static_cast<double>(rng.between(1, 80)) / 8.0;
    }
  };
  s.parse = [](std::string_view t) -> Element {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || v < 0) {
      throw ParseError(0, 1, "expected a non-negative real, got '" + std::string(t) + "'");
    }
    return v;
  };
  return s;
}

// ---- set-like instances ---------------------------------------------------

SymbolicStructure interval_e(bool literal) {
  auto s = base(literal ? "interval_e_literal" : "interval_e",
                literal ? "(integer [a,b] with a<=0<=b, [min,max], [a1+a2, a2+b2])"
                        : "(integer [a,b] with a<=0<=b, [min,max], [a1+a2, b1+b2])");
  const std::string fam = s.family;
  s.add = [fam](const Element& a, const Element& b) -> Element {
    const auto& x = as<IntInterval>(a, fam);
    const auto& y = as<IntInterval>(b, fam);
    return IntInterval{std::min(x.lo, y.lo), std::max(x.hi, y.hi)};
  };
  if (literal) {
    s.mul = [fam](const Element& a, const Element& b) -> Element {
      const auto& x = as<IntInterval>(a, fam);
      const auto& y = as<IntInterval>(b, fam);
      return IntInterval{checked_add(x.lo, y.lo), checked_add(y.lo, y.hi)};
    };
  } else {
    s.mul = [fam](const Element& a, const Element& b) -> Element {
      const auto& x = as<IntInterval>(a, fam);
      const auto& y = as<IntInterval>(b, fam);
      return IntInterval{checked_add(x.lo, y.lo), checked_add(x.hi, y.hi)};
    };
  }
  s.zero = IntInterval{0, 0};
  s.one = IntInterval{0, 0};
  s.contains = [](const Element& e) {
    const auto* x = std::get_if<IntInterval>(&e);
    return x && x->lo <= 0 && x->hi >= 0;
  };
  s.sample = [](Rng& rng) -> Element {
    if (rng.below(10) == 0) return IntInterval{0, 0};
    return IntInterval{rng.between(-20, 0), rng.between(0, 20)};
  };
  s.parse = [](std::string_view t) -> Element {
    if (t.size() < 5 || t.front() != '[' || t.back() != ']') {
      throw ParseError(0, 1, "expected [a,b]: '" + std::string(t) + "'");
    }
    const auto body = t.substr(1, t.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw ParseError(0, 1, "expected [a,b]: '" + std::string(t) + "'");
    return IntInterval{parse_int64(body.substr(0, comma)), parse_int64(body.substr(comma + 1))};
  };
  return s;
}

SymbolicStructure finite_cofinite() {
  auto s = base("finite_cofinite", "(finite and cofinite subsets of N, union, intersection)");
  const std::string fam = s.family;
  s.add = [fam](const Element& a, const Element& b) -> Element {
    return as<FiniteCofiniteSet>(a, fam).unite(as<FiniteCofiniteSet>(b, fam));
  };
  s.mul = [fam](const Element& a, const Element& b) -> Element {
    return as<FiniteCofiniteSet>(a, fam).intersect(as<FiniteCofiniteSet>(b, fam));
  };
  s.zero = FiniteCofiniteSet::finite({});
  s.one = FiniteCofiniteSet::cofinite({});
  s.complement = [fam](const Element& a) -> std::optional<Element> {
    return as<FiniteCofiniteSet>(a, fam).complement();
  };
  s.contains = [](const Element& e) { return std::holds_alternative<FiniteCofiniteSet>(e); };
  s.sample = [](Rng& rng) -> Element {
    std::vector<std::uint64_t> members;
    const auto count = rng.below(6);
    for (std::uint64_t k = 0; k < count; ++k) members.push_back(rng.below(16));
    if (rng.below(2) == 0) return FiniteCofiniteSet::finite(std::move(members));
    return FiniteCofiniteSet::cofinite(std::move(members));
  };
  s.parse = [](std::string_view t) -> Element { return parse_finite_cofinite(t); };
  return s;
}

SymbolicStructure interval_unions(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw ParameterError("interval_unions(a,b) requires a < b");
  auto s = base("interval_unions",
                "(finite unions of subintervals of [" + to_string(lo) + "," + to_string(hi) +
                    "], union, intersection)");
  const std::string fam = s.family;
  s.add = [fam](const Element& a, const Element& b) -> Element {
    return as<IntervalUnionSet>(a, fam).unite(as<IntervalUnionSet>(b, fam));
  };
  s.mul = [fam](const Element& a, const Element& b) -> Element {
    return as<IntervalUnionSet>(a, fam).intersect(as<IntervalUnionSet>(b, fam));
  };
  s.zero = IntervalUnionSet{};
  s.one = IntervalUnionSet::closed(lo, hi);
  s.complement = [fam, lo, hi](const Element& a) -> std::optional<Element> {
    return as<IntervalUnionSet>(a, fam).complement_within(lo, hi);
  };
  s.contains = [lo, hi](const Element& e) {
    const auto* x = std::get_if<IntervalUnionSet>(&e);
    return x && x->within(lo, hi);
  };
  s.sample = [lo, hi](Rng& rng) -> Element {
    const Rational step = (hi - lo) / 8;
    std::vector<Interval> parts;
    const auto count = rng.below(4);
    for (std::uint64_t k = 0; k < count; ++k) {
      auto p = static_cast<std::int64_t>(rng.below(9));
      auto q = static_cast<std::int64_t>(rng.below(9));
      if (p > q) std::swap(p, q);
      parts.push_back(Interval{lo + step * p, lo + step * q, rng.below(2) == 0, rng.below(2) == 0});
    }
    return IntervalUnionSet::from(std::move(parts));
  };
  s.parse = [](std::string_view t) -> Element { return parse_interval_union(t); };
  return s;
}

}  // namespace

SymbolicStructure make_symbolic(const SymbolicKind& kind) {
  switch (kind.family) {
    case SymbolicFamily::Tropical:
      return tropical();
    case SymbolicFamily::Arctic:
      return arctic();
    case SymbolicFamily::GMinPlus:
      return gminplus();
    case SymbolicFamily::LcmGcd:
      return lcmgcd();
    case SymbolicFamily::GcdMul:
      return gcdmul();
    case SymbolicFamily::Litvinov:
      return litvinov();
    case SymbolicFamily::MaxPlusQ:
      return maxplusq();
    case SymbolicFamily::QNonNeg:
      return qnonneg();
    case SymbolicFamily::Sh:
      return sh(kind.h);
    case SymbolicFamily::IntervalE:
      return interval_e(kind.literal_product);
    case SymbolicFamily::FiniteCofinite:
      return finite_cofinite();
    case SymbolicFamily::IntervalUnions:
      return interval_unions(kind.lo, kind.hi);
  }
  throw ParameterError("unknown symbolic family");
}

std::string to_string(const SymbolicKind& kind) {
  switch (kind.family) {
    case SymbolicFamily::Tropical:
      return "tropical";
    case SymbolicFamily::Arctic:
      return "arctic";
    case SymbolicFamily::GMinPlus:
      return "gminplus";
    case SymbolicFamily::LcmGcd:
      return "lcmgcd";
    case SymbolicFamily::GcdMul:
      return "gcdmul";
    case SymbolicFamily::Litvinov:
      return "litvinov";
    case SymbolicFamily::MaxPlusQ:
      return "maxplusq";
    case SymbolicFamily::QNonNeg:
      return "qnonneg";
    case SymbolicFamily::Sh:
      return "sh(" + format_double(kind.h) + ")";
    case SymbolicFamily::IntervalE:
      return kind.literal_product ? "interval_e_literal" : "interval_e";
    case SymbolicFamily::FiniteCofinite:
      return "finite_cofinite";
    case SymbolicFamily::IntervalUnions:
      return "interval_unions(" + to_string(kind.lo) + "," + to_string(kind.hi) + ")";
  }
  return "?";
}

SymbolicKind parse_symbolic_kind(std::string_view text) {
  const CallSyntax call = split_call(text);
  SymbolicKind k;
  static const std::pair<const char*, SymbolicFamily> plain[] = {
      {"tropical", SymbolicFamily::Tropical}, {"arctic", SymbolicFamily::Arctic},
      {"gminplus", SymbolicFamily::GMinPlus}, {"lcmgcd", SymbolicFamily::LcmGcd},
      {"gcdmul", SymbolicFamily::GcdMul},     {"litvinov", SymbolicFamily::Litvinov},
      {"maxplusq", SymbolicFamily::MaxPlusQ}, {"qnonneg", SymbolicFamily::QNonNeg},
      {"interval_e", SymbolicFamily::IntervalE},
      {"finite_cofinite", SymbolicFamily::FiniteCofinite},
  };
  for (const auto& [name, family] : plain) {
    if (call.name == name) {
      expect_args(call, 0);
      k.family = family;
      return k;
    }
  }
  if (call.name == "interval_e_literal") {
    expect_args(call, 0);
    k.family = SymbolicFamily::IntervalE;
    k.literal_product = true;
    return k;
  }
  if (call.name == "sh") {
    expect_args(call, 1);
    k.family = SymbolicFamily::Sh;
    const auto& arg = call.args[0];
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k.h);
    if (ec != std::errc() || ptr != arg.data() + arg.size()) {
      throw ParseError(0, 0, "sh(h) expects a real h, got '" + arg + "'");
    }
    return k;
  }
  if (call.name == "interval_unions") {
    expect_args(call, 2);
    k.family = SymbolicFamily::IntervalUnions;
    k.lo = parse_rational(call.args[0]);
    k.hi = parse_rational(call.args[1]);
    return k;
  }
  throw ParseError(0, 0, "unknown symbolic instance '" + std::string(text) + "'");
}

}  // namespace semimod
