#include "semimod/cli.hpp"

#include "semimod/axioms.hpp"
#include "semimod/complements.hpp"
#include "semimod/errors.hpp"
#include "semimod/ideals.hpp"
#include "semimod/identities.hpp"
#include "semimod/inclusion_exclusion.hpp"
#include "semimod/probability.hpp"
#include "semimod/theorems.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace semimod::cli {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t end = std::min(line.find('#'), line.size());
  while (i < end) {
    while (i < end && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= end) break;
    const std::size_t start = i;
    while (i < end && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::uint64_t parse_count(const Token& t, std::size_t line) {
  std::uint64_t v = 0;
  const char* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (t.text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(line, t.column, "expected a non-negative integer, got '" + t.text + "'");
  }
  return v;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

class Printer {
 public:
  Printer(std::ostream& out, bool lines) : out_(out), lines_(lines) {}

  void kv(const std::string& key, const std::string& value) {
    out_ << key << (lines_ ? "=" : ": ") << value << "\n";
  }
  void kv(const std::string& key, bool value) { kv(key, std::string(value ? "true" : "false")); }
  void kv(const std::string& key, std::uint64_t value) { kv(key, std::to_string(value)); }
  void witness(const std::vector<std::string>& names) {
    out_ << "witness:";
    for (const auto& n : names) out_ << " " << n;
    out_ << "\n";
  }
  std::ostream& raw() { return out_; }

 private:
  std::ostream& out_;
  bool lines_;
};

std::string join(const std::vector<std::string>& xs, const char* sep = " ") {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += sep;
    out += x;
  }
  return out;
}

int print_report(Printer& p, const PropertyReport& r, const Codomain& c) {
  p.kv("property", r.property);
  p.kv("verdict", to_string(r.verdict));
  p.kv("checked", r.checked);
  if (r.lhs) p.kv("lhs", c.format(*r.lhs));
  if (r.rhs) p.kv("rhs", c.format(*r.rhs));
  if (!r.note.empty()) p.kv("note", r.note);
  if (!r.holds()) {
    p.witness(r.witness);
    return kViolated;
  }
  return kHolds;
}

std::string status_name(FlagStatus s) {
  switch (s) {
    case FlagStatus::Holds:
      return "holds";
    case FlagStatus::Fails:
      return "fails";
    case FlagStatus::Inapplicable:
      return "inapplicable";
  }
  return "?";
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// ---------------------------------------------------------------------------
// Command context
// ---------------------------------------------------------------------------

struct Options {
  std::string format = "human";
  std::uint64_t seed = 0;
  std::uint64_t trials = 10000;
  // Symbolic functions given inline.
  std::string rule;
  std::string codomain = "int";
};

LoadedFunction resolve_function(const std::string& ref, const Options& o) {
  if (ref.rfind("symbolic:", 0) == 0) {
    if (o.rule.empty()) throw ParseError(0, 0, "symbolic functions need --rule");
    const SymbolicStructure s = make_symbolic(parse_symbolic_kind(ref.substr(9)));
    LoadedFunction f;
    f.symbolic = make_symbolic_function(s, parse_codomain(o.codomain), o.rule);
    return f;
  }
  return load_function(ref);
}

FiniteFunction need_finite(const LoadedFunction& f) {
  if (!f.finite) throw InapplicableError("this command needs a finite function");
  return *f.finite;
}

std::vector<Index> elements_of(const FiniteStructure& s, const std::vector<std::string>& names) {
  std::vector<Index> out;
  for (const auto& n : names) out.push_back(s.index_of(n));
  return out;
}

SampleBudget budget_of(const Options& o) { return SampleBudget{o.trials, o.seed}; }

ModularSpec load_spec(const std::string& ref) {
  if (ref == "builtin:counting") return counting_spec();
  return parse_modular_spec(read_file(ref));
}

std::uint64_t parse_u64(const std::string& text) {
  return parse_count(Token{text, 0}, 0);
}

}  // namespace

// ---------------------------------------------------------------------------
// Formats
// ---------------------------------------------------------------------------

FiniteStructure parse_structure(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  StructureTables t;
  bool have_n = false;
  std::map<std::string, bool> seen;
  enum class Block { None, Add, Mul } block = Block::None;
  std::size_t rows = 0;

  auto finish_block = [&](std::size_t at) {
    if (block != Block::None && rows != t.size) {
      throw ParseError(at, 1, std::string(block == Block::Add ? "add" : "mul") + " block has " +
                                  std::to_string(rows) + " rows, expected " + std::to_string(t.size));
    }
    block = Block::None;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0].text != "semiring" || tok[1].text != "v1") {
        throw ParseError(lineno, 1, "expected header 'semiring v1'");
      }
      header = true;
      continue;
    }
    if (block != Block::None && rows < t.size) {
      if (tok.size() != t.size) {
        throw ParseError(lineno, tok.size() < t.size ? line.size() + 1 : tok[t.size].column,
                         "row has " + std::to_string(tok.size()) + " entries, expected " + std::to_string(t.size));
      }
      auto& table = block == Block::Add ? t.add : t.mul;
      for (const auto& x : tok) {
        const std::uint64_t v = parse_count(x, lineno);
        if (v >= t.size) throw ParseError(lineno, x.column, "index " + x.text + " outside 0.." + std::to_string(t.size - 1));
        table.push_back(static_cast<Index>(v));
      }
      ++rows;
      continue;
    }
    finish_block(lineno);
    const std::string& key = tok[0].text;
    if (seen[key]) throw ParseError(lineno, 1, "duplicate section '" + key + "'");
    seen[key] = true;
    if (key == "n") {
      if (tok.size() != 2) throw ParseError(lineno, 1, "expected 'n <size>'");
      t.size = parse_count(tok[1], lineno);
      if (t.size == 0 || t.size > 4096) throw ParseError(lineno, tok[1].column, "size must be in 1..4096");
      have_n = true;
      continue;
    }
    if (!have_n) throw ParseError(lineno, 1, "'n <size>' must come first");
    if (key == "names") {
      if (tok.size() - 1 != t.size) {
        throw ParseError(lineno, 1, "names lists " + std::to_string(tok.size() - 1) + " labels, expected " +
                                        std::to_string(t.size));
      }
      for (std::size_t k = 1; k < tok.size(); ++k) t.names.push_back(tok[k].text);
    } else if (key == "zero" || key == "one") {
      if (tok.size() != 2) throw ParseError(lineno, 1, "expected '" + key + " <index>'");
      const std::uint64_t v = parse_count(tok[1], lineno);
      if (v >= t.size) throw ParseError(lineno, tok[1].column, "index outside the carrier");
      (key == "zero" ? t.zero : t.one) = static_cast<Index>(v);
    } else if (key == "add" || key == "mul") {
      if (tok.size() != 1) throw ParseError(lineno, tok[1].column, "table rows start on the next line");
      block = key == "add" ? Block::Add : Block::Mul;
      rows = 0;
    } else {
      throw ParseError(lineno, 1, "unknown section '" + key + "'");
    }
  }
  finish_block(lineno + 1);
  if (!header) throw ParseError(lineno + 1, 1, "missing header 'semiring v1'");
  if (!have_n) throw ParseError(lineno + 1, 1, "missing 'n <size>'");
  if (!seen["add"] || !seen["mul"]) throw ParseError(lineno + 1, 1, "missing add or mul table");
  try {
    return FiniteStructure::from_tables(std::move(t));
  } catch (const StructureError& e) {
    throw ParseError(0, 0, e.what());
  }
}

LoadedStructure load_structure(const std::string& ref, const std::filesystem::path& base) {
  LoadedStructure out;
  out.label = ref;
  if (ref.rfind("builtin:", 0) == 0) {
    out.kind = parse_finite_kind(ref.substr(8));
    out.finite = make_finite(*out.kind);
  } else if (ref.rfind("symbolic:", 0) == 0) {
    out.symbolic = make_symbolic(parse_symbolic_kind(ref.substr(9)));
  } else {
    std::filesystem::path path(ref);
    if (path.is_relative() && !base.empty()) path = base / path;
    out.finite = parse_structure(read_file(path));
  }
  return out;
}

LoadedFunction parse_function(std::string_view text, const std::filesystem::path& base) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::optional<LoadedStructure> domain;
  std::optional<Codomain> codomain;
  std::optional<std::vector<Token>> values;
  std::size_t values_line = 0;
  std::optional<std::string> rule;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0].text != "function" || tok[1].text != "v1") {
        throw ParseError(lineno, 1, "expected header 'function v1'");
      }
      header = true;
      continue;
    }
    const std::string& key = tok[0].text;
    if (key == "domain") {
      if (domain) throw ParseError(lineno, 1, "duplicate section 'domain'");
      if (tok.size() != 2) throw ParseError(lineno, 1, "expected 'domain <ref>'");
      try {
        domain = load_structure(tok[1].text, base);
      } catch (const ParseError& e) {
        if (e.line() != 0) throw;
        throw ParseError(lineno, tok[1].column, e.what());
      } catch (const Error& e) {
        throw ParseError(lineno, tok[1].column, e.what());
      }
    } else if (key == "codomain") {
      if (codomain) throw ParseError(lineno, 1, "duplicate section 'codomain'");
      std::string rest;
      for (std::size_t k = 1; k < tok.size(); ++k) rest += (k > 1 ? " " : "") + tok[k].text;
      try {
        codomain = parse_codomain(rest);
      } catch (const Error& e) {
        throw ParseError(lineno, tok.size() > 1 ? tok[1].column : 1, e.what());
      }
    } else if (key == "values") {
      if (values) throw ParseError(lineno, 1, "duplicate section 'values'");
      values = std::vector<Token>(tok.begin() + 1, tok.end());
      values_line = lineno;
    } else if (key == "rule") {
      if (rule) throw ParseError(lineno, 1, "duplicate section 'rule'");
      if (tok.size() != 2) throw ParseError(lineno, 1, "expected 'rule <spec>'");
      rule = tok[1].text;
    } else {
      throw ParseError(lineno, 1, "unknown section '" + key + "'");
    }
  }
  if (!header) throw ParseError(lineno + 1, 1, "missing header 'function v1'");
  if (!domain) throw ParseError(lineno + 1, 1, "missing 'domain'");
  if (!codomain) throw ParseError(lineno + 1, 1, "missing 'codomain'");

  LoadedFunction out;
  if (domain->symbolic) {
    if (!rule) throw ParseError(lineno + 1, 1, "symbolic domains need a 'rule' line");
    if (values) throw ParseError(values_line, 1, "symbolic domains take a rule, not values");
    out.symbolic = make_symbolic_function(*domain->symbolic, *codomain, *rule);
    return out;
  }
  if (rule) throw ParseError(lineno + 1, 1, "finite domains take values, not a rule");
  if (!values) throw ParseError(lineno + 1, 1, "missing 'values'");
  const FiniteStructure& s = *domain->finite;
  if (values->size() != s.size()) {
    throw ParseError(values_line, 1, "values lists " + std::to_string(values->size()) + " entries, domain has " +
                                         std::to_string(s.size()));
  }
  std::vector<Value> vals;
  for (const auto& t : *values) {
    try {
      vals.push_back(codomain->normalize(codomain->parse(t.text)));
    } catch (const Error& e) {
      throw ParseError(values_line, t.column, "bad value '" + t.text + "'");
    }
  }
  out.finite = FiniteFunction(s, *codomain, std::move(vals));
  return out;
}

LoadedFunction load_function(const std::string& path) {
  const std::filesystem::path p(path);
  return parse_function(read_file(p), p.parent_path());
}

std::string emit_function(const FiniteFunction& f, const std::string& domain_ref) {
  const Codomain& c = f.codomain();
  std::string out = "function v1\ndomain " + domain_ref + "\n";
  out += "codomain " + (c.kind() == Codomain::Kind::IntegersMod ? "zmod " + std::to_string(c.modulus()) : c.name());
  out += "\nvalues";
  for (const auto& v : f.values()) out += " " + c.format(v);
  out += "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

namespace {

int cmd_classify(Printer& p, const std::string& ref, bool emit, const Options& o) {
  const LoadedStructure ls = load_structure(ref);
  if (emit) {
    if (!ls.finite) throw InapplicableError("--emit needs a finite structure");
    p.raw() << emit_structure(*ls.finite);
    return kHolds;
  }
  const AxiomReport report =
      ls.finite ? classify_structure(*ls.finite) : classify_structure(*ls.symbolic, budget_of(o));
  const StructureFlags flags = ls.finite ? structure_flags(*ls.finite) : structure_flags(*ls.symbolic, budget_of(o));
  p.kv("structure", ls.label);
  if (ls.finite) p.kv("size", static_cast<std::uint64_t>(ls.finite->size()));
  p.kv("class", to_string(report.verified_class));
  p.kv("checked", report.checked_tuples);
  if (report.sampled) p.kv("note", std::string("sampled, not proven"));
  if (report.by_construction) p.kv("note", std::string("certified by construction"));
  for (Flag f : {Flag::Zerosumfree, Flag::Entire, Flag::Simple, Flag::MultiplicativelyIdempotent}) {
    const FlagResult& r = flags.get(f);
    p.kv(to_string(f), status_name(r.status));
    if (r.status == FlagStatus::Fails && !r.witness.empty()) p.kv(to_string(f) + "_witness", join(r.witness, ","));
  }
  for (const auto& v : report.violations) p.kv("violation", to_string(v.axiom) + " at " + join(v.witness, ","));
  if (report.verified_class == StructureClass::NotAStructure) {
    p.witness(report.violations.empty() ? std::vector<std::string>{} : report.violations.front().witness);
    return kViolated;
  }
  return kHolds;
}

int cmd_comp(Printer& p, const std::string& ref) {
  const LoadedStructure ls = load_structure(ref);
  if (!ls.finite) throw InapplicableError("comp needs a finite structure");
  const FiniteStructure& s = *ls.finite;
  const ComplementMap map = complemented_elements(s);
  std::vector<std::string> names;
  for (Index x : map.elements) names.push_back(s.name(x) + "~" + s.name(*map.partner[x]));
  p.kv("comp_size", static_cast<std::uint64_t>(map.elements.size()));
  p.kv("comp", join(names));
  const CompAlgebraReport r = comp_boolean_algebra(s);
  p.kv("zerosumfree", r.zerosumfree);
  p.kv("one_plus_one_complemented", r.one_plus_one_complemented);
  p.kv("closed_under_add", r.closed_under_add);
  p.kv("add_is_sqcup", r.add_is_sqcup);
  p.kv("boolean_algebra", r.boolean_algebra);
  if (!r.reason.empty()) p.kv("reason", r.reason);
  p.kv("equivalence", std::string(r.equivalence_holds() ? "holds" : "fails"));
  if (!r.equivalence_holds()) {
    p.witness(r.witness);
    return kViolated;
  }
  return kHolds;
}

int cmd_check(Printer& p, const std::string& ref, const std::string& prop, const Options& o) {
  const LoadedFunction f = resolve_function(ref, o);
  const Property which = parse_property(prop);
  if (f.finite) return print_report(p, check_property(*f.finite, which), f.finite->codomain());
  return print_report(p, check_property(*f.symbolic, which, budget_of(o)), f.symbolic->codomain);
}

std::vector<unsigned> parse_exponents(const std::string& text) {
  std::vector<unsigned> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(static_cast<unsigned>(parse_u64(item)));
  return out;
}

int cmd_identity(Printer& p, const std::string& ref, const std::string& id, const std::vector<std::string>& elems,
                 const std::string& exponents, const Options& o) {
  const FiniteFunction f = need_finite(resolve_function(ref, o));
  const std::vector<unsigned> ex = exponents.empty() ? std::vector<unsigned>{} : parse_exponents(exponents);
  return print_report(p, verify_identity(f, parse_identity(id), elements_of(f.domain(), elems), ex), f.codomain());
}

int cmd_independent(Printer& p, const std::string& ref, const std::vector<std::string>& elems, bool equiv,
                    const Options& o) {
  const FiniteFunction f = need_finite(resolve_function(ref, o));
  const auto xs = elements_of(f.domain(), elems);
  if (!equiv) return print_report(p, are_independent(f, xs), f.codomain());
  const IndependenceEquivalence e = independence_complement_equiv(f, xs);
  p.kv("independent", e.independent);
  p.kv("all_patterns_independent", e.all_patterns_independent);
  p.kv("all_pattern_products", e.all_pattern_products);
  return print_report(p, e.report, f.codomain());
}

int cmd_metric(Printer& p, const std::string& ref, const std::vector<std::string>& elems, const Options& o) {
  const FiniteFunction f = need_finite(resolve_function(ref, o));
  const MetricResult m = semi_metric(f, elements_of(f.domain(), elems));
  p.kv("points", static_cast<std::uint64_t>(m.points.size()));
  if (!elems.empty()) {
    for (std::size_t i = 0; i < m.points.size(); ++i) {
      for (std::size_t j = i + 1; j < m.points.size(); ++j) {
        p.kv("d(" + f.domain().name(m.points[i]) + "," + f.domain().name(m.points[j]) + ")",
             f.codomain().format(m.at(i, j)));
      }
    }
  }
  p.kv("positive", m.positive);
  p.kv("metric", m.metric);
  return print_report(p, m.report, f.codomain());
}

int cmd_bayes(Printer& p, const std::string& ref, const std::string& given, const std::vector<std::string>& parts,
              std::uint64_t k, const Options& o) {
  const FiniteFunction f = need_finite(resolve_function(ref, o));
  if (k < 1 || k > parts.size()) throw ParameterError("--k must be between 1 and the partition size");
  const BayesResult b = bayes(f, f.domain().index_of(given), elements_of(f.domain(), parts), k - 1);
  const Codomain& c = f.codomain();
  p.kv("posterior", c.format(b.posterior));
  p.kv("direct", c.format(b.direct));
  for (std::size_t i = 0; i < b.posteriors.size(); ++i) {
    p.kv("posterior_" + std::to_string(i + 1), c.format(b.posteriors[i]));
  }
  p.kv("posterior_sum", c.format(b.posterior_sum));
  return print_report(p, b.report, c);
}

int cmd_totalprob(Printer& p, const std::string& ref, const std::string& event, const std::vector<std::string>& parts,
                  const Options& o) {
  const FiniteFunction f = need_finite(resolve_function(ref, o));
  const TotalProbability t = total_probability(f, f.domain().index_of(event), elements_of(f.domain(), parts));
  return print_report(p, t.report, f.codomain());
}

template <class Fn>
int cmd_inequality(Printer& p, const std::string& ref, const std::vector<std::string>& elems, const Options& o,
                   Fn&& fn) {
  const FiniteFunction f = need_finite(resolve_function(ref, o));
  const InequalityResult r = fn(f, elements_of(f.domain(), elems));
  return print_report(p, r.report, f.codomain());
}

int cmd_dedekind(Printer& p, const std::string& action, const std::vector<std::string>& args,
                 const std::string& spec_ref, const std::string& variant, const Options& o) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw ParameterError("dedekind " + action + " takes " + std::to_string(n) + " argument(s)");
  };
  if (action == "factor") {
    need(1);
    const std::uint64_t g = parse_u64(args[0]);
    const Factorization fac = factor(g);
    std::string text;
    for (const auto& [q, e] : fac) {
      if (!text.empty()) text += "*";
      text += std::to_string(q) + (e > 1 ? "^" + std::to_string(e) : "");
    }
    p.kv("generator", g);
    p.kv("factorization", text.empty() ? std::string("1") : text);
    return kHolds;
  }
  if (spec_ref.empty()) throw ParameterError("dedekind " + action + " needs --spec");
  const ModularSpec spec = load_spec(spec_ref);
  const Codomain& c = spec.codomain;
  if (action == "eval") {
    need(1);
    p.kv("value", c.format(eval_modular(spec, IdealZ::of(parse_u64(args[0])))));
    return kHolds;
  }
  if (action == "verify") {
    if (args.empty()) return print_report(p, verify_modular_random(spec, o.trials, o.seed), c);
    need(2);
    return print_report(p, verify_modular(spec, IdealZ::of(parse_u64(args[0])), IdealZ::of(parse_u64(args[1]))), c);
  }
  if (action == "corollary") {
    need(2);
    if (variant != "gcd" && variant != "lcm") throw ParameterError("--variant is gcd or lcm");
    const CorollaryResult r = corollary_check(spec, parse_u64(args[0]), parse_u64(args[1]));
    for (const auto& [name, v] : {std::pair{"gcd", r.gcd}, std::pair{"lcm", r.lcm}}) {
      p.kv(std::string(name) + "_lhs", c.format(v.lhs));
      p.kv(std::string(name) + "_rhs", c.format(v.rhs));
      p.kv(name, std::string(v.holds ? "holds" : "fails"));
    }
    const bool holds = variant == "gcd" ? r.gcd.holds : r.lcm.holds;
    if (!holds) {
      p.witness({args[0], args[1]});
      return kViolated;
    }
    return kHolds;
  }
  throw ParameterError("unknown dedekind action '" + action + "'");
}

int cmd_enumerate(Printer& p, const std::string& ref, const std::string& codomain, const std::string& claim_name) {
  const LoadedStructure ls = load_structure(ref);
  if (!ls.finite) throw InapplicableError("enumerate needs a finite structure");
  const Codomain c = parse_codomain(codomain);
  ClassificationClaim claim;
  claim.name = "none";
  if (claim_name != "none") {
    if (!ls.kind) throw ParameterError("claims apply to builtin instances only");
    claim = claim_by_name(claim_name, *ls.kind);
  }
  const EnumerationResult r = classify_modular(*ls.finite, c, claim);
  p.kv("total", r.total);
  p.kv("modular", r.modular);
  if (claim.shape == ClassificationClaim::Shape::BooleanCorollary) p.kv("finitely_additive", r.finitely_additive);
  p.kv("digest", hex(r.digest));
  p.kv("reverified", r.reverified);
  if (claim.shape == ClassificationClaim::Shape::None) {
    p.kv("claim", std::string("none"));
    return kHolds;
  }
  if (!claim.note.empty()) p.kv("reading", claim.note);
  p.kv("forward", std::string(*r.forward ? "holds" : "fails"));
  p.kv("converse", std::string(*r.converse ? "holds" : "fails"));
  p.kv("claim", std::string(r.claim_holds() ? "holds" : "fails"));
  if (!r.claim_holds()) {
    const std::uint64_t idx = r.forward_witness ? *r.forward_witness : *r.converse_witness;
    const auto table = function_table(idx, ls.finite->size(), c.modulus());
    std::vector<std::string> w;
    for (std::size_t x = 0; x < table.size(); ++x) {
      w.push_back(ls.finite->name(static_cast<Index>(x)) + "=" + std::to_string(table[x]));
    }
    p.witness(w);
    return kViolated;
  }
  return kHolds;
}

int cmd_sample_theorem(Printer& p, const std::string& ref, const std::string& theorem, const Options& o) {
  const LoadedFunction f = resolve_function(ref, o);
  if (!f.symbolic) throw InapplicableError("sample-theorem needs a symbolic function");
  return print_report(p, sampled_constancy_check(*f.symbolic, parse_forcing_theorem(theorem), budget_of(o)),
                      f.symbolic->codomain);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semirings, complements and modular functions", "semimod"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "lines"}));
  app.add_option("--seed", o.seed, "Seed for every sampled check");
  app.add_option("--trials", o.trials, "Sample budget");
  app.add_option("--rule", o.rule, "Rule for symbolic:<kind> functions");
  app.add_option("--codomain", o.codomain, "Codomain: int, zmod:m, rational, mulrational");
  // Global options are also accepted after the subcommand.
  app.fallthrough();

  std::string ref, prop, id, exponents, given, spec, variant = "gcd", theorem, claim = "none", action;
  std::vector<std::string> elems;
  bool emit = false, equiv = false;
  std::uint64_t k = 1;

  auto* classify = app.add_subcommand("classify", "Axioms and structural flags");
  classify->add_option("structure", ref)->required();
  classify->add_flag("--emit", emit, "Print the structure in the semiring v1 format");

  auto* comp = app.add_subcommand("comp", "Complemented elements and the comp(S) equivalence");
  comp->add_option("structure", ref)->required();

  auto* check = app.add_subcommand("check", "Check a function property");
  check->add_option("--prop", prop)->required();
  check->add_option("function", ref)->required();

  auto* identity = app.add_subcommand("identity", "Verify one identity instance");
  identity->add_option("--id", id)->required();
  identity->add_option("--exponents", exponents, "m,n for L1");
  identity->add_option("function", ref)->required();
  identity->add_option("elements", elems);

  auto* independent = app.add_subcommand("independent", "Independence of elements");
  independent->add_flag("--equiv", equiv, "Check the complement-pattern equivalence");
  independent->add_option("function", ref)->required();
  independent->add_option("elements", elems)->required();

  auto* metric = app.add_subcommand("metric", "Semi-metric on comp(S)");
  metric->add_option("function", ref)->required();
  metric->add_option("elements", elems);

  auto* bayes_cmd = app.add_subcommand("bayes", "Bayes' formula over a partition");
  bayes_cmd->add_option("--k", k, "1-based index of the partition element");
  bayes_cmd->add_option("function", ref)->required();
  bayes_cmd->add_option("event", given)->required();
  bayes_cmd->add_option("partition", elems)->required();

  auto* total = app.add_subcommand("totalprob", "Law of total probability");
  total->add_option("function", ref)->required();
  total->add_option("event", given)->required();
  total->add_option("partition", elems)->required();

  std::map<std::string, CLI::App*> tuple_cmds;
  const std::pair<const char*, const char*> tuple_specs[] = {
      {"boole", "Boole's inequality p(sum) <= sum p"},
      {"parallel", "Parallel systems: f(sum) = 1 - prod(1 - f)"},
      {"poincare", "Inclusion-exclusion for a modular function"},
  };
  for (const auto& [name, help] : tuple_specs) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("function", ref)->required();
    sub->add_option("elements", elems)->required();
    tuple_cmds[name] = sub;
  }

  auto* dedekind = app.add_subcommand("dedekind", "Modular functions on the ideals of Z");
  dedekind->add_option("action", action, "factor, eval, verify or corollary")->required();
  dedekind->add_option("args", elems);
  dedekind->add_option("--spec", spec, "modularspec v1 file or builtin:counting");
  dedekind->add_option("--variant", variant, "gcd or lcm")->check(CLI::IsMember({"gcd", "lcm"}));

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate every function into zmod:m");
  enumerate->add_option("--claim", claim, "Claim to verify, or none");
  enumerate->add_option("structure", ref)->required();

  auto* sample = app.add_subcommand("sample-theorem", "Forcing identities on a symbolic function");
  sample->add_option("--theorem", theorem)->required();
  sample->add_option("function", ref)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    const auto rest = app.remaining();
    if (app.get_subcommands().empty() && !rest.empty()) {
      err << "error: unknown command '" << rest.front() << "'\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return kError;
  }

  Printer p(out, o.format == "lines");
  try {
    if (*classify) return cmd_classify(p, ref, emit, o);
    if (*comp) return cmd_comp(p, ref);
    if (*check) return cmd_check(p, ref, prop, o);
    if (*identity) return cmd_identity(p, ref, id, elems, exponents, o);
    if (*independent) return cmd_independent(p, ref, elems, equiv, o);
    if (*metric) return cmd_metric(p, ref, elems, o);
    if (*bayes_cmd) return cmd_bayes(p, ref, given, elems, k, o);
    if (*total) return cmd_totalprob(p, ref, given, elems, o);
    if (*tuple_cmds["boole"]) return cmd_inequality(p, ref, elems, o, boole_bound);
    if (*tuple_cmds["parallel"]) return cmd_inequality(p, ref, elems, o, parallel_systems);
    if (*tuple_cmds["poincare"]) return cmd_inequality(p, ref, elems, o, poincare);
    if (*dedekind) return cmd_dedekind(p, action, elems, spec, variant, o);
    if (*enumerate) return cmd_enumerate(p, ref, o.codomain, claim);
    if (*sample) return cmd_sample_theorem(p, ref, theorem, o);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  err << "error: no command\n";
  return kError;
}

}  // namespace semimod::cli
