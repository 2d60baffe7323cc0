#include "semimod/structure.hpp"

#include "semimod/axioms.hpp"
#include "semimod/errors.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <unordered_map>

namespace semimod {

struct FiniteStructure::Impl {
  std::size_t size = 0;
  unsigned bits = 0;  // > 0 selects the powerset backend
  std::vector<std::string> names;
  std::vector<Index> add;
  std::vector<Index> mul;
  std::optional<Index> zero;
  std::optional<Index> one;
  std::unordered_map<std::string, Index> lookup;

  mutable std::once_flag axioms_once;
  mutable std::unique_ptr<AxiomReport> axioms;
};

namespace {

void check_label(const std::string& label) {
  if (label.empty()) throw StructureError("empty element name");
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') {
      throw StructureError("element name '" + label + "' contains whitespace or '#'");
    }
  }
}

std::string powerset_name(Index mask) {
  std::string out = "{";
  bool first = true;
  for (unsigned bit = 0; bit < 32; ++bit) {
    if (mask & (Index{1} << bit)) {
      if (!first) out += ",";
      out += std::to_string(bit + 1);
      first = false;
    }
  }
  return out + "}";
}

std::optional<Index> parse_powerset_name(std::string_view text, unsigned bits) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') return std::nullopt;
  text = text.substr(1, text.size() - 2);
  Index mask = 0;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    if (item.empty()) return std::nullopt;
    unsigned value = 0;
    for (char c : item) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      value = value * 10 + static_cast<unsigned>(c - '0');
      if (value > bits) return std::nullopt;
    }
    if (value == 0) return std::nullopt;
    mask |= Index{1} << (value - 1);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return mask;
}

}  // namespace

FiniteStructure FiniteStructure::from_tables(StructureTables tables) {
  const std::size_t n = tables.size;
  if (n == 0) throw StructureError("structure must have at least one element");
  if (n > 4096) throw StructureError("table-defined structures are limited to 4096 elements");
  if (tables.add.size() != n * n) throw StructureError("add table must have size*size entries");
  if (tables.mul.size() != n * n) throw StructureError("mul table must have size*size entries");
  for (std::size_t k = 0; k < n * n; ++k) {
    if (tables.add[k] >= n) {
      throw StructureError("add(" + std::to_string(k / n) + "," + std::to_string(k % n) +
                           ") = " + std::to_string(tables.add[k]) + " is out of range");
    }
    if (tables.mul[k] >= n) {
      throw StructureError("mul(" + std::to_string(k / n) + "," + std::to_string(k % n) +
                           ") = " + std::to_string(tables.mul[k]) + " is out of range");
    }
  }
  if (tables.names.empty()) {
    for (std::size_t i = 0; i < n; ++i) tables.names.push_back(std::to_string(i));
  }
  if (tables.names.size() != n) throw StructureError("expected one name per element");

  auto impl = std::make_shared<Impl>();
  impl->size = n;
  for (std::size_t i = 0; i < n; ++i) {
    check_label(tables.names[i]);
    if (!impl->lookup.emplace(tables.names[i], static_cast<Index>(i)).second) {
      throw StructureError("duplicate element name '" + tables.names[i] + "'");
    }
  }

  const auto neutral = [&](const std::vector<Index>& table, Index e) {
    for (std::size_t x = 0; x < n; ++x) {
      if (table[e * n + x] != x || table[x * n + e] != x) return false;
    }
    return true;
  };
  if (tables.zero) {
    if (*tables.zero >= n) throw StructureError("zero index out of range");
    if (!neutral(tables.add, *tables.zero)) {
      throw StructureError("declared zero '" + tables.names[*tables.zero] +
                           "' is not neutral for addition");
    }
  }
  if (tables.one) {
    if (*tables.one >= n) throw StructureError("one index out of range");
    if (!neutral(tables.mul, *tables.one)) {
      throw StructureError("declared one '" + tables.names[*tables.one] +
                           "' is not neutral for multiplication");
    }
  }

  impl->names = std::move(tables.names);
  impl->add = std::move(tables.add);
  impl->mul = std::move(tables.mul);
  impl->zero = tables.zero;
  impl->one = tables.one;
  return FiniteStructure(std::move(impl));
}

FiniteStructure FiniteStructure::powerset(unsigned m) {
  if (m < 1 || m > 20) throw ParameterError("powerset requires 1 <= m <= 20");
  auto impl = std::make_shared<Impl>();
  impl->size = std::size_t{1} << m;
  impl->bits = m;
  impl->zero = 0;
  impl->one = static_cast<Index>(impl->size - 1);
  return FiniteStructure(std::move(impl));
}

std::size_t FiniteStructure::size() const { return impl_->size; }

Index FiniteStructure::add(Index a, Index b) const {
  if (impl_->bits) return a | b;
  return impl_->add[a * impl_->size + b];
}

Index FiniteStructure::mul(Index a, Index b) const {
  if (impl_->bits) return a & b;
  return impl_->mul[a * impl_->size + b];
}

std::optional<Index> FiniteStructure::zero() const { return impl_->zero; }
std::optional<Index> FiniteStructure::one() const { return impl_->one; }

std::string FiniteStructure::name(Index i) const {
  if (impl_->bits) return powerset_name(i);
  return impl_->names.at(i);
}

std::optional<Index> FiniteStructure::find(std::string_view label) const {
  if (impl_->bits) return parse_powerset_name(label, impl_->bits);
  const auto it = impl_->lookup.find(std::string(label));
  if (it == impl_->lookup.end()) return std::nullopt;
  return it->second;
}

Index FiniteStructure::index_of(std::string_view label) const {
  if (auto found = find(label)) return *found;
  throw DomainError("unknown element '" + std::string(label) + "'");
}

std::string FiniteStructure::names_of(const std::vector<Index>& elements) const {
  std::string out;
  for (Index e : elements) {
    if (!out.empty()) out += " ";
    out += name(e);
  }
  return out;
}

std::optional<unsigned> FiniteStructure::powerset_bits() const {
  if (impl_->bits) return impl_->bits;
  return std::nullopt;
}

StructureTables FiniteStructure::tables() const {
  if (!impl_->bits) {
    return StructureTables{impl_->size, impl_->names, impl_->add, impl_->mul, impl_->zero, impl_->one};
  }
  if (impl_->bits > 8) throw BudgetError("powerset tables are only materialized for m <= 8");
  StructureTables t;
  t.size = impl_->size;
  for (Index i = 0; i < t.size; ++i) t.names.push_back(name(i));
  t.add.resize(t.size * t.size);
  t.mul.resize(t.size * t.size);
  for (Index a = 0; a < t.size; ++a) {
    for (Index b = 0; b < t.size; ++b) {
      t.add[a * t.size + b] = a | b;
      t.mul[a * t.size + b] = a & b;
    }
  }
  t.zero = impl_->zero;
  t.one = impl_->one;
  return t;
}

const AxiomReport& FiniteStructure::axioms() const {
  std::call_once(impl_->axioms_once, [this] {
    impl_->axioms = std::make_unique<AxiomReport>(classify_structure(*this));
  });
  return *impl_->axioms;
}

bool operator==(const FiniteStructure& a, const FiniteStructure& b) {
  if (a.impl_ == b.impl_) return true;
  const std::size_t n = a.size();
  if (n != b.size() || a.zero() != b.zero() || a.one() != b.one()) return false;
  for (Index i = 0; i < n; ++i) {
    if (a.name(i) != b.name(i)) return false;
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (a.add(x, y) != b.add(x, y) || a.mul(x, y) != b.mul(x, y)) return false;
    }
  }
  return true;
}

std::string emit_structure(const FiniteStructure& s) {
  const StructureTables t = s.tables();
  std::string out = "semiring v1\n";
  out += "n " + std::to_string(t.size) + "\n";
  out += "names";
  for (const auto& label : t.names) out += " " + label;
  out += "\n";
  if (t.zero) out += "zero " + std::to_string(*t.zero) + "\n";
  if (t.one) out += "one " + std::to_string(*t.one) + "\n";
  const auto block = [&](const char* title, const std::vector<Index>& table) {
    out += title;
    out += "\n";
    for (std::size_t r = 0; r < t.size; ++r) {
      for (std::size_t c = 0; c < t.size; ++c) {
        if (c) out += " ";
        out += std::to_string(table[r * t.size + c]);
      }
      out += "\n";
    }
  };
  block("add", t.add);
  block("mul", t.mul);
  return out;
}

}  // namespace semimod
