/**
 * @file structure.hpp
 * @brief Finite (pre-)semirings given by tables and infinite ones given by
 *        operation maps plus a seeded sampler.
 */
#pragma once

#include "semimod/element.hpp"
#include "semimod/rng.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semimod {

using Index = std::uint32_t;

struct AxiomReport;

/// Raw description of a table-defined structure on {0, ..., size-1}.
/// Tables are row-major: add[a * size + b] is a + b.
struct StructureTables {
  std::size_t size = 0;
  std::vector<std::string> names;  // empty means "0", "1", ...
  std::vector<Index> add;
  std::vector<Index> mul;
  std::optional<Index> zero;
  std::optional<Index> one;
};

/// Finite carrier {0, ..., size-1} with commutative-semiring-style
/// operations. Immutable; copies share state.
///
/// Two backends exist: explicit tables, and the Boolean powerset of an m-set
/// whose elements are bitmasks combined with bitwise OR / AND. The powerset
/// backend makes carriers of 2^16 elements practical.
class FiniteStructure {
 public:
  /// Validates indices and declared neutral elements; throws StructureError.
  static FiniteStructure from_tables(StructureTables tables);
  /// Powerset of {1, ..., m} under union and intersection, 1 <= m <= 20.
  static FiniteStructure powerset(unsigned m);

  std::size_t size() const;
  Index add(Index a, Index b) const;
  Index mul(Index a, Index b) const;
  std::optional<Index> zero() const;
  std::optional<Index> one() const;

  std::string name(Index i) const;
  std::optional<Index> find(std::string_view name) const;
  /// Like find but throws DomainError naming the unknown label.
  Index index_of(std::string_view name) const;
  std::string names_of(const std::vector<Index>& elements) const;

  /// Number of base points when this is the powerset backend.
  std::optional<unsigned> powerset_bits() const;

  /// Materializes the tables (the powerset backend is limited to m <= 8).
  StructureTables tables() const;

  /// Exhaustive axiom report, computed once and cached.
  const AxiomReport& axioms() const;

  /// Same carrier, tables, names and distinguished elements.
  friend bool operator==(const FiniteStructure& a, const FiniteStructure& b);

  struct Impl;

 private:
  explicit FiniteStructure(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Renders a structure in the `semiring v1` text format.
std::string emit_structure(const FiniteStructure& s);

/// Infinite structure described by total operation maps and a sampler.
/// Everything is a value; a SymbolicStructure is immutable once built.
struct SymbolicStructure {
  using BinaryOp = std::function<Element(const Element&, const Element&)>;

  std::string family;       // e.g. "tropical"; used for theorem applicability
  std::string description;  // human-readable carrier and operations
  BinaryOp add;
  BinaryOp mul;
  std::optional<Element> zero;
  std::optional<Element> one;
  std::function<Element(Rng&)> sample;
  /// Membership in the described carrier; results outside fail closure.
  std::function<bool(const Element&)> contains;
  /// Element equality; exact unless the instance is inexact.
  std::function<bool(const Element&, const Element&)> equal;
  std::function<Element(std::string_view)> parse;
  /// Analytic complement when the instance is a Boolean algebra.
  std::function<std::optional<Element>(const Element&)> complement;
  /// Multiplicative inverse of non-zero elements for semifields.
  std::function<Element(const Element&)> inverse;
  bool exact = true;
};

}  // namespace semimod
