/**
 * @file axioms.hpp
 * @brief Axiom verification and structural flags for (pre-)semirings.
 *
 * Finite structures are checked over every tuple. Symbolic structures are
 * checked on seeded samples only and their reports say so.
 */
#pragma once

#include "semimod/rng.hpp"
#include "semimod/structure.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace semimod {

enum class StructureClass { NotAStructure, PreSemiring, Hemiring, Semiring };

enum class Axiom {
  Closure,
  AddCommutative,
  MulCommutative,
  AddAssociative,
  MulAssociative,
  ZeroNeutral,
  OneNeutral,
  ZeroNotOne,
  ZeroAbsorbing,
  Distributive,
};

std::string to_string(StructureClass c);
std::string to_string(Axiom a);

struct Violation {
  Axiom axiom;
  std::vector<std::string> witness;  // element labels
  std::vector<Index> indices;        // finite structures only
};

struct AxiomReport {
  StructureClass verified_class = StructureClass::NotAStructure;
  /// True for symbolic structures: "sampled, not proven".
  bool sampled = false;
  /// True when a large powerset is certified by its bitwise construction
  /// instead of tuple enumeration.
  bool by_construction = false;
  std::uint64_t checked_tuples = 0;
  /// First witness of each failed axiom, in check order.
  std::vector<Violation> violations;

  bool holds(Axiom a) const;
  bool at_least(StructureClass c) const { return verified_class >= c; }
};

/// Largest number of triples enumerated by an exhaustive classification.
inline constexpr std::uint64_t kDefaultTupleBudget = std::uint64_t{1} << 24;

AxiomReport classify_structure(const FiniteStructure& s,
                               std::uint64_t tuple_budget = kDefaultTupleBudget);
AxiomReport classify_structure(const SymbolicStructure& s, const SampleBudget& budget);

enum class Flag { Zerosumfree, Entire, Simple, MultiplicativelyIdempotent };
enum class FlagStatus { Holds, Fails, Inapplicable };

std::string to_string(Flag f);

struct FlagResult {
  Flag flag;
  FlagStatus status = FlagStatus::Inapplicable;
  std::vector<std::string> witness;
  std::vector<Index> indices;

  bool holds() const { return status == FlagStatus::Holds; }
};

struct StructureFlags {
  FlagResult zerosumfree{Flag::Zerosumfree};
  FlagResult entire{Flag::Entire};
  FlagResult simple{Flag::Simple};
  FlagResult multiplicatively_idempotent{Flag::MultiplicativelyIdempotent};

  const FlagResult& get(Flag f) const;
};

/// zerosumfree and entire need a zero, simple needs a one; a missing
/// element marks the flag Inapplicable.
StructureFlags structure_flags(const FiniteStructure& s);
StructureFlags structure_flags(const SymbolicStructure& s, const SampleBudget& budget);

/// Decides one flag; throws InapplicableError when it needs a missing
/// zero or one.
FlagResult decide_flag(const FiniteStructure& s, Flag f);

}  // namespace semimod
