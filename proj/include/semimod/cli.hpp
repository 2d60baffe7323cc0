/**
 * @file cli.hpp
 * @brief Text formats and the command dispatcher behind the semimod binary.
 *
 * Exit codes: 0 when the checked property holds, 1 when it is violated
 * (exactly one `witness:` line is printed), 2 for usage, parse and
 * hypothesis errors.
 */
#pragma once

#include "semimod/function.hpp"
#include "semimod/instances.hpp"
#include "semimod/structure.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semimod::cli {

inline constexpr int kHolds = 0;
inline constexpr int kViolated = 1;
inline constexpr int kError = 2;

/// `semiring v1` text. Throws ParseError naming line and column.
FiniteStructure parse_structure(std::string_view text);

struct LoadedStructure {
  std::optional<FiniteStructure> finite;
  std::optional<FiniteKind> kind;  // builtin finite instances
  std::optional<SymbolicStructure> symbolic;
  std::string label;
};

/// A path to a `semiring v1` file, `builtin:<kind>` or `symbolic:<kind>`.
LoadedStructure load_structure(const std::string& ref, const std::filesystem::path& base = {});

struct LoadedFunction {
  std::optional<FiniteFunction> finite;
  std::optional<SymbolicFunction> symbolic;
};

/// `function v1` text; relative domain paths resolve against base.
LoadedFunction parse_function(std::string_view text, const std::filesystem::path& base = {});
LoadedFunction load_function(const std::string& path);

/// Renders a finite function in the `function v1` format with the given
/// domain reference.
std::string emit_function(const FiniteFunction& f, const std::string& domain_ref);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semimod::cli
