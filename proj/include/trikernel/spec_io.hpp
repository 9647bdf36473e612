#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "trikernel/kernel.hpp"

namespace trikernel {

/// Parses the lambda-recursive spec format:
///   {"name": "chebyshev-t", "m": 2, "initial": ["1","1"], "p": "2", "h": "1"}
/// Throws ParseError (JSON or expression syntax, with byte offset),
/// UnknownVariable, PIsKFree or BadInitialLength.
LambdaRecursiveSpec load_spec(std::string_view json_text);

/// A family given either by lambda-recursive data or by an explicit direct
/// kernel table ({"m": 1, "table": [["7"], ["-6","6"], ...]}).
struct FamilyDefinition {
  std::string name;
  std::variant<LambdaRecursiveSpec, TriangularKernel> source;

  long m() const;
  const LambdaRecursiveSpec* spec() const { return std::get_if<LambdaRecursiveSpec>(&source); }
  /// Direct kernel through n_max. Explicit tables throw RowNotBuilt when
  /// n_max exceeds the table.
  TriangularKernel direct_kernel(long n_max) const;
  /// Largest row index the definition can produce, -1 for "unbounded".
  long table_rows_limit() const;
};

/// Accepts either spec-file variant.
FamilyDefinition load_family(std::string_view json_text);

/// Reads a whole file; throws Error(Io) when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace trikernel
