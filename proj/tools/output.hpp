#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace trikernel::cli {

enum class Format { Pretty, Json, Csv };

Format parse_format(const std::string& name);

/// Rows of scalars in text form. A table with an empty row key is a single
/// flat sequence (expansion coefficients, cross-order values).
struct Table {
  std::string key = "rows";  // JSON member name
  std::string row_key = "n";
  std::string col_key = "k";
  std::vector<long> row_labels;
  std::vector<std::vector<std::string>> rows;

  bool flat() const { return row_key.empty(); }
};

struct Check {
  std::string name;
  std::string status;  // "pass", "fail" or "skipped"
  std::string detail;

  bool failed() const { return status == "fail"; }
};

struct Document {
  std::string title;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  std::optional<Table> table;
  nlohmann::ordered_json trailer = nlohmann::ordered_json::object();
  std::vector<std::string> report;
  /// Pretty mode prints these instead of the trailer.
  std::vector<std::string> lines;
  std::vector<Check> checks;
  bool ok = true;
};

/// Text written to standard output. In CSV mode report lines are left out;
/// callers route them to the diagnostic stream instead.
std::string render(const Document& doc, Format format);

}  // namespace trikernel::cli
