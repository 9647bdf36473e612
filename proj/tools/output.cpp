#include "output.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trikernel::cli {

namespace {

using nlohmann::ordered_json;

std::string meta_text(const ordered_json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

/// One top-level member per line; nested arrays of rows or records get one
/// element per line, everything else is compact.
std::string dump_document(const ordered_json& doc) {
  std::ostringstream os;
  os << "{\n";
  std::size_t i = 0;
  for (const auto& [key, value] : doc.items()) {
    os << "  " << ordered_json(key).dump() << ": ";
    const bool nested = value.is_array() && !value.empty() && (value.front().is_array() || value.front().is_object());
    if (nested) {
      os << "[\n";
      for (std::size_t j = 0; j < value.size(); ++j) {
        os << "    " << value[j].dump() << (j + 1 < value.size() ? ",\n" : "\n");
      }
      os << "  ]";
    } else {
      os << value.dump();
    }
    os << (++i < doc.size() ? ",\n" : "\n");
  }
  os << "}\n";
  return os.str();
}

std::string render_json(const Document& doc) {
  ordered_json out = doc.meta;
  if (doc.table) {
    const Table& t = *doc.table;
    if (t.flat()) {
      out[t.key] = t.rows.empty() ? ordered_json::array() : ordered_json(t.rows.front());
    } else {
      out[t.key] = t.rows;
    }
  }
  for (const auto& [key, value] : doc.trailer.items()) out[key] = value;
  if (!doc.checks.empty()) {
    ordered_json checks = ordered_json::array();
    for (const Check& c : doc.checks) {
      ordered_json item = {{"name", c.name}, {"status", c.status}};
      if (!c.detail.empty()) item["detail"] = c.detail;
      checks.push_back(std::move(item));
    }
    out["checks"] = std::move(checks);
    out["all_pass"] = doc.ok;
  }
  if (!doc.report.empty()) out["report"] = doc.report;
  return dump_document(out);
}

std::string render_csv(const Document& doc) {
  std::ostringstream os;
  if (doc.table) {
    const Table& t = *doc.table;
    if (t.flat()) {
      os << t.col_key << ",value\n";
      if (!t.rows.empty()) {
        for (std::size_t c = 0; c < t.rows.front().size(); ++c) os << c << ',' << t.rows.front()[c] << '\n';
      }
    } else {
      os << t.row_key << ',' << t.col_key << ",value\n";
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
          os << t.row_labels[r] << ',' << c << ',' << t.rows[r][c] << '\n';
        }
      }
    }
  }
  if (!doc.checks.empty()) {
    os << "check,status\n";
    for (const Check& c : doc.checks) os << '"' << c.name << "\"," << c.status << '\n';
  }
  if (!doc.table && doc.checks.empty()) {
    for (const std::string& line : doc.lines) os << line << '\n';
  }
  return os.str();
}

void pretty_table(std::ostringstream& os, const Table& t) {
  std::size_t columns = 0;
  for (const auto& row : t.rows) columns = std::max(columns, row.size());
  std::vector<std::size_t> width(columns);
  for (std::size_t c = 0; c < columns; ++c) width[c] = (t.col_key + "=" + std::to_string(c)).size();
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::size_t label_width = t.row_key.size();
  for (long label : t.row_labels) label_width = std::max(label_width, std::to_string(label).size());

  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
  if (!t.flat()) os << pad(t.row_key, label_width) << " |";
  for (std::size_t c = 0; c < columns; ++c) os << "  " << pad(t.col_key + "=" + std::to_string(c), width[c]);
  os << '\n';
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (!t.flat()) os << pad(std::to_string(t.row_labels[r]), label_width) << " |";
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) os << "  " << pad(t.rows[r][c], width[c]);
    os << '\n';
  }
}

std::string render_pretty(const Document& doc) {
  std::ostringstream os;
  os << doc.title;
  for (const auto& [key, value] : doc.meta.items()) os << "  " << key << '=' << meta_text(value);
  os << '\n';
  if (doc.table) {
    if (doc.table->rows.empty() || doc.table->rows.front().empty()) {
      os << "(empty)\n";
    } else {
      pretty_table(os, *doc.table);
    }
  }
  if (doc.lines.empty()) {
    for (const auto& [key, value] : doc.trailer.items()) os << key << ": " << meta_text(value) << '\n';
  }
  for (const std::string& line : doc.lines) os << line << '\n';
  for (const Check& c : doc.checks) {
    os << c.name << ": " << c.status;
    if (!c.detail.empty()) os << " (" << c.detail << ')';
    os << '\n';
  }
  for (const std::string& line : doc.report) os << line << '\n';
  if (!doc.checks.empty()) os << (doc.ok ? "all checks passed" : "some checks FAILED") << '\n';
  return os.str();
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "pretty") return Format::Pretty;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string render(const Document& doc, Format format) {
  switch (format) {
    case Format::Json: return render_json(doc);
    case Format::Csv: return render_csv(doc);
    case Format::Pretty: return render_pretty(doc);
  }
  return {};
}

}  // namespace trikernel::cli
