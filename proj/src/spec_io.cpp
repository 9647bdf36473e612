#include "trikernel/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "trikernel/error.hpp"

namespace trikernel {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports the 1-based position of the offending byte.
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(offset, "malformed JSON");
  }
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError(0, "spec must be a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(0, std::string("missing field \"") + key + "\"");
  return *it;
}

long read_order(const json& doc) {
  const json& m = require(doc, "m");
  if (!m.is_number_integer() || m.get<long>() < 1) {
    throw ParseError(0, "field \"m\" must be a positive integer");
  }
  return m.get<long>();
}

Scalar read_scalar(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Scalar(value.get<long>());
  if (!value.is_string()) throw ParseError(0, where + " must be a scalar string such as \"-3/4\"");
  try {
    return Scalar::parse(value.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(e.offset(), where + ": " + e.what());
  }
}

Expr read_expr(const json& doc, const char* key) {
  const json& src = require(doc, key);
  if (!src.is_string()) throw ParseError(0, std::string("field \"") + key + "\" must be a string");
  try {
    return Expr::parse(src.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(e.offset(), std::string("in \"") + key + "\": " + e.what(), e.code());
  }
}

std::string read_name(const json& doc) {
  auto it = doc.find("name");
  if (it == doc.end() || it->is_null()) return {};
  if (!it->is_string()) throw ParseError(0, "field \"name\" must be a string");
  return it->get<std::string>();
}

LambdaRecursiveSpec spec_from_json(const json& doc) {
  const long m = read_order(doc);
  const json& init = require(doc, "initial");
  if (!init.is_array()) throw ParseError(0, "field \"initial\" must be an array");
  std::vector<Scalar> initial;
  for (std::size_t i = 0; i < init.size(); ++i) {
    initial.push_back(read_scalar(init[i], "initial[" + std::to_string(i) + "]"));
  }
  Expr p = read_expr(doc, "p");
  Expr h = read_expr(doc, "h");
  return LambdaRecursiveSpec(m, std::move(initial), std::move(p), std::move(h), read_name(doc));
}

TriangularKernel table_from_json(const json& doc) {
  const long m = read_order(doc);
  const json& table = require(doc, "table");
  if (!table.is_array() || table.empty()) throw ParseError(0, "field \"table\" must be a non-empty array");
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t n = 0; n < table.size(); ++n) {
    const json& row = table[n];
    const auto expected = static_cast<std::size_t>(support_width(m, static_cast<long>(n))) + 1;
    if (!row.is_array() || row.size() != expected) {
      throw ParseError(0, "table row " + std::to_string(n) + " must hold " +
                              std::to_string(expected) + " entries");
    }
    std::vector<Scalar> values;
    for (std::size_t k = 0; k < row.size(); ++k) {
      values.push_back(read_scalar(row[k], "table[" + std::to_string(n) + "][" + std::to_string(k) + "]"));
    }
    rows.push_back(std::move(values));
  }
  return TriangularKernel(m, std::move(rows));
}

}  // namespace

LambdaRecursiveSpec load_spec(std::string_view json_text) {
  return spec_from_json(parse_json(json_text));
}

FamilyDefinition load_family(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (doc.is_object() && doc.contains("table")) {
    return {read_name(doc), table_from_json(doc)};
  }
  LambdaRecursiveSpec spec = spec_from_json(doc);
  std::string name = spec.name();
  return {std::move(name), std::move(spec)};
}

long FamilyDefinition::m() const {
  return std::visit([](const auto& s) { return s.m(); }, source);
}

TriangularKernel FamilyDefinition::direct_kernel(long n_max) const {
  if (const auto* s = spec()) return build_direct_kernel(*s, n_max);
  const auto& table = std::get<TriangularKernel>(source);
  if (n_max > table.n_max()) {
    throw Error(ErrorCode::RowNotBuilt,
                "explicit table has rows 0.." + std::to_string(table.n_max()) + ", requested " +
                    std::to_string(n_max),
                n_max);
  }
  auto rows = table.rows();
  rows.resize(static_cast<std::size_t>(n_max) + 1);
  return TriangularKernel(table.m(), std::move(rows));
}

long FamilyDefinition::table_rows_limit() const {
  if (spec()) return -1;
  return std::get<TriangularKernel>(source).n_max();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace trikernel
