#include "commands.hpp"

#include <cstdlib>
#include <functional>

#include "trikernel/basis_change.hpp"
#include "trikernel/catalog.hpp"
#include "trikernel/error.hpp"
#include "trikernel/inversion.hpp"

namespace trikernel::cli {

namespace {

constexpr long kDefaultNMax = 10;

std::vector<std::string> texts(const std::vector<Scalar>& row) {
  std::vector<std::string> out;
  out.reserve(row.size());
  for (const Scalar& s : row) out.push_back(s.to_string());
  return out;
}

Table kernel_table(const TriangularKernel& kernel) {
  Table t;
  for (long n = 0; n <= kernel.n_max(); ++n) {
    t.row_labels.push_back(n);
    t.rows.push_back(texts(kernel.row(n)));
  }
  return t;
}

Table flat_table(const std::string& key, const std::string& col_key, const std::vector<Scalar>& values) {
  Table t;
  t.key = key;
  t.row_key.clear();
  t.col_key = col_key;
  t.rows.push_back(texts(values));
  return t;
}

long checked_n_max(std::optional<long> requested, long fallback, const char* flag = "--n-max") {
  const long n_max = requested.value_or(fallback);
  if (n_max < 0) throw UsageError(std::string(flag) + " must be non-negative");
  const long cap = max_n_from_env();
  if (n_max > cap) {
    throw UsageError("n_max " + std::to_string(n_max) + " exceeds TRIKERNEL_MAX_N=" + std::to_string(cap));
  }
  return n_max;
}

long default_n_max(const FamilyDefinition& family) {
  const long limit = family.table_rows_limit();
  return limit >= 0 ? limit : kDefaultNMax;
}

const LambdaRecursiveSpec& require_spec(const NamedFamily& family) {
  if (const auto* spec = family.definition.spec()) return *spec;
  throw Error(ErrorCode::NoRecurrenceData,
              "'" + family.label + "' is an explicit table; recurrence methods need lambda-recursive data");
}

void require_admissible(const TriangularKernel& kernel, const std::string& label) {
  const AdmissibilityReport report = is_admissible(kernel);
  if (!report.admissible) {
    const long n = *report.first_offending;
    throw Error(ErrorCode::NotAdmissible,
                "'" + label + "' has leading coefficient lambda1(" + std::to_string(n) + ",0) = 0", n);
  }
}

/// First (n, k) where two tables differ, as text; empty when equal.
std::string first_difference(const TriangularKernel& a, const TriangularKernel& b) {
  for (long n = 0; n <= std::min(a.n_max(), b.n_max()); ++n) {
    for (long k = 0; k <= a.width(n); ++k) {
      if (!(a.at(n, k) == b.at(n, k))) {
        return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + "): " + a.at(n, k).to_string() + " vs " +
               b.at(n, k).to_string();
      }
    }
  }
  return a.n_max() == b.n_max() ? std::string() : std::string("tables have different sizes");
}

Document table_document(const std::string& title, const NamedFamily& family, long n_max, const std::string& method) {
  Document doc;
  doc.title = title;
  doc.meta["family"] = family.label;
  doc.meta["m"] = family.definition.m();
  doc.meta["n_max"] = n_max;
  doc.meta["method"] = method;
  return doc;
}

Polynomial parse_poly(const std::string& text) {
  std::vector<Scalar> coeffs;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      coeffs.push_back(Scalar::parse(item));
    } catch (const ParseError& e) {
      throw ParseError(start + e.offset(), "bad coefficient " + std::to_string(coeffs.size()) + " in --poly");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

Check run_check(const std::string& name, const std::function<std::string()>& body) {
  // body returns an empty string on success, otherwise the first failure
  const std::string failure = body();
  return failure.empty() ? Check{name, "pass", {}} : Check{name, "fail", failure};
}

}  // namespace

NamedFamily resolve_name_or_path(const std::string& text) {
  for (const std::string& name : catalog::names()) {
    if (name == text) {
      auto entry = catalog::get(name);
      return {name, FamilyDefinition{name, std::move(entry.spec)}};
    }
  }
  if (text.find('/') == std::string::npos && text.find(".json") == std::string::npos) {
    (void)catalog::get(text);  // throws UnknownFamily with the valid names
  }
  FamilyDefinition def = load_family(read_text_file(text));
  std::string label = def.name.empty() ? text : def.name;
  return {std::move(label), std::move(def)};
}

NamedFamily resolve_family(const FamilySource& source) {
  if (!source.family.empty() && !source.spec_path.empty()) throw UsageError("give either --family or --spec, not both");
  if (!source.family.empty()) {
    auto entry = catalog::get(source.family);
    return {entry.name, FamilyDefinition{entry.name, std::move(entry.spec)}};
  }
  if (source.spec_path.empty()) throw UsageError("one of --family or --spec is required");
  FamilyDefinition def = load_family(read_text_file(source.spec_path));
  std::string label = def.name.empty() ? source.spec_path : def.name;
  return {std::move(label), std::move(def)};
}

long max_n_from_env() {
  const char* raw = std::getenv("TRIKERNEL_MAX_N");
  if (raw == nullptr || *raw == '\0') return 512;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 0) throw UsageError(std::string("TRIKERNEL_MAX_N must be a non-negative integer, got '") + raw + "'");
  return value;
}

Document cmd_direct(const NamedFamily& family, std::optional<long> n_max_flag) {
  const long n_max = checked_n_max(n_max_flag, default_n_max(family.definition));
  const TriangularKernel kernel = family.definition.direct_kernel(n_max);
  Document doc = table_document("direct kernel", family, n_max, family.definition.spec() ? "lambda-recursive" : "table");
  doc.table = kernel_table(kernel);
  return doc;
}

Document cmd_inverse(const NamedFamily& family, std::optional<long> n_max_flag, const std::string& method) {
  const long n_max = checked_n_max(n_max_flag, default_n_max(family.definition));
  Document doc = table_document("inverse kernel", family, n_max, method);
  if (method == "recurrence") {
    doc.table = kernel_table(inverse_by_recurrence(require_spec(family), n_max));
    return doc;
  }
  const TriangularKernel direct = family.definition.direct_kernel(n_max);
  if (method == "orthogonality") {
    doc.table = kernel_table(inverse_by_orthogonality(direct, n_max));
    return doc;
  }
  if (method == "determinant") {
    require_admissible(direct, family.label);
    doc.table = kernel_table(inverse_table_by_determinant(direct, n_max));
    return doc;
  }
  if (method != "all") throw UsageError("unknown method '" + method + "'");

  const TriangularKernel orth = inverse_by_orthogonality(direct, n_max);
  const TriangularKernel det = inverse_table_by_determinant(direct, n_max);
  auto compare = [&doc](const std::string& label, const TriangularKernel& a, const TriangularKernel& b) {
    const std::string diff = first_difference(a, b);
    if (diff.empty()) {
      doc.report.push_back(label + ": agree");
    } else {
      doc.report.push_back(label + ": DISAGREE at " + diff);
      doc.ok = false;
    }
  };
  compare("orthogonality = determinant", orth, det);
  const LambdaRecursiveSpec* spec = family.definition.spec();
  if (spec == nullptr) {
    doc.report.emplace_back("recurrence: not applicable (explicit table)");
  } else if (!spec->h_is_k_free()) {
    doc.report.emplace_back("recurrence: not applicable (h depends on k)");
  } else {
    compare("orthogonality = recurrence", orth, inverse_by_recurrence(*spec, n_max));
  }
  doc.table = kernel_table(orth);
  return doc;
}

Document cmd_change(const NamedFamily& from, const NamedFamily& to, std::optional<long> n_max_flag,
                    const std::string& method) {
  if (from.definition.m() != to.definition.m()) {
    throw Error(ErrorCode::OrderMismatch, "families have different orders (m=" + std::to_string(from.definition.m()) +
                                              " vs m=" + std::to_string(to.definition.m()) + "); use the cross command");
  }
  // Explicit tables bound the default; two recursive families use kDefaultNMax.
  long fallback = -1;
  for (const auto* f : {&from, &to}) {
    const long limit = f->definition.table_rows_limit();
    if (limit >= 0) fallback = fallback < 0 ? limit : std::min(fallback, limit);
  }
  const long n_max = checked_n_max(n_max_flag, fallback < 0 ? kDefaultNMax : fallback);

  Document doc;
  doc.title = "change of basis";
  doc.meta["from"] = from.label;
  doc.meta["to"] = to.label;
  doc.meta["m"] = from.definition.m();
  doc.meta["n_max"] = n_max;
  doc.meta["method"] = method;
  if (method == "recurrence") {
    doc.table = kernel_table(change_by_recurrence(require_spec(from), require_spec(to), n_max).table());
  } else if (method == "convolution") {
    const TriangularKernel f = from.definition.direct_kernel(n_max);
    const TriangularKernel g = to.definition.direct_kernel(n_max);
    require_admissible(f, from.label);
    doc.table = kernel_table(change_by_convolution(f, inverse_by_orthogonality(g, n_max), n_max).table());
  } else {
    throw UsageError("unknown method '" + method + "'");
  }
  return doc;
}

Document cmd_cross(const NamedFamily& from, const NamedFamily& to, long n) {
  checked_n_max(n, 0, "--n");
  const TriangularKernel f = from.definition.direct_kernel(n);
  const TriangularKernel g = to.definition.direct_kernel(n);
  require_admissible(f, from.label);
  const CrossOrderTable z = change_cross_order(f, inverse_by_orthogonality(g, n), n);

  Document doc;
  doc.title = "cross-order coefficients";
  doc.meta["from"] = from.label;
  doc.meta["to"] = to.label;
  doc.meta["m1"] = z.m1;
  doc.meta["m2"] = z.m2;
  doc.meta["n"] = n;
  doc.meta["method"] = "cross-order";
  doc.table = flat_table("values", "r", z.values);
  return doc;
}

Document cmd_expand(const NamedFamily& family, const std::string& poly_text) {
  const Polynomial p = parse_poly(poly_text);
  const long degree = p.degree();
  const long n_max = std::max(degree, 0L);
  checked_n_max(n_max, 0, "degree of --poly");
  const long limit = family.definition.table_rows_limit();
  if (limit >= 0 && n_max > limit) {
    throw Error(ErrorCode::DegreeExceedsBuild,
                "degree " + std::to_string(degree) + " exceeds the table rows 0.." + std::to_string(limit), degree);
  }
  const TriangularKernel direct = family.definition.direct_kernel(n_max);
  const TriangularKernel inverse = inverse_by_orthogonality(direct, n_max);
  const std::vector<Scalar> coords = expand_in_basis(p, direct, inverse);
  const bool verified = combine_in_basis(coords, direct) == p;

  Document doc;
  doc.title = "expansion in family basis";
  doc.meta["family"] = family.label;
  doc.meta["m"] = family.definition.m();
  doc.meta["degree"] = degree;
  doc.meta["method"] = "inverse-kernel";
  doc.table = flat_table("coefficients", "r", coords);
  doc.trailer["verified"] = verified;
  doc.ok = verified;
  return doc;
}

Document cmd_verify(const NamedFamily& family, std::optional<long> n_max_flag) {
  const long n_max = checked_n_max(n_max_flag, default_n_max(family.definition));
  const TriangularKernel direct = family.definition.direct_kernel(n_max);
  const LambdaRecursiveSpec* spec = family.definition.spec();
  const long m = direct.m();
  Document doc = table_document("verify", family, n_max, "all");
  doc.meta.erase("method");
  auto& checks = doc.checks;

  const AdmissibilityReport admissible = is_admissible(direct);
  const std::string not_admissible =
      admissible.admissible ? std::string() : "lambda1(" + std::to_string(*admissible.first_offending) + ",0) = 0";
  checks.push_back(run_check("admissibility", [&] { return not_admissible; }));

  std::optional<TriangularKernel> orth;
  if (admissible.admissible) orth = inverse_by_orthogonality(direct, n_max);
  auto needs_inverse = [&](const std::string& name, const std::function<std::string()>& body) {
    if (!orth) {
      checks.push_back({name, "fail", "not admissible: " + not_admissible});
    } else {
      checks.push_back(run_check(name, body));
    }
  };

  needs_inverse("orthogonality", [&] {
    for (long n = 0; n <= n_max; ++n) {
      for (long k = 0; k <= direct.width(n); ++k) {
        if (!(orthogonality_sum(direct, *orth, n, k) == Scalar(k == 0 ? 1 : 0))) {
          return "n=" + std::to_string(n) + ", k=" + std::to_string(k);
        }
      }
    }
    return std::string();
  });
  needs_inverse("reconstruction", [&] {
    for (long n = 0; n <= n_max; ++n) {
      if (!verify_inversion(direct, *orth, n)) return "x^" + std::to_string(n);
    }
    return std::string();
  });
  needs_inverse("method agreement orthogonality = determinant",
                [&] { return first_difference(*orth, inverse_table_by_determinant(direct, n_max)); });

  const char* no_recurrence = spec == nullptr ? "explicit table" : (spec->h_is_k_free() ? nullptr : "h depends on k");
  if (no_recurrence != nullptr) {
    checks.push_back({"method agreement orthogonality = recurrence", "skipped", no_recurrence});
    checks.push_back({"determinant recurrence", "skipped", no_recurrence});
  } else {
    needs_inverse("method agreement orthogonality = recurrence",
                  [&] { return first_difference(*orth, inverse_by_recurrence(*spec, n_max)); });
    checks.push_back(run_check("determinant recurrence", [&] {
      for (long n = m; n <= n_max; ++n) {
        for (long k = 1; k <= direct.width(n); ++k) {
          if (!(hessenberg_det(build_expansion_matrix(direct, n, k)) == det_recurrence_rhs(*spec, direct, n, k))) {
            return "n=" + std::to_string(n) + ", k=" + std::to_string(k);
          }
        }
      }
      return std::string();
    }));
  }

  for (long n = m; n <= n_max; n += m) {
    checks.push_back(run_check("vanishing determinant n=" + std::to_string(n), [&] {
      const Scalar det = hessenberg_det(build_expansion_matrix(direct, n - 1, n / m));
      return det.is_zero() ? std::string() : "|M(" + std::to_string(n - 1) + "," + std::to_string(n / m) + ")| = " + det.to_string();
    }));
  }

  if (spec == nullptr) {
    checks.push_back({"boundary factorization", "skipped", "explicit table"});
  } else {
    checks.push_back(run_check("boundary factorization", [&] {
      for (long n = 0; n <= n_max; ++n) {
        if (!(boundary_value(*spec, n) == direct.at(n, 0))) return "n=" + std::to_string(n);
      }
      return std::string();
    }));
  }

  for (const Check& c : checks) {
    if (c.failed()) doc.ok = false;
  }
  return doc;
}

Document cmd_list() {
  Document doc;
  doc.title = "catalog";
  nlohmann::ordered_json families = nlohmann::ordered_json::array();
  for (const auto& entry : catalog::list()) {
    nlohmann::ordered_json item;
    item["name"] = entry.name;
    item["m"] = entry.spec.m();
    item["initial"] = texts(entry.spec.initial());
    item["p"] = entry.spec.p().render();
    item["h"] = entry.spec.h().render();
    item["admissible"] = entry.admissible;
    item["recurrence_methods"] = entry.recurrence_methods_ok;
    families.push_back(std::move(item));
    std::string line = entry.name + "  m=" + std::to_string(entry.spec.m()) + "  p=" + entry.spec.p().render() +
                       "  h=" + entry.spec.h().render();
    if (!entry.admissible) line += "  (not admissible)";
    if (!entry.recurrence_methods_ok) line += "  (no recurrence methods)";
    doc.lines.push_back(std::move(line));
  }
  doc.trailer["families"] = std::move(families);
  return doc;
}

}  // namespace trikernel::cli
