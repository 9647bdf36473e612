#include "trikernel/catalog.hpp"

#include <array>

#include "trikernel/error.hpp"

namespace trikernel::catalog {

namespace {

struct Row {
  const char* name;
  long m;
  std::array<const char*, 2> initial;  // first m used
  const char* p;
  const char* h;
};

constexpr std::array<Row, 8> kTable{{
    {"laguerre", 1, {"1", nullptr}, "-1/n", "(k-2*n)/n"},
    {"chebyshev-t", 2, {"1", "1"}, "2", "1"},
    {"chebyshev-u", 2, {"1", "2"}, "2", "1"},
    {"legendre", 2, {"1", "1"}, "(2*n-1)/n", "(n-1)/n"},
    {"hermite-h", 2, {"1", "2"}, "2", "2*n-2"},
    {"hermite-he", 2, {"1", "1"}, "1", "n-1"},
    {"lucas", 2, {"2", "1"}, "1", "1"},
    {"fibonacci", 2, {"0", "1"}, "1", "1"},
}};

bool boundary_nonzero(const LambdaRecursiveSpec& spec) {
  for (long n = 0; n <= kAdmissibilityHorizon; ++n) {
    if (boundary_value(spec, n).is_zero()) return false;
  }
  return true;
}

CatalogEntry make_entry(const Row& row) {
  std::vector<Scalar> initial;
  for (long i = 0; i < row.m; ++i) initial.push_back(Scalar::parse(row.initial[static_cast<std::size_t>(i)]));
  LambdaRecursiveSpec spec(row.m, std::move(initial), Expr::parse(row.p), Expr::parse(row.h), row.name);
  const bool admissible = boundary_nonzero(spec);
  const bool k_free = spec.h_is_k_free();
  return {row.name, std::move(spec), admissible, k_free};
}

}  // namespace

CatalogEntry get(std::string_view name) {
  for (const Row& row : kTable) {
    if (name == row.name) return make_entry(row);
  }
  std::string valid;
  for (const Row& row : kTable) {
    if (!valid.empty()) valid += ", ";
    valid += row.name;
  }
  throw Error(ErrorCode::UnknownFamily, "unknown family '" + std::string(name) + "'; valid names: " + valid);
}

std::vector<CatalogEntry> list() {
  std::vector<CatalogEntry> out;
  for (const Row& row : kTable) out.push_back(make_entry(row));
  return out;
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const Row& row : kTable) out.emplace_back(row.name);
  return out;
}

}  // namespace trikernel::catalog
