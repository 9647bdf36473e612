#include "trikernel/kernel.hpp"

#include "trikernel/error.hpp"

namespace trikernel {

namespace {

const Scalar& zero() {
  static const Scalar z;
  return z;
}

}  // namespace

TriangularKernel::TriangularKernel(long m, std::vector<std::vector<Scalar>> rows)
    : m_(m), rows_(std::move(rows)) {
  if (m_ < 1) throw Error(ErrorCode::BadDimension, "order m must be positive");
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    const auto expected = static_cast<std::size_t>(support_width(m_, static_cast<long>(n))) + 1;
    if (rows_[n].size() != expected) {
      throw Error(ErrorCode::BadDimension,
                  "row " + std::to_string(n) + " has " + std::to_string(rows_[n].size()) +
                      " entries, expected " + std::to_string(expected),
                  static_cast<long>(n));
    }
  }
}

const Scalar& TriangularKernel::at(long n, long k) const {
  if (n < 0 || k < 0 || k > width(n)) return zero();
  if (n > n_max()) {
    throw Error(ErrorCode::RowNotBuilt,
                "row " + std::to_string(n) + " requested, built through " + std::to_string(n_max()),
                n, k);
  }
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const std::vector<Scalar>& TriangularKernel::row(long n) const {
  if (n < 0 || n > n_max()) {
    throw Error(ErrorCode::RowNotBuilt,
                "row " + std::to_string(n) + " requested, built through " + std::to_string(n_max()),
                n);
  }
  return rows_[static_cast<std::size_t>(n)];
}

LambdaRecursiveSpec::LambdaRecursiveSpec(long m, std::vector<Scalar> initial, Expr p, Expr h,
                                         std::string name)
    : m_(m), initial_(std::move(initial)), p_(std::move(p)), h_(std::move(h)), name_(std::move(name)) {
  if (m_ < 1) throw Error(ErrorCode::BadDimension, "order m must be positive");
  if (static_cast<long>(initial_.size()) != m_) {
    throw Error(ErrorCode::BadInitialLength, "expected " + std::to_string(m_) +
                                                 " initial values, got " +
                                                 std::to_string(initial_.size()));
  }
  if (p_.mentions_k()) {
    throw Error(ErrorCode::PIsKFree, "principal factor p may depend on n only");
  }
}

Scalar LambdaRecursiveSpec::p_at(long n) const {
  try {
    return p_.eval(n, 0);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DivisionByZero) throw;
    throw Error(ErrorCode::ExprUndefined, "p undefined at n=" + std::to_string(n), n, 0);
  }
}

Scalar LambdaRecursiveSpec::h_at(long n, long k) const {
  try {
    return h_.eval(n, k);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DivisionByZero) throw;
    throw Error(ErrorCode::ExprUndefined,
                "h undefined at n=" + std::to_string(n) + ", k=" + std::to_string(k), n, k);
  }
}

ClassKernel::ClassKernel(long r, std::vector<std::vector<Scalar>> rows)
    : r_(r), rows_(std::move(rows)) {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k].size() != k + 1) {
      throw Error(ErrorCode::BadDimension, "class row " + std::to_string(k) + " must have " +
                                               std::to_string(k + 1) + " entries");
    }
  }
}

const Scalar& ClassKernel::at(long k, long t) const {
  if (k < 0 || t < 0 || t > k || k > k_max()) return zero();
  return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)];
}

TriangularKernel build_direct_kernel(const LambdaRecursiveSpec& spec, long n_max) {
  if (n_max < 0) throw Error(ErrorCode::BadDimension, "n_max must be non-negative");
  const long m = spec.m();
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);

  // Out-of-support reads (k > w(n-1), or the k-1 = -1 column) are zero.
  auto get = [&rows, m](long n, long k) -> const Scalar& {
    if (n < 0 || k < 0 || k > support_width(m, n)) return zero();
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  };

  for (long n = 0; n <= n_max; ++n) {
    if (n < m) {
      rows.push_back({spec.initial()[static_cast<std::size_t>(n)]});
      continue;
    }
    const long w = support_width(m, n);
    const Scalar p = spec.p_at(n);
    std::vector<Scalar> row(static_cast<std::size_t>(w) + 1);
    for (long k = 0; k <= w; ++k) {
      Scalar value = p * get(n - 1, k);
      if (k >= 1) value -= spec.h_at(n, k) * get(n - m, k - 1);
      row[static_cast<std::size_t>(k)] = std::move(value);
    }
    rows.push_back(std::move(row));
  }
  return TriangularKernel(m, std::move(rows));
}

Polynomial family_polynomial(const TriangularKernel& kernel, long n) {
  const auto& row = kernel.row(n);
  std::vector<Scalar> coeffs(static_cast<std::size_t>(n) + 1);
  for (long b = 0; b < static_cast<long>(row.size()); ++b) {
    coeffs[static_cast<std::size_t>(n - kernel.m() * b)] = row[static_cast<std::size_t>(b)];
  }
  return Polynomial(std::move(coeffs));
}

Scalar boundary_value(const LambdaRecursiveSpec& spec, long n) {
  if (n < 0) throw Error(ErrorCode::BadDimension, "n must be non-negative");
  const long m = spec.m();
  if (n < m) return spec.initial()[static_cast<std::size_t>(n)];
  Scalar value = spec.initial()[static_cast<std::size_t>(m - 1)];
  for (long i = m; i <= n; ++i) value *= spec.p_at(i);
  return value;
}

AdmissibilityReport is_admissible(const TriangularKernel& kernel) {
  for (long n = 0; n <= kernel.n_max(); ++n) {
    if (kernel.at(n, 0).is_zero()) return {false, n};
  }
  return {};
}

ClassKernel class_view(const TriangularKernel& kernel, long r) {
  const long m = kernel.m();
  if (r < 0 || r >= m) {
    throw Error(ErrorCode::BadDimension, "residue must satisfy 0 <= r < " + std::to_string(m));
  }
  std::vector<std::vector<Scalar>> rows;
  for (long k = 0; m * k + r <= kernel.n_max(); ++k) {
    std::vector<Scalar> row(static_cast<std::size_t>(k) + 1);
    for (long t = 0; t <= k; ++t) row[static_cast<std::size_t>(t)] = kernel.at(m * k + r, k - t);
    rows.push_back(std::move(row));
  }
  return ClassKernel(r, std::move(rows));
}

}  // namespace trikernel
