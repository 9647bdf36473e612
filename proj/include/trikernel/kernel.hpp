#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trikernel/expr.hpp"
#include "trikernel/polynomial.hpp"
#include "trikernel/scalar.hpp"

namespace trikernel {

/// floor(n / m) for n >= 0: the largest column index of row n.
constexpr long support_width(long m, long n) { return n / m; }

/// Doubly indexed table of order m on the triangular support
/// 0 <= k <= floor(n/m). Row n holds exactly floor(n/m) + 1 entries.
///
/// at(n, k) returns zero for any k outside the support and for n < 0; asking
/// for an in-support entry of a row past n_max() throws RowNotBuilt.
class TriangularKernel {
 public:
  /// Throws BadDimension if m < 1 or a row has the wrong length.
  TriangularKernel(long m, std::vector<std::vector<Scalar>> rows);

  long m() const { return m_; }
  long n_max() const { return static_cast<long>(rows_.size()) - 1; }
  long width(long n) const { return support_width(m_, n); }

  const Scalar& at(long n, long k) const;
  const std::vector<Scalar>& row(long n) const;
  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }

  friend bool operator==(const TriangularKernel& a, const TriangularKernel& b) {
    return a.m_ == b.m_ && a.rows_ == b.rows_;
  }

 private:
  long m_;
  std::vector<std::vector<Scalar>> rows_;
};

/// Data generating a direct kernel by
///   lambda1(n, k) = p_n lambda1(n-1, k) - h(n,k) lambda1(n-m, k-1),  n >= m,
/// with lambda1(n, 0) = c_n for n < m.
class LambdaRecursiveSpec {
 public:
  /// Throws BadInitialLength when initial.size() != m, PIsKFree when p
  /// mentions k, BadDimension when m < 1.
  LambdaRecursiveSpec(long m, std::vector<Scalar> initial, Expr p, Expr h, std::string name = {});

  long m() const { return m_; }
  const std::vector<Scalar>& initial() const { return initial_; }
  const Expr& p() const { return p_; }
  const Expr& h() const { return h_; }
  const std::string& name() const { return name_; }

  bool h_is_k_free() const { return !h_.mentions_k(); }

  /// Principal factor p_n; throws ExprUndefined(n, 0) on division by zero.
  Scalar p_at(long n) const;
  /// Auxiliary factor h_(n,k); throws ExprUndefined(n, k).
  Scalar h_at(long n, long k) const;

 private:
  long m_;
  std::vector<Scalar> initial_;
  Expr p_;
  Expr h_;
  std::string name_;
};

/// Residue-class table lambda^<r>(k, t), 0 <= t <= k, zero elsewhere.
class ClassKernel {
 public:
  ClassKernel(long r, std::vector<std::vector<Scalar>> rows);

  long r() const { return r_; }
  long k_max() const { return static_cast<long>(rows_.size()) - 1; }
  const Scalar& at(long k, long t) const;

 private:
  long r_;
  std::vector<std::vector<Scalar>> rows_;
};

struct AdmissibilityReport {
  bool admissible = true;
  std::optional<long> first_offending;
};

TriangularKernel build_direct_kernel(const LambdaRecursiveSpec& spec, long n_max);

/// f_n(x) = sum_b lambda1(n, b) x^(n - m b). Throws RowNotBuilt.
Polynomial family_polynomial(const TriangularKernel& kernel, long n);

/// lambda1(n, 0) from the initial data and the principal factor alone:
/// c_n for n < m, c_{m-1} * prod_{i=m}^{n} p_i otherwise.
Scalar boundary_value(const LambdaRecursiveSpec& spec, long n);

AdmissibilityReport is_admissible(const TriangularKernel& kernel);

/// lambda^<r>(k, t) = kernel(m k + r, k - t) for every k with m k + r <= n_max.
/// Throws BadDimension unless 0 <= r < m.
ClassKernel class_view(const TriangularKernel& kernel, long r);

}  // namespace trikernel
