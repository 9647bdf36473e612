#pragma once

#include <cstddef>
#include <vector>

#include "trikernel/kernel.hpp"

namespace trikernel {

/// Square lower Hessenberg matrix: entry (i, j) is zero whenever j > i + 1.
/// Indices are 1-based to match the usual statement of the determinant
/// identities.
class LowerHessenberg {
 public:
  /// Row-major entries; throws BadDimension on a size mismatch or a nonzero
  /// entry above the superdiagonal.
  LowerHessenberg(std::size_t dim, std::vector<Scalar> entries);

  std::size_t dim() const { return dim_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[(i - 1) * dim_ + (j - 1)]; }

 private:
  std::size_t dim_;
  std::vector<Scalar> entries_;
};

/// The k x k matrix with a_ij = lambda1(n - (j-1) m, i - j + 1) for j <= i+1.
struct ExpansionMatrix {
  long n;
  LowerHessenberg matrix;

  std::size_t k() const { return matrix.dim(); }
  const Scalar& at(std::size_t i, std::size_t j) const { return matrix.at(i, j); }
};

/// Accepts 1 <= k <= floor((n+1)/m). The upper bound exceeds floor(n/m) only
/// when m | n+1; that extra size is the M(n-1, w(n)) the determinant
/// recurrence and the vanishing-determinant identity refer to.
/// Throws BadDimension outside that range.
ExpansionMatrix build_expansion_matrix(const TriangularKernel& kernel, long n, long k);

/// Division-free determinant by the leading-minor recurrence along the last
/// row, O(dim^2) multiplications. The empty matrix has determinant 1.
Scalar hessenberg_det(const LowerHessenberg& matrix);
inline Scalar hessenberg_det(const ExpansionMatrix& m) { return hessenberg_det(m.matrix); }

/// lambda3 rows 0..n_max from the discrete orthogonality recurrence.
/// Throws NotAdmissible(n) for the smallest n with lambda1(n, 0) = 0.
TriangularKernel inverse_by_orthogonality(const TriangularKernel& direct, long n_max);

/// lambda3(n, k) = (-1)^k det M(n,k) / prod_{i=0}^{k} lambda1(n - i m, 0).
Scalar inverse_by_determinant(const TriangularKernel& direct, long n, long k);

/// Whole table through n_max, one determinant per entry.
TriangularKernel inverse_table_by_determinant(const TriangularKernel& direct, long n_max);

/// lambda3 from the two-term recurrence in n that holds when h does not
/// depend on k. Throws HDependsOnK, NotAdmissible(n), PrincipalFactorZero(n).
TriangularKernel inverse_by_recurrence(const LambdaRecursiveSpec& spec, long n_max);

/// sum_{b=0}^{k} lambda3(n, b) lambda1(n - m b, k - b); 1 for k = 0 and 0 for
/// 1 <= k <= w(n) exactly when lambda3 inverts lambda1 at row n.
Scalar orthogonality_sum(const TriangularKernel& direct, const TriangularKernel& inverse, long n, long k);

/// True iff sum_b lambda3(n, b) f_{n - m b}(x) == x^n coefficientwise.
/// Throws OrderMismatch.
bool verify_inversion(const TriangularKernel& direct, const TriangularKernel& inverse, long n);

/// Right-hand side of the determinant recurrence
///   |M(n,k)| = P_k |M(n-1,k)| - P_{k-1} h_{n-(k-1)m} lambda1(n-km, 0) |M(n-1,k-1)|,
/// P_j = prod_{i=1}^{j} p_{n-(i-1)m}, with |M(., 0)| = 1. Requires k-free h
/// (HDependsOnK otherwise), n >= m and 1 <= k <= w(n).
Scalar det_recurrence_rhs(const LambdaRecursiveSpec& spec, const TriangularKernel& direct, long n, long k);

/// lambda3^<r>(k, t) = lambda3(m k + r, t) (no column reversal, unlike the
/// direct class view).
ClassKernel inverse_class_view(const TriangularKernel& inverse, long r);

}  // namespace trikernel
