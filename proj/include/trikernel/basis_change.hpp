#pragma once

#include <vector>

#include "trikernel/kernel.hpp"

namespace trikernel {

enum class Direction {
  FToG,  // f_n = sum_k g_{n-mk} z(n,k)
  GToF,  // g_n = sum_k f_{n-mk} y(n,k)
};

/// Connection coefficients between two families of the same order. The
/// direction tag records which family is being expanded in which basis.
class ChangeTable {
 public:
  ChangeTable(TriangularKernel table, Direction direction)
      : table_(std::move(table)), direction_(direction) {}

  long m() const { return table_.m(); }
  long n_max() const { return table_.n_max(); }
  Direction direction() const { return direction_; }
  const Scalar& at(long n, long k) const { return table_.at(n, k); }
  const TriangularKernel& table() const { return table_; }

  friend bool operator==(const ChangeTable& a, const ChangeTable& b) {
    return a.direction_ == b.direction_ && a.table_ == b.table_;
  }

 private:
  TriangularKernel table_;
  Direction direction_;
};

/// Z(n; r) for 0 <= r <= n, dense, including the entries forced to zero by
/// the gcd(m1, m2) congruence.
struct CrossOrderTable {
  long n;
  long m1;
  long m2;
  std::vector<Scalar> values;

  const Scalar& at(long r) const { return values[static_cast<std::size_t>(r)]; }
};

/// z(n, k) = sum_{b=0}^{k} lambda1(n, b) mu3(n - m b, k - b).
/// Pass (lambda1 of f, mu3 of g) for f -> g. Throws OrderMismatch.
ChangeTable change_by_convolution(const TriangularKernel& lambda1, const TriangularKernel& mu3, long n_max,
                                  Direction direction = Direction::FToG);

/// Same table from the two-family recurrence in n; both auxiliary factors
/// must be independent of k. Direction::GToF swaps the two specs and yields
/// y(n, k). Throws HDependsOnK, NotAdmissible, OrderMismatch,
/// PrincipalFactorZero.
ChangeTable change_by_recurrence(const LambdaRecursiveSpec& spec_f, const LambdaRecursiveSpec& spec_g,
                                 long n_max, Direction direction = Direction::FToG);

/// Z(n; r) = sum over b with r <= n - m1 b and m2 | n - m1 b - r of
/// lambda1(n, b) mu3(n - m1 b, (n - m1 b - r) / m2).
CrossOrderTable change_cross_order(const TriangularKernel& lambda1, const TriangularKernel& mu3, long n);

/// Coordinates C(0..N) of p in the basis {f_r}:
///   C(r) = sum_t c_{r + m t} lambda3(r + m t, t).
/// Empty for the zero polynomial. Throws DegreeExceedsBuild, OrderMismatch.
std::vector<Scalar> expand_in_basis(const Polynomial& p, const TriangularKernel& direct,
                                    const TriangularKernel& inverse);

/// sum_r coords[r] f_r(x).
Polynomial combine_in_basis(const std::vector<Scalar>& coords, const TriangularKernel& direct);

}  // namespace trikernel
