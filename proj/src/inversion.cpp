#include "trikernel/inversion.hpp"

#include "trikernel/error.hpp"

namespace trikernel {

namespace {

void require_built(const TriangularKernel& kernel, long n_max) {
  if (n_max < 0) throw Error(ErrorCode::BadDimension, "n_max must be non-negative");
  if (n_max > kernel.n_max()) {
    throw Error(ErrorCode::RowNotBuilt,
                "kernel built through " + std::to_string(kernel.n_max()) + ", need " +
                    std::to_string(n_max),
                n_max);
  }
}

void require_admissible(const TriangularKernel& direct, long n_max) {
  for (long n = 0; n <= n_max; ++n) {
    if (direct.at(n, 0).is_zero()) {
      throw Error(ErrorCode::NotAdmissible,
                  "leading coefficient lambda1(" + std::to_string(n) + ",0) is zero", n);
    }
  }
}

}  // namespace

LowerHessenberg::LowerHessenberg(std::size_t dim, std::vector<Scalar> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw Error(ErrorCode::BadDimension, "expected " + std::to_string(dim_ * dim_) + " entries");
  }
  for (std::size_t i = 1; i <= dim_; ++i) {
    for (std::size_t j = i + 2; j <= dim_; ++j) {
      if (!at(i, j).is_zero()) {
        throw Error(ErrorCode::BadDimension, "nonzero entry above the superdiagonal at (" +
                                                 std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

ExpansionMatrix build_expansion_matrix(const TriangularKernel& kernel, long n, long k) {
  const long m = kernel.m();
  if (n < 0 || k < 1 || k > support_width(m, n + 1)) {
    throw Error(ErrorCode::BadDimension,
                "expansion matrix size k=" + std::to_string(k) + " outside 1.." +
                    std::to_string(n < 0 ? 0 : support_width(m, n + 1)),
                n, k);
  }
  require_built(kernel, n);
  const auto dim = static_cast<std::size_t>(k);
  std::vector<Scalar> entries(dim * dim);
  for (long i = 1; i <= k; ++i) {
    for (long j = 1; j <= std::min(i + 1, k); ++j) {
      entries[static_cast<std::size_t>((i - 1) * k + (j - 1))] = kernel.at(n - (j - 1) * m, i - j + 1);
    }
  }
  return {n, LowerHessenberg(dim, std::move(entries))};
}

Scalar hessenberg_det(const LowerHessenberg& a) {
  // D_i = sum_{j=1}^{i} (-1)^{i-j} a(i,j) * prod_{l=j}^{i-1} a(l,l+1) * D_{j-1}
  const std::size_t k = a.dim();
  std::vector<Scalar> minors(k + 1);
  minors[0] = Scalar(1);
  for (std::size_t i = 1; i <= k; ++i) {
    Scalar sum;
    Scalar chain(1);  // prod_{l=j}^{i-1} a(l, l+1), grown as j walks down
    for (std::size_t j = i; j >= 1; --j) {
      Scalar term = a.at(i, j) * chain * minors[j - 1];
      if ((i - j) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
      if (j > 1) {
        chain *= a.at(j - 1, j);
        if (chain.is_zero()) break;
      }
    }
    minors[i] = std::move(sum);
  }
  return minors[k];
}

TriangularKernel inverse_by_orthogonality(const TriangularKernel& direct, long n_max) {
  require_built(direct, n_max);
  require_admissible(direct, n_max);
  const long m = direct.m();
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) {
    const long w = support_width(m, n);
    std::vector<Scalar> row(static_cast<std::size_t>(w) + 1);
    row[0] = direct.at(n, 0).inverse();
    for (long k = 1; k <= w; ++k) {
      Scalar acc;
      for (long b = 0; b < k; ++b) acc += row[static_cast<std::size_t>(b)] * direct.at(n - m * b, k - b);
      row[static_cast<std::size_t>(k)] = -acc / direct.at(n - m * k, 0);
    }
    rows.push_back(std::move(row));
  }
  return TriangularKernel(m, std::move(rows));
}

Scalar inverse_by_determinant(const TriangularKernel& direct, long n, long k) {
  const long m = direct.m();
  if (n < 0 || k < 0 || k > support_width(m, n)) {
    throw Error(ErrorCode::BadDimension, "k outside the support of row " + std::to_string(n), n, k);
  }
  require_built(direct, n);
  Scalar denominator(1);
  for (long i = 0; i <= k; ++i) {
    const Scalar& lead = direct.at(n - i * m, 0);
    if (lead.is_zero()) {
      throw Error(ErrorCode::NotAdmissible,
                  "leading coefficient lambda1(" + std::to_string(n - i * m) + ",0) is zero", n - i * m);
    }
    denominator *= lead;
  }
  if (k == 0) return denominator.inverse();
  Scalar det = hessenberg_det(build_expansion_matrix(direct, n, k));
  if (k % 2 == 1) det = -det;
  return det / denominator;
}

TriangularKernel inverse_table_by_determinant(const TriangularKernel& direct, long n_max) {
  require_built(direct, n_max);
  require_admissible(direct, n_max);
  std::vector<std::vector<Scalar>> rows;
  for (long n = 0; n <= n_max; ++n) {
    const long w = direct.width(n);
    std::vector<Scalar> row;
    row.reserve(static_cast<std::size_t>(w) + 1);
    for (long k = 0; k <= w; ++k) row.push_back(inverse_by_determinant(direct, n, k));
    rows.push_back(std::move(row));
  }
  return TriangularKernel(direct.m(), std::move(rows));
}

TriangularKernel inverse_by_recurrence(const LambdaRecursiveSpec& spec, long n_max) {
  if (!spec.h_is_k_free()) {
    throw Error(ErrorCode::HDependsOnK,
                "the inverse-kernel recurrence needs an auxiliary factor independent of k");
  }
  if (n_max < 0) throw Error(ErrorCode::BadDimension, "n_max must be non-negative");
  const long m = spec.m();

  std::vector<Scalar> boundary;
  std::vector<Scalar> p(static_cast<std::size_t>(n_max) + 1);
  std::vector<Scalar> h_over_p(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) {
    boundary.push_back(boundary_value(spec, n));
    if (boundary.back().is_zero()) {
      throw Error(ErrorCode::NotAdmissible,
                  "leading coefficient lambda1(" + std::to_string(n) + ",0) is zero", n);
    }
    if (n >= m) {
      const auto i = static_cast<std::size_t>(n);
      p[i] = spec.p_at(n);
      if (p[i].is_zero()) {
        throw Error(ErrorCode::PrincipalFactorZero, "p_" + std::to_string(n) + " is zero", n);
      }
      h_over_p[i] = spec.h_at(n, 0) / p[i];
    }
  }

  std::vector<std::vector<Scalar>> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  auto prev = [&rows, m](long n, long k) -> Scalar {
    if (n < 0 || k < 0 || k > support_width(m, n)) return {};
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  };

  for (long n = 0; n <= n_max; ++n) {
    const long w = support_width(m, n);
    std::vector<Scalar> row(static_cast<std::size_t>(w) + 1);
    row[0] = boundary[static_cast<std::size_t>(n)].inverse();
    for (long k = 1; k <= w; ++k) {
      const long t = n - k * m;
      const long s = n - (k - 1) * m;
      Scalar value = h_over_p[static_cast<std::size_t>(s)] * prev(n - 1, k - 1);
      if (t >= m) {
        value += prev(n - 1, k) / p[static_cast<std::size_t>(t)];
      } else if (t >= 1) {
        value += boundary[static_cast<std::size_t>(t - 1)] / boundary[static_cast<std::size_t>(t)] *
                 prev(n - 1, k);
      }
      row[static_cast<std::size_t>(k)] = std::move(value);
    }
    rows.push_back(std::move(row));
  }
  return TriangularKernel(m, std::move(rows));
}

Scalar orthogonality_sum(const TriangularKernel& direct, const TriangularKernel& inverse, long n, long k) {
  if (direct.m() != inverse.m()) throw Error(ErrorCode::OrderMismatch, "kernels have different orders");
  const long m = direct.m();
  Scalar acc;
  for (long b = 0; b <= k; ++b) acc += inverse.at(n, b) * direct.at(n - m * b, k - b);
  return acc;
}

bool verify_inversion(const TriangularKernel& direct, const TriangularKernel& inverse, long n) {
  if (direct.m() != inverse.m()) {
    throw Error(ErrorCode::OrderMismatch, "direct kernel has order " + std::to_string(direct.m()) +
                                              ", inverse has order " + std::to_string(inverse.m()));
  }
  const long m = direct.m();
  Polynomial sum;
  for (long b = 0; b <= support_width(m, n); ++b) {
    sum.add_scaled(family_polynomial(direct, n - m * b), inverse.at(n, b));
  }
  return sum == Polynomial::monomial(n);
}

Scalar det_recurrence_rhs(const LambdaRecursiveSpec& spec, const TriangularKernel& direct, long n, long k) {
  if (!spec.h_is_k_free()) {
    throw Error(ErrorCode::HDependsOnK, "the determinant recurrence needs h independent of k");
  }
  const long m = spec.m();
  if (n < m || k < 1 || k > support_width(m, n)) {
    throw Error(ErrorCode::BadDimension, "determinant recurrence needs n >= m and 1 <= k <= w(n)", n, k);
  }
  Scalar p_partial(1);  // prod_{j=1}^{k-1} p_{n-(j-1)m}
  for (long j = 1; j <= k - 1; ++j) p_partial *= spec.p_at(n - (j - 1) * m);
  const Scalar p_full = p_partial * spec.p_at(n - (k - 1) * m);

  const Scalar det_same = hessenberg_det(build_expansion_matrix(direct, n - 1, k));
  const Scalar det_smaller = k == 1 ? Scalar(1) : hessenberg_det(build_expansion_matrix(direct, n - 1, k - 1));
  return p_full * det_same -
         p_partial * spec.h_at(n - (k - 1) * m, 0) * direct.at(n - k * m, 0) * det_smaller;
}

ClassKernel inverse_class_view(const TriangularKernel& inverse, long r) {
  const long m = inverse.m();
  if (r < 0 || r >= m) {
    throw Error(ErrorCode::BadDimension, "residue must satisfy 0 <= r < " + std::to_string(m));
  }
  std::vector<std::vector<Scalar>> rows;
  for (long k = 0; m * k + r <= inverse.n_max(); ++k) {
    rows.push_back(inverse.row(m * k + r));
  }
  return ClassKernel(r, std::move(rows));
}

}  // namespace trikernel
