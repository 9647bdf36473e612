#include "trikernel/basis_change.hpp"

#include "trikernel/error.hpp"

namespace trikernel {

namespace {

void require_same_order(long a, long b) {
  if (a != b) {
    throw Error(ErrorCode::OrderMismatch,
                "families have different orders (m=" + std::to_string(a) + " vs m=" + std::to_string(b) + ")");
  }
}

void require_rows(const TriangularKernel& kernel, long n, const char* what) {
  if (n > kernel.n_max()) {
    throw Error(ErrorCode::RowNotBuilt,
                std::string(what) + " built through " + std::to_string(kernel.n_max()) + ", need " +
                    std::to_string(n),
                n);
  }
}

}  // namespace

ChangeTable change_by_convolution(const TriangularKernel& lambda1, const TriangularKernel& mu3, long n_max,
                                  Direction direction) {
  require_same_order(lambda1.m(), mu3.m());
  require_rows(lambda1, n_max, "direct kernel");
  require_rows(mu3, n_max, "inverse kernel");
  const long m = lambda1.m();
  std::vector<std::vector<Scalar>> rows;
  for (long n = 0; n <= n_max; ++n) {
    const long w = support_width(m, n);
    std::vector<Scalar> row(static_cast<std::size_t>(w) + 1);
    for (long k = 0; k <= w; ++k) {
      Scalar acc;
      for (long b = 0; b <= k; ++b) acc += lambda1.at(n, b) * mu3.at(n - m * b, k - b);
      row[static_cast<std::size_t>(k)] = std::move(acc);
    }
    rows.push_back(std::move(row));
  }
  return ChangeTable(TriangularKernel(m, std::move(rows)), direction);
}

ChangeTable change_by_recurrence(const LambdaRecursiveSpec& spec_f, const LambdaRecursiveSpec& spec_g,
                                 long n_max, Direction direction) {
  if (direction == Direction::GToF) {
    ChangeTable swapped = change_by_recurrence(spec_g, spec_f, n_max, Direction::FToG);
    return ChangeTable(swapped.table(), Direction::GToF);
  }
  require_same_order(spec_f.m(), spec_g.m());
  if (!spec_f.h_is_k_free() || !spec_g.h_is_k_free()) {
    throw Error(ErrorCode::HDependsOnK,
                "the change-of-basis recurrence needs both auxiliary factors independent of k");
  }
  if (n_max < 0) throw Error(ErrorCode::BadDimension, "n_max must be non-negative");
  const long m = spec_f.m();

  // Boundary columns of both families, principal factors of f, and the
  // g-side ratios 1/p and h/p.
  std::vector<Scalar> lead_f;
  std::vector<Scalar> lead_g;
  std::vector<Scalar> p_f(static_cast<std::size_t>(n_max) + 1);
  std::vector<Scalar> h_f(static_cast<std::size_t>(n_max) + 1);
  std::vector<Scalar> inv_p_g(static_cast<std::size_t>(n_max) + 1);
  std::vector<Scalar> h_over_p_g(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    lead_f.push_back(boundary_value(spec_f, n));
    lead_g.push_back(boundary_value(spec_g, n));
    if (lead_f[i].is_zero() || lead_g[i].is_zero()) {
      throw Error(ErrorCode::NotAdmissible,
                  std::string("leading coefficient of ") + (lead_f[i].is_zero() ? "f_" : "g_") +
                      std::to_string(n) + " is zero",
                  n);
    }
    if (n >= m) {
      p_f[i] = spec_f.p_at(n);
      h_f[i] = spec_f.h_at(n, 0);
      const Scalar p_g = spec_g.p_at(n);
      if (p_g.is_zero()) {
        throw Error(ErrorCode::PrincipalFactorZero, "p_" + std::to_string(n) + " of g is zero", n);
      }
      inv_p_g[i] = p_g.inverse();
      h_over_p_g[i] = spec_g.h_at(n, 0) * inv_p_g[i];
    }
  }

  std::vector<std::vector<Scalar>> rows;
  auto z = [&rows, m](long n, long k) -> Scalar {
    if (n < 0 || k < 0 || k > support_width(m, n)) return {};
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  };

  for (long n = 0; n <= n_max; ++n) {
    const long w = support_width(m, n);
    const auto i = static_cast<std::size_t>(n);
    std::vector<Scalar> row(static_cast<std::size_t>(w) + 1);
    row[0] = lead_f[i] / lead_g[i];
    for (long k = 1; k <= w; ++k) {
      const long t = n - k * m;
      const long s = n - (k - 1) * m;
      Scalar a_mu;
      if (t >= m) {
        a_mu = inv_p_g[static_cast<std::size_t>(t)];
      } else if (t >= 1) {
        a_mu = lead_g[static_cast<std::size_t>(t - 1)] / lead_g[static_cast<std::size_t>(t)];
      }
      Scalar value = p_f[i] * a_mu * z(n - 1, k);
      value += p_f[i] * h_over_p_g[static_cast<std::size_t>(s)] * z(n - 1, k - 1);
      value -= h_f[i] * z(n - m, k - 1);
      row[static_cast<std::size_t>(k)] = std::move(value);
    }
    rows.push_back(std::move(row));
  }
  return ChangeTable(TriangularKernel(m, std::move(rows)), Direction::FToG);
}

CrossOrderTable change_cross_order(const TriangularKernel& lambda1, const TriangularKernel& mu3, long n) {
  if (n < 0) throw Error(ErrorCode::BadDimension, "n must be non-negative");
  require_rows(lambda1, n, "direct kernel");
  require_rows(mu3, n, "inverse kernel");
  const long m1 = lambda1.m();
  const long m2 = mu3.m();
  CrossOrderTable out{n, m1, m2, std::vector<Scalar>(static_cast<std::size_t>(n) + 1)};
  for (long r = 0; r <= n; ++r) {
    Scalar acc;
    for (long b = 0; b <= support_width(m1, n); ++b) {
      const long shifted = n - m1 * b;
      if (r > shifted || (shifted - r) % m2 != 0) continue;
      acc += lambda1.at(n, b) * mu3.at(shifted, (shifted - r) / m2);
    }
    out.values[static_cast<std::size_t>(r)] = std::move(acc);
  }
  return out;
}

std::vector<Scalar> expand_in_basis(const Polynomial& p, const TriangularKernel& direct,
                                    const TriangularKernel& inverse) {
  require_same_order(direct.m(), inverse.m());
  const long degree = p.degree();
  if (degree < 0) return {};
  if (degree > inverse.n_max() || degree > direct.n_max()) {
    throw Error(ErrorCode::DegreeExceedsBuild,
                "degree " + std::to_string(degree) + " exceeds kernels built through " +
                    std::to_string(std::min(inverse.n_max(), direct.n_max())),
                degree);
  }
  const long m = inverse.m();
  std::vector<Scalar> coords(static_cast<std::size_t>(degree) + 1);
  for (long r = 0; r <= degree; ++r) {
    Scalar acc;
    for (long t = 0; r + m * t <= degree; ++t) acc += p.coeff(r + m * t) * inverse.at(r + m * t, t);
    coords[static_cast<std::size_t>(r)] = std::move(acc);
  }
  return coords;
}

Polynomial combine_in_basis(const std::vector<Scalar>& coords, const TriangularKernel& direct) {
  Polynomial out;
  for (std::size_t r = 0; r < coords.size(); ++r) {
    if (coords[r].is_zero()) continue;
    out.add_scaled(family_polynomial(direct, static_cast<long>(r)), coords[r]);
  }
  return out;
}

}  // namespace trikernel
