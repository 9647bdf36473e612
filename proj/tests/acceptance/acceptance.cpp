// Acceptance suite: one line per criterion, exact comparisons only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "../support/random.hpp"
#include "trikernel/basis_change.hpp"
#include "trikernel/catalog.hpp"
#include "trikernel/inversion.hpp"
#include "trikernel/spec_io.hpp"

using namespace trikernel;
using namespace trikernel::testing;

namespace {

/// Collects the first few failure descriptions of one criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) messages_.push_back(what);
  }

  bool ok() const { return failures_ == 0; }
  long checks() const { return checks_; }
  std::string summary() const {
    std::string out = std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed";
    for (const auto& m : messages_) out += "; " + m;
    return out;
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::vector<std::string> messages_;
};

std::string at(long n, long k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

void compare_tables(Tally& t, const TriangularKernel& a, const TriangularKernel& b, const std::string& label) {
  t.expect(a.n_max() == b.n_max(), label + ": sizes differ");
  for (long n = 0; n <= std::min(a.n_max(), b.n_max()); ++n) {
    for (long k = 0; k <= a.width(n); ++k) t.expect(a.at(n, k) == b.at(n, k), label + " at " + at(n, k));
  }
}

void criterion_1(Tally& t) {
  const FamilyDefinition family = load_family(read_text_file(std::string(TRIKERNEL_DATA_DIR) + "/paper-example.json"));
  const TriangularKernel direct = family.direct_kernel(6);
  const TriangularKernel inverse = inverse_by_orthogonality(direct, 6);
  t.expect(inverse.row(6) == qs({"1", "3", "-1", "4", "26", "25", "-40/7"}), "lambda3 row 6");
  t.expect(verify_inversion(direct, inverse, 6), "verify_inversion at n=6");
  Polynomial sum;
  for (long b = 0; b <= 6; ++b) sum.add_scaled(family_polynomial(direct, 6 - b), inverse.at(6, b));
  t.expect(sum == Polynomial::monomial(6), "sum of lambda3(6,b) f_(6-b) is x^6");
}

void criterion_2(Tally& t) {
  for (const std::string& name : k_free_names()) {
    const auto& spec = catalog::get(name).spec;
    const TriangularKernel direct = build_direct_kernel(spec, 32);
    const TriangularKernel orth = inverse_by_orthogonality(direct, 32);
    compare_tables(t, orth, inverse_table_by_determinant(direct, 32), name + " orthogonality vs determinant");
    compare_tables(t, orth, inverse_by_recurrence(spec, 32), name + " orthogonality vs recurrence");
  }
}

void criterion_3(Tally& t) {
  const auto& spec = catalog::get("laguerre").spec;
  const TriangularKernel direct = build_direct_kernel(spec, 24);
  compare_tables(t, inverse_by_orthogonality(direct, 24), inverse_table_by_determinant(direct, 24),
                 "laguerre orthogonality vs determinant");
  const auto refusal = capture_error([&] { (void)inverse_by_recurrence(spec, 24); });
  t.expect(refusal.has_value() && refusal->code() == ErrorCode::HDependsOnK, "recurrence refuses with HDependsOnK");
}

void criterion_4(Tally& t) {
  for (const char* name : {"chebyshev-t", "legendre"}) {
    const auto& spec = catalog::get(name).spec;
    const long m = spec.m();
    const TriangularKernel direct = build_direct_kernel(spec, 24);
    for (long n = m; n <= 24; ++n) {
      for (long k = 1; k <= n / m; ++k) {
        t.expect(hessenberg_det(build_expansion_matrix(direct, n, k)) == det_recurrence_rhs(spec, direct, n, k),
                 std::string(name) + " determinant recurrence at " + at(n, k));
      }
    }
    for (long n = 2; n <= 24; n += 2) {
      t.expect(hessenberg_det(build_expansion_matrix(direct, n - 1, n / m)).is_zero(),
               std::string(name) + " |M(n-1, w(n))| = 0 at n=" + std::to_string(n));
    }
  }
}

void criterion_5(Tally& t) {
  for (const auto& entry : catalog::list()) {
    const TriangularKernel direct = build_direct_kernel(entry.spec, 64);
    for (long n = 0; n <= 64; ++n) {
      t.expect(boundary_value(entry.spec, n) == direct.at(n, 0), entry.name + " boundary at n=" + std::to_string(n));
    }
  }
}

void criterion_6(Tally& t) {
  const auto& u_spec = catalog::get("chebyshev-u").spec;
  const auto& t_spec = catalog::get("chebyshev-t").spec;
  const TriangularKernel u = build_direct_kernel(u_spec, 20);
  const TriangularKernel tk = build_direct_kernel(t_spec, 20);
  const ChangeTable conv = change_by_convolution(u, inverse_by_orthogonality(tk, 20), 20);
  for (long n = 0; n <= 20; ++n) {
    Polynomial sum;
    for (long k = 0; k <= n / 2; ++k) sum.add_scaled(family_polynomial(tk, n - 2 * k), conv.at(n, k));
    t.expect(sum == family_polynomial(u, n), "U_n reconstruction at n=" + std::to_string(n));
  }
  const ChangeTable rec = change_by_recurrence(u_spec, t_spec, 20);
  compare_tables(t, rec.table(), conv.table(), "recurrence vs convolution");
  const ChangeTable y = change_by_recurrence(u_spec, t_spec, 20, Direction::GToF);
  for (long n = 0; n <= 20; ++n) {
    for (long j = 0; j <= n / 2; ++j) {
      Scalar sum;
      for (long k = 0; k <= j; ++k) sum += conv.at(n, k) * y.at(n - 2 * k, j - k);
      t.expect(sum == Scalar(j == 0 ? 1 : 0), "round trip at " + at(n, j));
    }
  }
}

void check_cross(Tally& t, const TriangularKernel& f, const TriangularKernel& g, const std::string& label) {
  const TriangularKernel g3 = inverse_by_orthogonality(g, 18);
  const long d = std::gcd(f.m(), g.m());
  for (long n = 0; n <= 18; ++n) {
    const CrossOrderTable z = change_cross_order(f, g3, n);
    Polynomial sum;
    for (long r = 0; r <= n; ++r) {
      sum.add_scaled(family_polynomial(g, r), z.at(r));
      if ((n - r) % d != 0) t.expect(z.at(r).is_zero(), label + " forced zero at n=" + std::to_string(n));
    }
    t.expect(sum == family_polynomial(f, n), label + " reconstruction at n=" + std::to_string(n));
  }
}

void criterion_7(Tally& t) {
  check_cross(t, catalog_kernel("chebyshev-t", 18), catalog_kernel("laguerre", 18), "chebyshev-t -> laguerre");
  check_cross(t, catalog_kernel("laguerre", 18), catalog_kernel("legendre", 18), "laguerre -> legendre");
  const LambdaRecursiveSpec order3 = load_spec(read_text_file(std::string(TRIKERNEL_DATA_DIR) + "/order3.json"));
  check_cross(t, build_direct_kernel(order3, 18), catalog_kernel("hermite-he", 18), "order3 -> hermite-he");
  Rng rng(7007);
  for (const auto& [m1, m2] : std::vector<std::pair<long, long>>{{2, 1}, {1, 2}, {3, 2}}) {
    for (int trial = 0; trial < 3; ++trial) {
      check_cross(t, rng.admissible_kernel(m1, 18), rng.admissible_kernel(m2, 18, trial == 1),
                  "random (" + std::to_string(m1) + "," + std::to_string(m2) + ")");
    }
  }
  // The listed pairs are coprime, so the congruence is also exercised where gcd = 2.
  for (const auto& [m1, m2] : std::vector<std::pair<long, long>>{{2, 4}, {4, 2}, {2, 2}}) {
    check_cross(t, rng.admissible_kernel(m1, 18), rng.admissible_kernel(m2, 18),
                "random (" + std::to_string(m1) + "," + std::to_string(m2) + ")");
  }
}

void criterion_8(Tally& t) {
  Rng rng(8008);
  for (const std::string& name : admissible_names()) {
    const TriangularKernel direct = catalog_kernel(name, 16);
    const TriangularKernel inverse = inverse_by_orthogonality(direct, 16);
    for (int i = 0; i < 50; ++i) {
      const Polynomial p = rng.polynomial(16);
      t.expect(combine_in_basis(expand_in_basis(p, direct, inverse), direct) == p,
               name + " expansion of " + p.to_string());
    }
  }
}

void criterion_9(Tally& t) {
  Rng rng(9009);
  // Reindexation identities as finite sums over random arrays.
  for (int trial = 0; trial < 100; ++trial) {
    const long u = rng.integer(0, 12);
    const long m = rng.integer(1, 5);
    std::vector<std::vector<Scalar>> a(static_cast<std::size_t>(u) + 1, std::vector<Scalar>(static_cast<std::size_t>(u) + 1));
    for (auto& row : a) {
      for (auto& v : row) v = rng.rational(30, 7);
    }
    auto a_at = [&](long j, long k) { return a[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]; };
    Scalar conv_lhs;
    Scalar conv_rhs;
    for (long k = 0; k <= u; ++k) {
      for (long b = 0; b <= k; ++b) conv_lhs += a_at(b, k);
    }
    for (long b = 0; b <= u; ++b) {
      for (long c = 0; c <= u - b; ++c) conv_rhs += a_at(b, b + c);
    }
    t.expect(conv_lhs == conv_rhs, "convolution-type reindexation, trial " + std::to_string(trial));
    Scalar bracket;
    Scalar by_column;
    Scalar by_row;
    for (long k = 0; k <= u; ++k) {
      for (long j = 0; j <= k; ++j) {
        if ((k - j) % m == 0) bracket += a_at(j, k);
      }
      for (long s = 0; s <= k / m; ++s) by_column += a_at(k - m * s, k);
    }
    for (long j = 0; j <= u; ++j) {
      for (long s = 0; s <= (u - j) / m; ++s) by_row += a_at(j, j + m * s);
    }
    t.expect(bracket == by_column && by_column == by_row, "residue-class reindexation, trial " + std::to_string(trial));
  }

  // Uniqueness: perturbing any single lambda3 entry breaks the inversion.
  for (long m = 1; m <= 3; ++m) {
    const TriangularKernel direct = rng.admissible_kernel(m, 10);
    const TriangularKernel inverse = inverse_by_orthogonality(direct, 10);
    for (long n = 0; n <= 10; ++n) {
      for (long k = 0; k <= n / m; ++k) {
        auto rows = inverse.rows();
        rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] += rng.nonzero_rational(3, 3);
        t.expect(!verify_inversion(direct, TriangularKernel(m, rows), n), "perturbation survived at " + at(n, k));
      }
    }
  }

  // Residue-class decomposition of every catalog family through n = 20.
  for (const auto& entry : catalog::list()) {
    const auto& spec = entry.spec;
    const long m = spec.m();
    const TriangularKernel direct = build_direct_kernel(spec, 20);
    std::vector<ClassKernel> classes;
    for (long r = 0; r < m; ++r) classes.push_back(class_view(direct, r));
    for (long r = 0; r < m; ++r) {
      const ClassKernel& cls = classes[static_cast<std::size_t>(r)];
      for (long k = 0; m * k + r <= 20; ++k) {
        const long n = m * k + r;
        Polynomial classwise;
        for (long s = 0; s <= k; ++s) classwise.add_scaled(Polynomial::monomial(r + m * s), cls.at(k, s));
        t.expect(classwise == family_polynomial(direct, n), entry.name + " classwise expansion at n=" + std::to_string(n));
        if (k == 0) continue;
        for (long s = 0; s <= k; ++s) {
          const Scalar lower = r >= 1 ? classes[static_cast<std::size_t>(r - 1)].at(k, s)
                                      : classes[static_cast<std::size_t>(m - 1)].at(k - 1, s - 1);
          Scalar rhs = spec.p_at(n) * lower;
          if (k - s >= 1) rhs -= spec.h_at(n, k - s) * cls.at(k - 1, s);
          t.expect(cls.at(k, s) == rhs, entry.name + " class recurrence at " + at(n, s));
        }
      }
    }
    if (!entry.admissible) continue;
    const TriangularKernel inverse = inverse_by_orthogonality(direct, 20);
    for (long r = 0; r < m; ++r) {
      const ClassKernel d = classes[static_cast<std::size_t>(r)];
      const ClassKernel i = inverse_class_view(inverse, r);
      for (long k = 0; m * k + r <= 20; ++k) {
        for (long j = 1; j <= k; ++j) {
          Scalar sum;
          for (long s = 0; s <= j; ++s) sum += i.at(k, s) * d.at(k - s, k - j);
          t.expect(sum.is_zero(), entry.name + " classwise orthogonality at " + at(m * k + r, j));
        }
        Polynomial rebuilt;
        for (long s = 0; s <= k; ++s) rebuilt.add_scaled(family_polynomial(direct, m * (k - s) + r), i.at(k, s));
        t.expect(rebuilt == Polynomial::monomial(m * k + r), entry.name + " classwise inversion at n=" + std::to_string(m * k + r));
      }
    }
  }
}

void criterion_10(Tally& t) {
  Rng rng(1010);
  for (int i = 0; i < 200; ++i) {
    const auto dim = static_cast<std::size_t>(rng.integer(1, 7));
    const LowerHessenberg m = rng.hessenberg(dim);
    std::vector<std::vector<mpq_class>> dense(dim, std::vector<mpq_class>(dim));
    for (std::size_t r = 1; r <= dim; ++r) {
      for (std::size_t c = 1; c <= dim; ++c) dense[r - 1][c - 1] = m.at(r, c).raw();
    }
    t.expect(hessenberg_det(m).raw() == oracle::cofactor_det(dense), "matrix " + std::to_string(i));
  }
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0 for no stated bound
  std::function<void(Tally&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked example: lambda3 row 6 and x^6 reconstruction", 1.0, criterion_1},
      {2, "three-method agreement on k-free catalog families, n <= 32", 30.0, criterion_2},
      {3, "laguerre: orthogonality = determinant, recurrence refused", 0.0, criterion_3},
      {4, "determinant recurrence and vanishing determinant, n <= 24", 0.0, criterion_4},
      {5, "boundary factorization for all catalog families, n <= 64", 0.0, criterion_5},
      {6, "change of basis U -> T: reconstruction, recurrence, round trip", 0.0, criterion_6},
      {7, "cross-order reconstruction and gcd congruence, n <= 18", 0.0, criterion_7},
      {8, "expansion coefficients reconstruct 50 random polynomials per family", 0.0, criterion_8},
      {9, "reindexation, uniqueness and residue-class identities", 0.0, criterion_9},
      {10, "hessenberg determinant against cofactor expansion, 200 matrices", 0.0, criterion_10},
  };

  int failed = 0;
  double total = 0;
  for (const Criterion& c : criteria) {
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body(tally);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += seconds;
    const bool in_budget = c.budget_seconds == 0.0 || seconds < c.budget_seconds;
    const bool pass = error.empty() && tally.ok() && in_budget;
    if (!pass) ++failed;
    std::printf("criterion %2d: %s  %s  [%ld checks, %.3f s]\n", c.id, pass ? "PASS" : "FAIL", c.title, tally.checks(),
                seconds);
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    if (!tally.ok()) std::printf("    %s\n", tally.summary().c_str());
    if (!in_budget) std::printf("    over the %.0f s budget\n", c.budget_seconds);
  }
  std::printf("%d of %zu criteria passed in %.3f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(), total);
  return failed == 0 ? 0 : 1;
}
