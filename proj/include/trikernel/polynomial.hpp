#pragma once

#include <string>
#include <vector>

#include "trikernel/scalar.hpp"

namespace trikernel {

/// Dense univariate polynomial, coefficient i multiplies x^i. Trailing zeros
/// are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);

  static Polynomial monomial(long power, Scalar coeff = Scalar(1));

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^power, zero beyond the stored range.
  Scalar coeff(long power) const;

  /// this += scale * x^shift * other
  void add_scaled(const Polynomial& other, const Scalar& scale, long shift = 0);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human-readable, highest power first, e.g. "8x^4 - 8x^2 + 1".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Scalar> coeffs_;
};

}  // namespace trikernel
