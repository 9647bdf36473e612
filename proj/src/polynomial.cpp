#include "trikernel/polynomial.hpp"

#include <algorithm>

namespace trikernel {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(long power, Scalar coeff) {
  std::vector<Scalar> c(static_cast<std::size_t>(power) + 1);
  c.back() = std::move(coeff);
  return Polynomial(std::move(c));
}

Scalar Polynomial::coeff(long power) const {
  if (power < 0 || power > degree()) return Scalar();
  return coeffs_[static_cast<std::size_t>(power)];
}

void Polynomial::add_scaled(const Polynomial& other, const Scalar& scale, long shift) {
  if (other.is_zero() || scale.is_zero()) return;
  const std::size_t need = other.coeffs_.size() + static_cast<std::size_t>(shift);
  if (coeffs_.size() < need) coeffs_.resize(need);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i + static_cast<std::size_t>(shift)] += other.coeffs_[i] * scale;
  }
  trim();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  add_scaled(rhs, Scalar(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  add_scaled(rhs, Scalar(-1));
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    out.add_scaled(b, a.coeffs_[i], static_cast<long>(i));
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long a = degree(); a >= 0; --a) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(a)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Scalar mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == Scalar(1);
    if (!unit || a == 0) out += mag.to_string();
    if (a >= 1) out += "x";
    if (a >= 2) out += "^" + std::to_string(a);
  }
  return out;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

}  // namespace trikernel
