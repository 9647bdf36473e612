#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace trikernel {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// This is the coefficient domain of every kernel, table and polynomial in
/// the library. "Unit" means "nonzero": inverse() and division throw
/// ZeroNotInvertible on zero.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long numerator, long denominator);

  /// Accepts "p", "-p", "+p", "p/q" with q > 0; surrounding whitespace is
  /// ignored. Throws ParseError.
  static Scalar parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  Scalar inverse() const;

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    return a.value_ < b.value_;
  }

 private:
  explicit Scalar(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Free-function spellings used where the arithmetic reads like the math.
inline Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
inline Scalar inverse(const Scalar& a) { return a.inverse(); }

}  // namespace trikernel
