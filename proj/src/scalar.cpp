#include "trikernel/scalar.hpp"

#include <cctype>
#include <ostream>

#include "trikernel/error.hpp"

namespace trikernel {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::ZeroNotInvertible, "zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin == end) throw ParseError(begin, "empty scalar");

  std::size_t pos = begin;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::string_view body = text.substr(pos, end - pos);
  const std::size_t slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  if (!all_digits(num)) {
    throw ParseError(pos, "expected digits in scalar '" + std::string(text) + "'");
  }
  mpz_class numerator(std::string(num), 10);
  mpz_class denominator = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den = body.substr(slash + 1);
    if (!all_digits(den)) {
      throw ParseError(pos + slash + 1, "expected denominator digits in scalar '" +
                                            std::string(text) + "'");
    }
    denominator = mpz_class(std::string(den), 10);
    if (denominator == 0) {
      throw ParseError(pos + slash + 1, "zero denominator in scalar '" + std::string(text) + "'");
    }
  }
  if (negative) numerator = -numerator;
  mpq_class q(numerator, denominator);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroNotInvertible, "0 has no inverse");
  return Scalar(mpq_class(1) / value_);
}

std::string Scalar::to_string() const { return value_.get_str(10); }

Scalar& Scalar::operator+=(const Scalar& rhs) {
  value_ += rhs.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::ZeroNotInvertible, "division by 0");
  value_ /= rhs.value_;
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace trikernel
