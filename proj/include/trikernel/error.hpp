#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trikernel {

enum class ErrorCode {
  ZeroNotInvertible,
  ParseError,
  UnknownVariable,
  DivisionByZero,
  ExprUndefined,
  RowNotBuilt,
  PIsKFree,
  BadInitialLength,
  NotAdmissible,
  BadDimension,
  HDependsOnK,
  PrincipalFactorZero,
  OrderMismatch,
  DegreeExceedsBuild,
  UnknownFamily,
  NoRecurrenceData,
  Io,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every domain failure in the library is reported through this type. The
/// optional index pair carries the (n, k) position an error refers to, e.g.
/// the first non-admissible row or the point where an expression is undefined.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<long> n = std::nullopt,
        std::optional<long> k = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<long> n() const noexcept { return n_; }
  std::optional<long> k() const noexcept { return k_; }

 private:
  ErrorCode code_;
  std::optional<long> n_;
  std::optional<long> k_;
};

/// Parse failure with the byte offset into the source text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message,
             ErrorCode code = ErrorCode::ParseError);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace trikernel
