#include "trikernel/error.hpp"

namespace trikernel {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroNotInvertible: return "ZeroNotInvertible";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ExprUndefined: return "ExprUndefined";
    case ErrorCode::RowNotBuilt: return "RowNotBuilt";
    case ErrorCode::PIsKFree: return "PIsKFree";
    case ErrorCode::BadInitialLength: return "BadInitialLength";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::HDependsOnK: return "HDependsOnK";
    case ErrorCode::PrincipalFactorZero: return "PrincipalFactorZero";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::DegreeExceedsBuild: return "DegreeExceedsBuild";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::NoRecurrenceData: return "NoRecurrenceData";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<long> n,
             std::optional<long> k)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code),
      n_(n),
      k_(k) {}

ParseError::ParseError(std::size_t offset, const std::string& message,
                       ErrorCode code)
    : Error(code, message + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

}  // namespace trikernel
