#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace telegme {

enum class ErrorKind {
  NotNormalized,
  DimensionMismatch,
  EmptyKeepSet,
  IndexOutOfRange,
  NotUnitary,
  NumericalFailure,
  CkwInconsistency,
  NegativeTangle,
  ParameterOutOfRange,
  InvalidArgument,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyKeepSet: return "EmptyKeepSet";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::CkwInconsistency: return "CkwInconsistency";
    case ErrorKind::NegativeTangle: return "NegativeTangle";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// All library failures are reported through this exception; `kind()` lets
/// callers (and tests) branch on the failure class without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace telegme
