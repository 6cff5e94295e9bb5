#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace negmono {

enum class ErrorKind {
  NotNormalized,
  NotNormalizable,
  DimensionMismatch,
  NotHermitian,
  NotDensityMatrix,
  UnknownName,
  Unreachable,
  InvalidArgument,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI, the tests) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotNormalizable: return "NotNormalizable";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotDensityMatrix: return "NotDensityMatrix";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace negmono
