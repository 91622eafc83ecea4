#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nblab {

enum class ErrorKind {
  InvalidArgument,
  SingularMatrix,
  NotPositiveDefinite,
  NotUnitCircle,
  PoleAtOne,
  PoleHit,
  NotConverged,
  SeriesBudgetExceeded,
  BudgetExceeded,
  IllConditioned,
  MalformedLine,
  NotAscending,
  DomainError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `detail` carries the numeric payload
/// some kinds need (line number for table parsing, for instance).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, long detail = 0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  long detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  long detail_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::NotUnitCircle: return "NotUnitCircle";
    case ErrorKind::PoleAtOne: return "PoleAtOne";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::SeriesBudgetExceeded: return "SeriesBudgetExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::NotAscending: return "NotAscending";
    case ErrorKind::DomainError: return "DomainError";
  }
  return "Unknown";
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorKind::InvalidArgument, message);
}

}  // namespace nblab
