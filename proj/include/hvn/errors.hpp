#pragma once

#include <stdexcept>
#include <string>

namespace hvn {

// Every contract violation surfaces as an Error with a stable kind.
// Kind::Internal marks conditions that indicate a bug in this library
// rather than bad input; they are asserted, never silently repaired.
enum class ErrorKind {
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotNormal,
  NotAbelian,
  NotMinimal,
  NotErgodic,
  NotEquivariant,
  NotSurjective,
  NotRational,
  RelationViolation,
  CapExceeded,
  GroupMismatch,
  Parse,
  Usage,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

// Internal consistency assertion; failures are bugs, not input errors.
inline void require_internal(bool condition, const std::string& message) {
  if (!condition) fail(ErrorKind::Internal, "internal invariant violated: " + message);
}

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::NotErgodic: return "NotErgodic";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::RelationViolation: return "RelationViolation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace hvn
