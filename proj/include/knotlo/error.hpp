#pragma once

#include <stdexcept>
#include <string>

namespace knotlo {

enum class ErrorCode {
  OutOfFamily,
  ParseError,
  InvalidArgument,
  ZeroDenominator,
  NotNormalized,
  ConstructionFailed,
  InternalCheckFailed,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfFamily: return "OutOfFamily";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "Unknown";
}

/// Process exit code used by the CLI for each error kind.
inline int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfFamily: return 2;
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument: return 3;
    case ErrorCode::ConstructionFailed:
    case ErrorCode::InternalCheckFailed: return 4;
    default: return 1;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void check_internal(bool condition, const std::string& what) {
  if (!condition) fail(ErrorCode::InternalCheckFailed, what);
}

}  // namespace knotlo
