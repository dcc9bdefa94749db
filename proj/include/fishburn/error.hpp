#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fishburn {

enum class ErrorCode {
  NotAPermutation,
  EmptyInput,
  InvalidSpec,
  Overflow,
  NonIntegerResult,
  Not321Avoider,
  MalformedPath,
  NoReturn,
  DomainViolation,
  NonTermination,
  PostconditionViolated,
  UnknownMap,
  UnknownClaim,
  UnknownTable,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::Not321Avoider: return "Not321Avoider";
    case ErrorCode::MalformedPath: return "MalformedPath";
    case ErrorCode::NoReturn: return "NoReturn";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::PostconditionViolated: return "PostconditionViolated";
    case ErrorCode::UnknownMap: return "UnknownMap";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::UnknownTable: return "UnknownTable";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fishburn
