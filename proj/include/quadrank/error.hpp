#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadrank {

enum class ErrorCode {
  DivisionByZeroPoly,
  ZeroPolynomial,
  WrongDegree,
  DegreeTooLarge,
  DegenerateLeading,
  SingularSurface,
  InvalidSurface,
  DegenerateD,
  NotCubic,
  SingularCubic,
  ZeroReduction,
  BadPrime,
  EmptyRange,
  ChecksumMismatch,
  InsufficientScan,
  BudgetExhausted,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; code() is stable and
// machine readable, what() is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace quadrank
