#pragma once

#include <stdexcept>
#include <string>

namespace tdecomp {

enum class ErrorCode {
  MissingPair,
  ConflictingPair,
  SelfArc,
  VertexOutOfRange,
  NotIndecomposable,
  CoreNotIndecomposable,
  CoreTooSmall,
  NotTransitive,
  BadSize,
  BadParameters,
  InfeasibleSpec,
  AmbiguousSpec,
  NotFamilyT,
  NoEligibleVertex,
  BudgetExceeded,
  ParseError,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// the C API and the CLI can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tdecomp
