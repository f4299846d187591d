#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqrisk {

enum class ErrorCode {
  // instance validation
  EmptyId,
  NonPositiveVolume,
  NonPositiveCost,
  NegativeRate,
  NegativeDelay,
  DuplicateId,
  EmptyProjectList,
  NonPositiveBudget,
  // numerical operations
  NegativeTime,
  NegativeRisk,
  SizeMismatch,
  InvalidConfig,
  MaxIterationsExceeded,
  ZeroAllocation,
  AllocationOutOfRange,
  FullyFundedNoSensitivity,
  EmptySweep,
  // document parsing
  SyntaxError,
  SchemaError,
  // files
  IoError,
};

enum class ErrorCategory { Validation, Domain, Syntax, Schema, Io };

std::string_view to_string(ErrorCode code) noexcept;
ErrorCategory category(ErrorCode code) noexcept;

/// Error raised by every eqrisk operation. `subject` names the offending
/// project id, field path, or file, and may be empty.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string subject, const std::string& detail = {});

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return eqrisk::category(code_); }
  const std::string& subject() const noexcept { return subject_; }

 private:
  ErrorCode code_;
  std::string subject_;
};

}  // namespace eqrisk
