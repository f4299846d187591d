#include "eqrisk/error.hpp"

namespace eqrisk {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyId: return "EmptyId";
    case ErrorCode::NonPositiveVolume: return "NonPositiveVolume";
    case ErrorCode::NonPositiveCost: return "NonPositiveCost";
    case ErrorCode::NegativeRate: return "NegativeRate";
    case ErrorCode::NegativeDelay: return "NegativeDelay";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::EmptyProjectList: return "EmptyProjectList";
    case ErrorCode::NonPositiveBudget: return "NonPositiveBudget";
    case ErrorCode::NegativeTime: return "NegativeTime";
    case ErrorCode::NegativeRisk: return "NegativeRisk";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::MaxIterationsExceeded: return "MaxIterationsExceeded";
    case ErrorCode::ZeroAllocation: return "ZeroAllocation";
    case ErrorCode::AllocationOutOfRange: return "AllocationOutOfRange";
    case ErrorCode::FullyFundedNoSensitivity: return "FullyFundedNoSensitivity";
    case ErrorCode::EmptySweep: return "EmptySweep";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

ErrorCategory category(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyId:
    case ErrorCode::NonPositiveVolume:
    case ErrorCode::NonPositiveCost:
    case ErrorCode::NegativeRate:
    case ErrorCode::NegativeDelay:
    case ErrorCode::DuplicateId:
    case ErrorCode::EmptyProjectList:
    case ErrorCode::NonPositiveBudget:
      return ErrorCategory::Validation;
    case ErrorCode::SyntaxError:
      return ErrorCategory::Syntax;
    case ErrorCode::SchemaError:
      return ErrorCategory::Schema;
    case ErrorCode::IoError:
      return ErrorCategory::Io;
    default:
      return ErrorCategory::Domain;
  }
}

namespace {

std::string compose(ErrorCode code, const std::string& subject,
                    const std::string& detail) {
  std::string msg(to_string(code));
  if (!subject.empty()) msg += " (" + subject + ")";
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, std::string subject, const std::string& detail)
    : std::runtime_error(compose(code, subject, detail)),
      code_(code),
      subject_(std::move(subject)) {}

}  // namespace eqrisk
