#include "gds/error.hpp"

namespace gds {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kNotAnAncestor: return "NotAnAncestor";
    case ErrorCode::kNotAParent: return "NotAParent";
    case ErrorCode::kNotALeaf: return "NotALeaf";
    case ErrorCode::kInvalidTree: return "InvalidTree";
    case ErrorCode::kNotFine: return "NotFine";
    case ErrorCode::kInvalidWeighting: return "InvalidWeighting";
    case ErrorCode::kComparable: return "Comparable";
    case ErrorCode::kMTooSmall: return "MTooSmall";
    case ErrorCode::kHDividesG: return "HDividesG";
    case ErrorCode::kBoundExceeded: return "BoundExceeded";
    case ErrorCode::kNotAComb: return "NotAComb";
    case ErrorCode::kNonConstantOnComponent: return "NonConstantOnComponent";
    case ErrorCode::kLeadingCoefficientZero: return "LeadingCoefficientZero";
    case ErrorCode::kNonlinearInW: return "NonlinearInW";
    case ErrorCode::kDivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::kGcdViolation: return "GcdViolation";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace gds
