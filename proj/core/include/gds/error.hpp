#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gds {

enum class ErrorCode {
  kNotDivisible,
  kUnknownNode,
  kNotAnAncestor,
  kNotAParent,
  kNotALeaf,
  kInvalidTree,
  kNotFine,
  kInvalidWeighting,
  kComparable,
  kMTooSmall,
  kHDividesG,
  kBoundExceeded,
  kNotAComb,
  kNonConstantOnComponent,
  kLeadingCoefficientZero,
  kNonlinearInW,
  kDivisibilityViolation,
  kGcdViolation,
  kUnknownVariable,
  kInvalidArgument,
  kParseError,
  kValidationError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; the code identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the tree DSL reader. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column,
             const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gds
