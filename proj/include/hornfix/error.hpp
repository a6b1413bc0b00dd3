#pragma once

#include <stdexcept>
#include <string>

namespace hornfix {

enum class ErrorCode {
  InvalidArgument,
  ArityMismatch,
  BadPermutation,
  ConstantOutsideSubset,
  MissingSymbol,
  BudgetExceeded,
  DepthTooLarge,
  NotSaturated,
  NotInvariant,
  MalformedLength,
  GoalNotZeroAry,
  UnsupportedLiteral,
  NotABinaryTree,
  StructuralViolation,
  Io,
};

const char* to_string(ErrorCode code);

// Raised for contract violations of library operations. Parse and validation
// problems are reported as Diagnostic lists instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hornfix
