#pragma once

#include <stdexcept>
#include <string>

namespace gk {

/// Machine-readable error categories. The CLI prints the name in its error JSON.
enum class ErrorCode {
  UnknownBuiltin,
  MalformedSpec,
  BadParameter,
  LetterNotInGraph,
  GraphMismatch,
  NotSpherical,
  EnumerationBudgetExceeded,
  MixedSignRoot,
  ReversingDiverged,
  UndecidableWithinBudget,
  BudgetExceeded,
  OutOfRange,
  MissingGraphAsset,
  RankMismatch,
  NotAHomomorphism,
  NotSmallType,
  HasTriangle,
  RelationViolated,
  NoSolutionFound,
  ConstantPolynomial,
  DegreeTooLow,
  InternalError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }
  const char* name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace gk
