#include "garside_kit/errors.hpp"

#include <cstdlib>
#include <string>

#include "garside_kit/budget.hpp"

namespace gk {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorCode::MalformedSpec: return "MalformedSpec";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::LetterNotInGraph: return "LetterNotInGraph";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::NotSpherical: return "NotSpherical";
    case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::MixedSignRoot: return "MixedSignRoot";
    case ErrorCode::ReversingDiverged: return "ReversingDiverged";
    case ErrorCode::UndecidableWithinBudget: return "UndecidableWithinBudget";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::MissingGraphAsset: return "MissingGraphAsset";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::NotSmallType: return "NotSmallType";
    case ErrorCode::HasTriangle: return "HasTriangle";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::NoSolutionFound: return "NoSolutionFound";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "InternalError";
}

Budgets& default_budgets() {
  static Budgets b = [] {
    Budgets init;
    if (const char* env = std::getenv("GARSIDE_KIT_BUDGET")) {
      try {
        init.enumeration = std::stoull(env);
      } catch (...) {
      }
    }
    return init;
  }();
  return b;
}

}  // namespace gk
