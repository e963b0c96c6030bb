#pragma once

#include <map>
#include <optional>
#include <vector>

#include "garside_kit/budget.hpp"
#include "garside_kit/garside.hpp"

namespace gk {

/// Initial factor tau^p(a_1); identity when the canonical length is 0.
Simple initial_factor(const GarsideStructure& G, const GarsideElement& a);
/// Final factor a_r; identity when the canonical length is 0.
Simple final_factor(const GarsideStructure& G, const GarsideElement& a);

/// pi(a) = i(a) ^_L d_R(t(a)). Also computes i(a) ^_L i(a^-1) and throws
/// InternalError if the two disagree. Identity for pure Delta powers.
Simple preferred_prefix(const GarsideStructure& G, const GarsideElement& a);

/// S(a) = pi(a)^-1 a pi(a).
GarsideElement cyclic_sliding(const GarsideStructure& G, const GarsideElement& a);

/// a belongs to its own sliding circuit: S^m(a) = a for some m >= 1.
bool in_sliding_circuits(const GarsideStructure& G, const GarsideElement& a);

struct SlidingCircuitSet {
  GarsideElement start;                 // the input
  GarsideElement representative;       // first element of SC reached by sliding
  GarsideElement to_representative;    // c with c^-1 start c = representative
  /// Every element of SC(start) with a conjugator g from the representative:
  /// g^-1 representative g = element.
  std::map<GarsideElement, GarsideElement> members;
};

/// Stage 1 (slide into SC) plus stage 2 (close under conjugation by simples).
/// Throws BudgetExceeded when |SC| passes budgets.sliding_circuits.
SlidingCircuitSet sliding_circuits(const GarsideStructure& G, const GarsideElement& a,
                                   const Budgets& budgets = default_budgets());

struct ConjugacyResult {
  bool conjugate = false;
  std::optional<GarsideElement> witness;  // g with g^-1 a g = b, verified
};

ConjugacyResult conjugacy_test(const GarsideStructure& G, const GarsideElement& a, const GarsideElement& b,
                               const Budgets& budgets = default_budgets());

}  // namespace gk
