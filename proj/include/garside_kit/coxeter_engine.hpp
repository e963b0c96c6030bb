#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "garside_kit/budget.hpp"
#include "garside_kit/coxeter.hpp"

namespace gk {

/// Full multiplication tables of a finite Coxeter group. Elements are dense
/// ids in breadth-first (length, then discovery) order; id 0 is the identity.
/// Built from the action on the root system, memoized per graph.
class FiniteCoxeterGroup {
 public:
  using Id = std::uint32_t;

  /// Throws NotSpherical or EnumerationBudgetExceeded.
  static std::shared_ptr<const FiniteCoxeterGroup> of(const CoxeterGraph& g,
                                                      std::size_t cap = default_budgets().enumeration);
  FiniteCoxeterGroup(const CoxeterGraph& g, std::size_t cap);

  const CoxeterGraph& graph() const { return graph_; }
  std::size_t size() const { return length_.size(); }
  std::size_t rank() const { return rank_; }
  Id identity() const { return 0; }
  Id longest() const { return w0_; }
  std::size_t length(Id w) const { return length_[w]; }
  Id left(Id w, Letter s) const { return left_[w * rank_ + s]; }    // s w
  Id right(Id w, Letter s) const { return right_[w * rank_ + s]; }  // w s
  Id inverse(Id w) const { return inverse_[w]; }
  std::uint64_t left_descents(Id w) const { return ldes_[w]; }
  std::uint64_t right_descents(Id w) const { return rdes_[w]; }
  Id multiply(Id a, Id b) const;
  Id id_of(const std::vector<Letter>& word) const;
  /// ShortLex-least reduced word.
  std::vector<Letter> word(Id w) const;
  CoxElement element(Id w) const { return CoxElement(graph_, word(w)); }
  Id id_of(const CoxElement& w) const { return id_of(w.word()); }

 private:
  CoxeterGraph graph_;
  std::size_t rank_;
  std::vector<std::uint32_t> length_;
  std::vector<Id> left_, right_, inverse_;
  std::vector<std::uint64_t> ldes_, rdes_;
  std::vector<Letter> first_;  // least left descent
  Id w0_ = 0;
};

}  // namespace gk
