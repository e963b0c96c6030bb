#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "garside_kit/budget.hpp"
#include "garside_kit/coxeter_graph.hpp"

namespace gk {

/// Element of W_Gamma stored as its ShortLex-least reduced word.
class CoxElement {
 public:
  CoxElement() = default;
  /// The word must already be the canonical form; no check is made.
  CoxElement(CoxeterGraph g, std::vector<Letter> canonical)
      : graph_(std::move(g)), word_(std::move(canonical)) {}

  const CoxeterGraph& graph() const { return graph_; }
  const std::vector<Letter>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }

  bool operator==(const CoxElement& o) const { return word_ == o.word_ && graph_ == o.graph_; }
  bool operator!=(const CoxElement& o) const { return !(*this == o); }
  /// ShortLex order on canonical words.
  bool operator<(const CoxElement& o) const;

  std::string to_string() const { return format_cox_word(graph_, word_); }

 private:
  CoxeterGraph graph_;
  std::vector<Letter> word_;
};

/// Tits' algorithm: saturate the type-II orbit, delete any (s,s) factor and
/// restart, and return the ShortLex minimum of the final orbit. Returns
/// nullopt if some orbit grows beyond `orbit_budget` words.
std::optional<std::vector<Letter>> tits_reduce(const CoxeterGraph& g, const std::vector<Letter>& word,
                                               std::size_t orbit_budget);

/// Canonical form from descents in the reflection representation: repeatedly
/// strip the least left descent. Works for every Coxeter graph.
CoxElement canonical_element(const CoxeterGraph& g, const std::vector<Letter>& word);

/// Tits' algorithm, falling back to canonical_element when the orbit budget
/// is exhausted (both produce the same canonical word).
CoxElement reduce_word(const CoxeterGraph& g, const std::vector<Letter>& word,
                       const Budgets& budgets = default_budgets());
bool elements_equal(const CoxeterGraph& g, const std::vector<Letter>& u, const std::vector<Letter>& v,
                    const Budgets& budgets = default_budgets());

CoxElement identity_element(const CoxeterGraph& g);
CoxElement generator(const CoxeterGraph& g, Letter s);
CoxElement multiply(const CoxElement& u, const CoxElement& v);
CoxElement inverse(const CoxElement& u);

/// Letters s with lg(s w) < lg(w), in vertex order.
std::vector<Letter> left_descents(const CoxElement& w);
/// Letters s with lg(w s) < lg(w), in vertex order.
std::vector<Letter> right_descents(const CoxElement& w);

/// u <=_L v iff lg(u) + lg(u^-1 v) = lg(v).
bool weak_le(const CoxElement& u, const CoxElement& v);

CoxElement weak_order_meet(const CoxElement& u, const CoxElement& v);
/// Requires a spherical graph; scans the enumerated group for the least common
/// upper bound.
CoxElement weak_order_join(const CoxElement& u, const CoxElement& v,
                           const Budgets& budgets = default_budgets());
CoxElement longest_element(const CoxeterGraph& g);

/// All elements of length <= max_length by breadth-first search from the
/// identity, in ShortLex order.
std::vector<CoxElement> enumerate_group(const CoxeterGraph& g, std::size_t max_length,
                                        const Budgets& budgets = default_budgets());

}  // namespace gk
