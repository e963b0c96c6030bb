#pragma once

#include <memory>
#include <string>
#include <vector>

#include "garside_kit/budget.hpp"
#include "garside_kit/coxeter.hpp"
#include "garside_kit/coxeter_engine.hpp"
#include "garside_kit/garside.hpp"
#include "garside_kit/reversing.hpp"

namespace gk {

/// Garside structure of a spherical Artin monoid with simples kappa(W):
/// simple ids are the ids of the finite Coxeter group engine.
class CoxeterGarside : public GarsideStructure {
 public:
  explicit CoxeterGarside(const CoxeterGraph& g, const Budgets& budgets = default_budgets());

  std::size_t num_simples() const override { return W_->size(); }
  Simple identity() const override { return 0; }
  Simple delta() const override { return W_->longest(); }
  std::size_t num_atoms() const override { return W_->rank(); }
  Simple atom(std::size_t i) const override { return atoms_.at(i); }
  std::string atom_name(std::size_t i) const override { return W_->graph().name(static_cast<Letter>(i)); }
  std::size_t norm(Simple a) const override { return W_->length(a); }
  std::optional<Simple> product(Simple a, Simple b) const override;
  Simple left_complement(Simple a) const override { return dl_[a]; }
  Simple right_complement(Simple a) const override { return dr_[a]; }
  Simple meet(Simple a, Simple b) const override;
  Simple join(Simple a, Simple b) const override;
  Simple tau(Simple a) const override { return tau_[a]; }
  Simple tau_inverse(Simple a) const override { return tau_inv_[a]; }
  Simple left_quotient(Simple a, Simple b) const override { return W_->multiply(W_->inverse(a), b); }
  std::vector<std::size_t> atom_word(Simple a) const override;

  const FiniteCoxeterGroup& group() const { return *W_; }

 private:
  std::shared_ptr<const FiniteCoxeterGroup> W_;
  std::vector<Simple> atoms_, dl_, dr_, tau_, tau_inv_;
};

/// Braid monoid on n strands with simples the permutations of n points
/// (positive permutation braids); sigma_i is the transposition (i, i+1).
class PermutationGarside : public GarsideStructure {
 public:
  /// Atom names default to "1".."n-1".
  explicit PermutationGarside(std::size_t n, std::vector<std::string> names = {});

  std::size_t strands() const { return n_; }
  std::size_t num_simples() const override { return count_; }
  Simple identity() const override { return 0; }
  Simple delta() const override { return delta_; }
  std::size_t num_atoms() const override { return n_ - 1; }
  Simple atom(std::size_t i) const override;
  std::string atom_name(std::size_t i) const override { return names_.at(i); }
  std::size_t norm(Simple a) const override;
  std::optional<Simple> product(Simple a, Simple b) const override;
  Simple left_complement(Simple a) const override;
  Simple right_complement(Simple a) const override;
  Simple meet(Simple a, Simple b) const override;
  Simple join(Simple a, Simple b) const override;
  Simple tau(Simple a) const override;
  Simple tau_inverse(Simple a) const override { return tau(a); }
  Simple left_quotient(Simple a, Simple b) const override;
  std::vector<std::size_t> atom_word(Simple a) const override;

  using Perm = std::vector<std::uint8_t>;  // 0-based images
  Perm perm(Simple a) const;
  Simple rank(const Perm& p) const;

 private:
  Perm compose(const Perm& a, const Perm& b) const;  // a after b
  Perm inverse(const Perm& a) const;
  std::size_t n_, count_;
  Simple delta_;
  std::vector<std::string> names_;
};

/// True when the graph is A_k with vertices in path order.
bool is_type_a_in_order(const CoxeterGraph& g);

/// Garside structure of a spherical Artin monoid; A_k graphs in path order
/// use the permutation structure unless prefer_permutation is false.
std::shared_ptr<const GarsideStructure> garside_structure_of(const CoxeterGraph& g, bool prefer_permutation = true,
                                                             const Budgets& budgets = default_budgets());

struct ArtinSystem {
  CoxeterGraph graph;
  Complement left, right;
  std::shared_ptr<const GarsideStructure> garside;  // null for non-spherical graphs

  explicit ArtinSystem(const CoxeterGraph& g, const Budgets& budgets = default_budgets());
};

/// kappa(w): the simple read off a reduced word of w.
Simple kappa(const GarsideStructure& G, const CoxElement& w);

/// delta(a): greatest simple left divisor of a positive word, by a right to
/// left pass delta(s b) = s (d_R(s) ^_L b).
Simple head_delta(const GarsideStructure& G, const std::vector<std::size_t>& word);

/// theta: B_n -> Sym_n, sigma_k -> (k, k+1); returns 1-based images.
std::vector<int> braid_permutation(std::size_t n, const SignedWord& word);

/// sigma_{l-1} ... sigma_{k+1} sigma_k^2 sigma_{k+1}^-1 ... sigma_{l-1}^-1
SignedWord pure_braid_generator(std::size_t n, std::size_t k, std::size_t l);

/// Signed word parsing/printing with vertex names ("1 2 -1").
SignedWord parse_signed_word(const CoxeterGraph& g, const std::string& text);
std::string format_signed_word(const CoxeterGraph& g, const SignedWord& w);

}  // namespace gk
