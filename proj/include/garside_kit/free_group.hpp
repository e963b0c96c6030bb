#pragma once

#include <map>
#include <string>
#include <vector>

#include "garside_kit/coxeter_graph.hpp"
#include "garside_kit/garside.hpp"

namespace gk {

/// Freely reduced word; letter +k is generator k (1-based), -k its inverse.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces the input.
  FreeWord(std::vector<int> letters);
  static FreeWord generator(int k) { return FreeWord({k}); }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& o) const;
  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const FreeWord& o) const { return letters_ != o.letters_; }
  bool operator<(const FreeWord& o) const { return letters_ < o.letters_; }
  /// "x1^-1 x2 x1" with the given generator prefix.
  std::string to_string(const std::string& prefix = "x") const;

 private:
  std::vector<int> letters_;
};

FreeWord free_reduce(const std::vector<int>& letters);
/// Cyclically reduced core of w.
FreeWord cyclic_reduce(const FreeWord& w);
/// Conjugacy in a free group: equal cyclically reduced words up to rotation.
bool free_conjugate(const FreeWord& u, const FreeWord& v);
/// Parses "x1^-1 x2 x1", "-1 2 1" or "y2 y1^-1".
FreeWord parse_free_word(const std::string& text);

/// Endomorphism of F_n given by the images of the generators.
class FreeEndo {
 public:
  explicit FreeEndo(std::vector<FreeWord> images) : images_(std::move(images)) {}
  static FreeEndo identity(std::size_t rank);

  std::size_t rank() const { return images_.size(); }
  const std::vector<FreeWord>& images() const { return images_; }
  FreeWord apply(const FreeWord& w) const;
  /// (this o other)(w) = this(other(w))
  FreeEndo compose(const FreeEndo& other) const;
  bool operator==(const FreeEndo& o) const { return images_ == o.images_; }

 private:
  std::vector<FreeWord> images_;
};

/// tau_k: x_k -> x_k^-1 x_{k+1} x_k, x_{k+1} -> x_k (and its inverse for -k).
FreeEndo artin_generator(std::size_t n, int letter);
/// rho(word) with rho(a b) = rho(a) o rho(b).
FreeEndo artin_rep(std::size_t n, const SignedWord& word);
FreeWord artin_rep_apply(std::size_t n, const SignedWord& word, const FreeWord& w);

/// rho_{D,i} on F_{n-1} = F(y_1..y_{n-1}) (and its inverse for -i).
FreeEndo rho_D_generator(std::size_t n, int letter);
FreeEndo rho_D(std::size_t n, const SignedWord& word);
FreeWord rho_D_apply(std::size_t n, const SignedWord& word, const FreeWord& w);

/// alpha fixes x_n ... x_1 and maps each x_k to a conjugate of x_chi(k) for
/// a permutation chi. Throws RankMismatch when alpha has rank != n.
bool artin_image_membership(std::size_t n, const FreeEndo& alpha);

enum class SemidirectKind { B, D };

struct SemidirectReport {
  CoxeterGraph graph;                     // B_n or D_n, vertices 1..n
  std::size_t relations_checked = 0;
  std::vector<std::pair<Letter, Letter>> failures;
  bool ok() const { return failures.empty(); }
};

/// Verifies the Artin relations of B_n (resp. D_n) on the generators
/// tau_1 = (x_1, 1), tau_i = (1, sigma_{i-1}) of F_n x B_n (resp.
/// t_1 = (y_1, sigma_1), t_2 = (1, sigma_1), t_i = (1, sigma_{i-1}) of F_{n-1} x B_n).
SemidirectReport semidirect_relation_check(SemidirectKind kind, std::size_t n);

/// Signed weight sum. Throws NotAHomomorphism if two vertices joined by an
/// odd label have different weights.
long long abelian_character(const CoxeterGraph& g, const std::map<Letter, long long>& weights, const SignedWord& word);
/// Weight 1 on the first vertex of B_n, 0 elsewhere.
std::map<Letter, long long> b_type_character(std::size_t n);

}  // namespace gk
