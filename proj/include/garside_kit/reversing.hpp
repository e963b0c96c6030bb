#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "garside_kit/coxeter_graph.hpp"
#include "garside_kit/garside.hpp"

namespace gk {

using AtomWord = std::vector<std::size_t>;

/// Complement on a finite alphabet: a word table(x, y) for each pair, with
/// table(x, x) empty. Missing entries mean the pair has no common multiple.
class Complement {
 public:
  explicit Complement(std::size_t n);

  /// Artin complement. Left: f(s,t) = prod(t,s : m-1), so s f(s,t) = t f(t,s).
  /// Right: g(s,t) is the alternating word of length m-1 ending in s, so
  /// g(s,t) t = g(t,s) s.
  static Complement artin(const CoxeterGraph& g, Side side = Side::Left);
  /// Complement read off a Garside structure's simple lcms.
  static Complement from_structure(const GarsideStructure& G, Side side = Side::Left);

  std::size_t size() const { return n_; }
  void set(std::size_t x, std::size_t y, AtomWord w);
  const AtomWord* get(std::size_t x, std::size_t y) const;

 private:
  std::size_t n_;
  std::vector<std::optional<AtomWord>> table_;
};

struct ReversingResult {
  AtomWord positive;
  AtomWord negative;
  std::uint64_t steps = 0;
};

/// Left mode rewrites x^-1 y => f(x,y) f(y,x)^-1 and ends in v u^-1
/// (positive = v, negative = u). Right mode rewrites y x^-1 =>
/// g(x,y)^-1 g(y,x) and ends in u^-1 v. Throws ReversingDiverged when the
/// step budget runs out or a needed complement entry is missing.
ReversingResult reverse(const Complement& f, const SignedWord& w, Side side, std::uint64_t budget = 1000000);

/// C_L(u,v): u^-1 v reverses on the left to C_L(u,v) C_L(v,u)^-1.
AtomWord complement_left(const Complement& f, const AtomWord& u, const AtomWord& v, std::uint64_t budget = 1000000);
/// C_R(u,v): v u^-1 reverses on the right to C_R(u,v)^-1 C_R(v,u).
AtomWord complement_right(const Complement& g, const AtomWord& u, const AtomWord& v, std::uint64_t budget = 1000000);

/// Checks x f(x,y) C_L(f(x,y), f(x,z)) == y f(y,x) C_L(f(y,x), f(y,z)) for all
/// triples, using normal forms of G when given and double reversing otherwise.
/// Right mode checks the mirrored condition for a right complement.
bool check_coherence(const Complement& f, Side side, const GarsideStructure* G = nullptr,
                     std::uint64_t budget = 1000000);

/// Double reversing: w reverses to v u^-1, then w is trivial iff u^-1 v
/// reverses to the empty word.
bool word_problem_reversing(const Complement& f, const SignedWord& w, std::uint64_t budget = 1000000);

/// u C_L(u,v), a word for the left lcm of u and v.
AtomWord reversing_join(const Complement& f, const AtomWord& u, const AtomWord& v, std::uint64_t budget = 1000000);
/// C_R(u, C_R(v', u')) with u' = C_L(u,v), v' = C_L(v,u): a word for the
/// left gcd of u and v.
AtomWord reversing_meet(const Complement& f, const Complement& g, const AtomWord& u, const AtomWord& v,
                        std::uint64_t budget = 1000000);

SignedWord positive_word(const AtomWord& w);
SignedWord inverse_word(const SignedWord& w);

}  // namespace gk
