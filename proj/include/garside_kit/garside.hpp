#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gk {

using Simple = std::uint32_t;
/// Signed atom word: letter +k is atom k-1, -k its inverse.
using SignedWord = std::vector<int>;

/// A Garside structure described through its finite lattice of simples.
/// Implementations must be immutable after construction.
class GarsideStructure {
 public:
  virtual ~GarsideStructure() = default;

  virtual std::size_t num_simples() const = 0;
  virtual Simple identity() const = 0;
  virtual Simple delta() const = 0;
  virtual std::size_t num_atoms() const = 0;
  virtual Simple atom(std::size_t i) const = 0;
  virtual std::string atom_name(std::size_t i) const = 0;
  virtual std::size_t norm(Simple a) const = 0;
  /// a b when it is simple.
  virtual std::optional<Simple> product(Simple a, Simple b) const = 0;
  /// d_L(a) a = Delta
  virtual Simple left_complement(Simple a) const = 0;
  /// a d_R(a) = Delta
  virtual Simple right_complement(Simple a) const = 0;
  virtual Simple meet(Simple a, Simple b) const = 0;  // left divisibility
  virtual Simple join(Simple a, Simple b) const = 0;  // left divisibility
  /// Delta a Delta^-1
  virtual Simple tau(Simple a) const = 0;
  virtual Simple tau_inverse(Simple a) const = 0;
  /// The simple c with a c = b; requires a <=_L b.
  virtual Simple left_quotient(Simple a, Simple b) const = 0;
  /// Atom indices of a word representing a.
  virtual std::vector<std::size_t> atom_word(Simple a) const = 0;

  // Derived operations.
  Simple meet_right(Simple a, Simple b) const;
  Simple join_right(Simple a, Simple b) const;
  /// The simple c with c b = a; requires b <=_R a.
  Simple right_quotient(Simple a, Simple b) const;
  Simple tau_power(Simple a, long long k) const;
  bool left_divides(Simple a, Simple b) const { return meet(a, b) == a; }
  bool right_divides(Simple a, Simple b) const { return meet_right(a, b) == a; }
  /// Simple built from a positive atom word, if the word is simple.
  std::optional<Simple> simple_from_atoms(const std::vector<std::size_t>& atoms) const;
};

/// Delta^p b_1 ... b_r with no b_i equal to Delta or to the identity.
struct GarsideElement {
  long long delta_power = 0;
  std::vector<Simple> factors;

  bool operator==(const GarsideElement& o) const {
    return delta_power == o.delta_power && factors == o.factors;
  }
  bool operator!=(const GarsideElement& o) const { return !(*this == o); }
  bool operator<(const GarsideElement& o) const {
    if (delta_power != o.delta_power) return delta_power < o.delta_power;
    return factors < o.factors;
  }
  long long inf() const { return delta_power; }
  long long sup() const { return delta_power + static_cast<long long>(factors.size()); }
  std::size_t canonical_length() const { return factors.size(); }
  bool is_identity() const { return delta_power == 0 && factors.empty(); }
};

enum class Side { Left, Right };

/// Left-greedy form of a sequence of simples by repeated local sweeps; the
/// result may start with Delta factors and has no identity factors.
std::vector<Simple> left_weight(const GarsideStructure& G, std::vector<Simple> factors);

GarsideElement normalize(const GarsideStructure& G, long long p, std::vector<Simple> factors);
GarsideElement from_simple(const GarsideStructure& G, Simple a);
GarsideElement delta_power(const GarsideStructure& G, long long k);
GarsideElement atom_element(const GarsideStructure& G, std::size_t i);

/// Left-greedy factorization of a positive word (Delta factors kept).
std::vector<Simple> monoid_normal_form(const GarsideStructure& G, const std::vector<std::size_t>& word);
GarsideElement delta_normal_form(const GarsideStructure& G, const SignedWord& word);

GarsideElement multiply(const GarsideStructure& G, const GarsideElement& a, const GarsideElement& b);
GarsideElement inverse(const GarsideStructure& G, const GarsideElement& a);
GarsideElement power(const GarsideStructure& G, const GarsideElement& a, long long n);
/// c^-1 a c
GarsideElement conjugate(const GarsideStructure& G, const GarsideElement& a, const GarsideElement& c);
GarsideElement tau_element(const GarsideStructure& G, const GarsideElement& a, long long k = 1);

/// Signed atom word spelling the normal form.
SignedWord to_word(const GarsideStructure& G, const GarsideElement& a);
/// Factors with Delta^p expanded when p >= 0 (positive elements only).
std::vector<Simple> positive_factors(const GarsideStructure& G, const GarsideElement& a);

bool word_problem_nf(const GarsideStructure& G, const SignedWord& word);

/// Lattice operations on the group. The left meet uses greedy heads, the
/// left join reverses over the alphabet of simples; the right-hand versions
/// go through the inversion anti-isomorphism.
GarsideElement lattice_meet(const GarsideStructure& G, const GarsideElement& a, const GarsideElement& b,
                            Side side = Side::Left);
GarsideElement lattice_join(const GarsideStructure& G, const GarsideElement& a, const GarsideElement& b,
                            Side side = Side::Left);
bool left_le(const GarsideStructure& G, const GarsideElement& a, const GarsideElement& b);

/// Symmetric form a = b^-1 c with b, c positive and b ^_L c = 1.
struct SymmetricForm {
  std::vector<Simple> negative;  // left-greedy factors of b
  std::vector<Simple> positive;  // left-greedy factors of c
};
SymmetricForm symmetric_form(const GarsideStructure& G, const GarsideElement& a);

std::string simple_to_string(const GarsideStructure& G, Simple s);
std::string element_to_string(const GarsideStructure& G, const GarsideElement& a);

}  // namespace gk
