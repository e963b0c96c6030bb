#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "garside_kit/budget.hpp"
#include "garside_kit/coxeter_graph.hpp"
#include "garside_kit/ratpoly.hpp"

namespace gk {

/// Polynomial over Q in commuting variables x, y; sparse, no zero terms.
class TwoVarPoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;  // (deg x, deg y)

  TwoVarPoly() = default;
  TwoVarPoly(long c) : TwoVarPoly(mpq_class(c)) {}
  TwoVarPoly(const mpq_class& c);
  static TwoVarPoly x();
  static TwoVarPoly y();
  static TwoVarPoly monomial(const mpq_class& c, unsigned dx, unsigned dy);
  /// p(y) as a polynomial in x, y.
  static TwoVarPoly in_y(const RatPoly& p);

  const std::map<Exponents, mpq_class>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_monomial() const { return t_.size() == 1; }
  unsigned degree_x() const;
  /// Coefficient of x^k as a polynomial in y.
  RatPoly coeff_x(unsigned k) const;
  mpq_class eval(const mpq_class& xv, const mpq_class& yv) const;

  TwoVarPoly operator+(const TwoVarPoly& o) const;
  TwoVarPoly operator-(const TwoVarPoly& o) const;
  TwoVarPoly operator-() const;
  TwoVarPoly operator*(const TwoVarPoly& o) const;
  TwoVarPoly& operator+=(const TwoVarPoly& o);
  bool operator==(const TwoVarPoly& o) const { return t_ == o.t_; }
  bool operator!=(const TwoVarPoly& o) const { return t_ != o.t_; }

  /// Terms by decreasing total degree, then decreasing x degree.
  std::string to_string() const;

 private:
  std::map<Exponents, mpq_class> t_;
};

using PolyMatrix = std::vector<std::vector<TwoVarPoly>>;

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix identity_matrix(std::size_t n);
TwoVarPoly determinant(const PolyMatrix& m);

/// Positive roots of a small-type, triangle-free spherical graph in
/// simple-root coordinates, with the doubled form (2 on the diagonal, -1 on
/// label-3 edges). Roots are ordered by height, then by decreasing
/// coordinates. Throws NotSmallType, HasTriangle, NotSpherical.
struct LKBBasis {
  CoxeterGraph graph;
  std::vector<std::vector<int>> roots;
  std::map<std::vector<int>, std::size_t> index;
  std::vector<std::vector<int>> form;

  std::size_t size() const { return roots.size(); }
  std::size_t simple(Letter s) const;
  int pairing(Letter s, const std::vector<int>& f) const;
  std::string root_string(std::size_t i) const;
};
LKBBasis lkb_basis(const CoxeterGraph& g);

/// T(s, f) for each vertex s and root index f.
using TTable = std::vector<std::vector<RatPoly>>;

/// Columns are images: entry (g, f) is the coefficient of u_g in phi_s(u_f).
PolyMatrix lkb_phi_matrix(const LKBBasis& B, Letter s);
/// Phi_s = phi_s + x T(s, .) in the row of u_{e_s}.
PolyMatrix lkb_Phi_matrix(const LKBBasis& B, Letter s, const TTable& T);
std::vector<PolyMatrix> lkb_matrices(const LKBBasis& B, const TTable* T);

struct LKBValidation {
  std::vector<std::pair<Letter, Letter>> violated;  // pairs whose relation fails
  std::vector<TwoVarPoly> determinants;             // det of each matrix
  bool relations_ok() const { return violated.empty(); }
  bool invertible() const;
};
LKBValidation validate_lkb(const LKBBasis& B, const std::vector<PolyMatrix>& mats);

/// Searches T tables of y-degree <= degree_bound satisfying every Artin
/// relation with invertible Phi_s. Throws NoSolutionFound.
TTable solve_T_table(const CoxeterGraph& g, unsigned degree_bound);

struct InjectivityReport {
  std::size_t elements = 0;
  /// Pairs of distinct monoid elements (atom words) with equal matrices.
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> collisions;
  std::size_t collision_count = 0;
};
/// Enumerates monoid elements of length <= max_length through normal forms.
InjectivityReport injectivity_scan(const CoxeterGraph& g, const std::vector<PolyMatrix>& mats, std::size_t max_length,
                                   const Budgets& budgets = default_budgets());

/// Lines "s (c1,...,ck) -> polynomial in y"; '#' starts a comment.
std::string write_T_table(const LKBBasis& B, const TTable& T);
TTable read_T_table(const LKBBasis& B, const std::string& text);
/// Sparse triples "(row root) (col root) entry", one per nonzero entry.
std::string matrix_triples(const LKBBasis& B, const PolyMatrix& m);

/// Parses "y^2 - 2*y + 1", "1/2*y", "-3".
RatPoly parse_poly(const std::string& text, char var = 'y');

}  // namespace gk
