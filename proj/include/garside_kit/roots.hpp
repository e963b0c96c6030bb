#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "garside_kit/coxeter_graph.hpp"
#include "garside_kit/cyclo.hpp"

namespace gk {

class CoxElement;

/// Vector in the simple-root basis, one coordinate per vertex.
struct Root {
  std::vector<CycloReal> coords;

  bool operator==(const Root& o) const { return coords == o.coords; }
  bool operator!=(const Root& o) const { return !(*this == o); }
  /// Structural order on coordinates, used for deduplication.
  bool operator<(const Root& o) const;
  Root operator-() const;
  /// 1 if all coordinates >= 0 (and some > 0), -1 for the opposite, 0 otherwise.
  int sign() const;
};

using Matrix = std::vector<std::vector<CycloReal>>;

/// The canonical form and reflection representation of a Coxeter graph over
/// Q(2cos(pi/L)), L = 2 lcm(finite labels). Shared per graph.
class ReflectionRep {
 public:
  explicit ReflectionRep(const CoxeterGraph& g);
  static std::shared_ptr<const ReflectionRep> of(const CoxeterGraph& g);

  const CoxeterGraph& graph() const { return graph_; }
  const std::shared_ptr<const CycloField>& field() const { return field_; }
  /// <e_s, e_t>
  const CycloReal& form(Letter s, Letter t) const { return form_[s][t]; }
  const Matrix& form_matrix() const { return form_; }

  CycloReal zero() const { return CycloReal(field_, 0); }
  Root simple_root(Letter s) const;
  /// <x, e_s>
  CycloReal pairing(const Root& x, Letter s) const;
  CycloReal inner(const Root& x, const Root& y) const;
  Root reflect(Letter s, const Root& x) const;
  /// Applies the letters right to left, i.e. the element s_1...s_k acting on x.
  Root act(const std::vector<Letter>& word, const Root& x) const;

  std::string root_to_json(const Root& r) const;

 private:
  CoxeterGraph graph_;
  std::shared_ptr<const CycloField> field_;
  Matrix form_;
  Matrix two_form_;
};

/// The symmetric matrix of the canonical bilinear form.
Matrix bilinear_form(const CoxeterGraph& g);

Root reflect(const CoxeterGraph& g, Letter s, const Root& x);
Root act(const CoxElement& w, const Root& x);

/// Positive roots by breadth-first reflection closure of the simple roots.
/// With max_depth == 0 the graph must be spherical (NotSpherical otherwise);
/// a nonzero depth bounds the number of reflections applied. Ordered by
/// discovery (depth, then vertex order).
std::vector<Root> positive_roots(const CoxeterGraph& g, unsigned max_depth = 0);

/// Phi_w = { f in Phi+ : w^-1 f in Phi- }. For a non-spherical graph the
/// candidates are the positive roots of reflection depth <= max(depth, lg(w)),
/// which contain every inversion root of w.
std::vector<Root> inversion_set(const CoxElement& w, unsigned depth = 0);

/// All leading principal minors strictly positive.
bool is_positive_definite(const Matrix& form);
/// Determinant by cofactor expansion (exact, division free).
CycloReal determinant(const Matrix& m);

}  // namespace gk
