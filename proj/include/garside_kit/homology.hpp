#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "garside_kit/budget.hpp"
#include "garside_kit/coxeter.hpp"

namespace gk {

/// Subset of S as a bitmask over vertex indices.
using Subset = std::uint64_t;
using IntMatrix = std::vector<std::vector<mpz_class>>;

std::vector<Letter> subset_letters(Subset T);
Subset subset_of(const std::vector<Letter>& letters);

struct CosetDecomposition {
  CoxElement minimum;    // min_T(w)
  CoxElement remainder;  // pi_T(w), in W_T
};
/// w = min_T(w) * pi_T(w) with additive lengths.
CosetDecomposition coset_minima(const CoxeterGraph& g, Subset T, const CoxElement& w);

/// coefficient * kappa(u), u given by its canonical reduced word.
struct SymbolicTerm {
  int coefficient = 0;
  std::vector<Letter> word;
};

/// Coefficient of E_to in d E_from.
struct BoundaryEntry {
  Subset from = 0, to = 0;
  std::vector<SymbolicTerm> terms;
  long long integer() const;
};

struct ChainComplex {
  /// cells[q]: subsets of size q, ordered by bitmask.
  std::vector<std::vector<Subset>> cells;
  /// symbolic[q]: nonzero entries of d: C_q -> C_{q-1} (q >= 1).
  std::vector<std::vector<BoundaryEntry>> symbolic;
  /// integer[q]: |cells[q-1]| x |cells[q]| matrix; integer[0] is empty.
  std::vector<IntMatrix> integer;
};

struct HomologyOptions {
  /// Permits groups larger than the default homology cap (E6 and up).
  bool allow_large = false;
  Budgets budgets = default_budgets();
};

/// Largest |W| accepted without allow_large.
inline constexpr std::size_t kHomologyDefaultCap = 50000;

/// Throws NotSpherical, EnumerationBudgetExceeded.
ChainComplex boundary_matrices(const CoxeterGraph& g, const HomologyOptions& opts = {});

/// Nonzero invariant factors (positive, each dividing the next).
std::vector<mpz_class> smith_invariants(IntMatrix m);

struct CohomologyGroup {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  /// "Z^2 x Z_2", "0".
  std::string to_string() const;
  bool operator==(const CohomologyGroup& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
};

/// H^0 .. H^n of the Artin group with trivial integer coefficients.
std::vector<CohomologyGroup> integer_cohomology(const CoxeterGraph& g, const HomologyOptions& opts = {});
std::vector<CohomologyGroup> cohomology_of_complex(const ChainComplex& c);
std::string cohomology_json(const std::string& label, const std::vector<CohomologyGroup>& h);
/// One row per graph, one column per degree, tab-aligned.
std::string cohomology_table(const std::vector<std::pair<std::string, std::vector<CohomologyGroup>>>& rows);

struct ResolutionReport {
  bool integer_ok = true;
  bool group_ring_ok = true;
  /// (q, from, to) triples where d o d fails.
  std::vector<std::tuple<std::size_t, Subset, Subset>> failures;
  bool ok() const { return integer_ok && group_ring_ok; }
};
/// d o d = 0 over Z and over the group ring. Rank <= 4.
ResolutionReport verify_resolution(const CoxeterGraph& g, const HomologyOptions& opts = {});

/// The poset of pairs (T, w); w is an id in the finite group engine.
class HatCoxPoset {
 public:
  struct Cell {
    Subset T;
    std::uint32_t w;
  };
  /// Throws NotSpherical, EnumerationBudgetExceeded.
  explicit HatCoxPoset(const CoxeterGraph& g, const Budgets& budgets = default_budgets());

  const CoxeterGraph& graph() const { return graph_; }
  std::size_t size() const { return cells_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t group_order() const { return order_; }
  std::size_t dimension(const Cell& c) const;
  bool leq(const Cell& a, const Cell& b) const;
  /// u . (T, w) = (T, u w)
  Cell act(std::uint32_t u, const Cell& c) const;
  /// Cells (T minus one vertex, w u) with c <= them: the codimension-one
  /// faces of c, for u in W_T minimal with respect to T minus that vertex.
  std::vector<Cell> facets(const Cell& c) const;
  /// Cells of the quotient by W: one per subset.
  std::vector<Subset> quotient_cells() const;
  /// Boundary word of the quotient 2-cell U_N({s,t}) as signed letters,
  /// read off from the edges of the cell ({s,t}, 1).
  std::vector<int> two_cell_boundary(Letter s, Letter t) const;

 private:
  CoxeterGraph graph_;
  std::size_t order_ = 0;
  std::vector<Cell> cells_;
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

struct Abelianization {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;
};
/// From the relation matrix of the Artin presentation; any graph.
Abelianization abelianization(const CoxeterGraph& g);

}  // namespace gk
