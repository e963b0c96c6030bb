#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace gk {

using Letter = std::uint32_t;

/// Edge label value used for m_st = infinity.
inline constexpr unsigned kInfinity = 0;

/// Coxeter graph: ordered vertex names plus a symmetric label matrix with 1 on
/// the diagonal, 2 for commuting pairs and kInfinity for free pairs. Cheap to
/// copy; the data is shared and immutable.
class CoxeterGraph {
 public:
  using Edge = std::tuple<std::string, std::string, unsigned>;

  CoxeterGraph();
  /// Labels not mentioned in `edges` default to 2. Throws MalformedSpec.
  CoxeterGraph(std::vector<std::string> vertices, const std::vector<Edge>& edges);

  std::size_t rank() const;
  const std::vector<std::string>& vertices() const;
  const std::string& name(Letter s) const;
  /// Throws LetterNotInGraph.
  Letter index_of(const std::string& name) const;
  bool has_vertex(const std::string& name) const;
  unsigned label(Letter s, Letter t) const;
  bool is_infinite(Letter s, Letter t) const { return s != t && label(s, t) == kInfinity; }

  /// Edges with label != 2, in vertex order.
  std::vector<Edge> edges() const;
  /// Full subgraph on the given vertices, in the given order.
  CoxeterGraph induced(const std::vector<Letter>& subset) const;
  /// Connected components (edges with label != 2), each sorted by vertex order.
  std::vector<std::vector<Letter>> components() const;
  /// Least common multiple of all finite off-diagonal labels (1 if none).
  unsigned label_lcm() const;

  bool operator==(const CoxeterGraph& o) const;
  bool operator!=(const CoxeterGraph& o) const { return !(*this == o); }
  /// Canonical text key, used for memoization.
  const std::string& key() const;
  /// `{"vertices":[...],"edges":[[a,b,label],...]}`
  std::string to_json() const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// Builtins: A<n>, B<n>, D<n> (n >= 4), E6, E7, E8, F4, H3, H4, I2(<p>),
/// affA<n>; joined by '+' for a disjoint union. Vertices are named 1..N.
CoxeterGraph builtin_graph(const std::string& spec);

/// Accepts a builtin name, inline JSON, or a path to a JSON file.
CoxeterGraph parse_graph(const std::string& text);
CoxeterGraph graph_from_json(const std::string& json_text);

/// Name of the spherical type of a connected graph (e.g. "B4", "I2(7)"), or
/// an empty string when the component is not in the spherical list.
std::string spherical_type(const CoxeterGraph& g, const std::vector<Letter>& component);

/// True iff every connected component is of spherical type.
bool is_spherical(const CoxeterGraph& g);

/// Parse whitespace-separated vertex names. Throws LetterNotInGraph.
std::vector<Letter> parse_cox_word(const CoxeterGraph& g, const std::string& text);
std::string format_cox_word(const CoxeterGraph& g, const std::vector<Letter>& word);

}  // namespace gk
