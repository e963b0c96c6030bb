#pragma once

#include <functional>
#include <string>
#include <vector>

#include "garside_kit/coxeter_graph.hpp"
#include "garside_kit/garside.hpp"

namespace gk {

/// Group presentation. Relator letters are signed 1-based generator indices.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<SignedWord> relators;
  /// One tag per relator, e.g. "artin" or "extra".
  std::vector<std::string> tags;
  std::string provenance;

  std::size_t count(const std::string& tag) const;
  std::string relator_string(std::size_t i) const;
  /// {"generators":[...],"relators":[["x0","-y1"],...],"tags":[...],"provenance":"..."}
  std::string to_json() const;
};

Presentation braid_presentation(std::size_t n);
/// Generators d(k,l) for 1 <= k < l <= n, lexicographic.
Presentation pure_braid_presentation(std::size_t n);
Presentation artin_presentation(const CoxeterGraph& g);
Presentation coxeter_presentation(const CoxeterGraph& g);

/// Gamma(g,r,n) read from the shipped asset (data_dir empty = default location).
CoxeterGraph mcg_graph(int genus, int boundary, int punctures, const std::string& data_dir = "");
/// Artin relators of Gamma(g, max(r,1), n) followed by the extra relators,
/// each Delta(X) written as the longest element word of the parabolic subgraph.
Presentation mcg_presentation(int genus, int boundary, int punctures, const std::string& data_dir = "");

/// Replace each generator by a word over the target alphabet.
SignedWord substitute(const SignedWord& w, const std::vector<SignedWord>& images);

struct RelatorReport {
  std::size_t checked = 0;
  std::vector<std::size_t> failures;
  bool ok() const { return failures.empty(); }
};

/// Evaluates every relator with `trivial` (which decides triviality in the
/// target group). Reports failing relator indices in order.
RelatorReport verify_relators(const Presentation& P, const std::function<bool(const SignedWord&)>& trivial,
                              std::size_t jobs = 1);

}  // namespace gk
