#include "garside_kit/homology.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <json.hpp>
#include <sstream>

#include "garside_kit/artin.hpp"
#include "garside_kit/coxeter_engine.hpp"
#include "garside_kit/errors.hpp"
#include "garside_kit/garside.hpp"

namespace gk {

std::vector<Letter> subset_letters(Subset T) {
  std::vector<Letter> out;
  for (Letter s = 0; s < 64; ++s)
    if (T >> s & 1) out.push_back(s);
  return out;
}

Subset subset_of(const std::vector<Letter>& letters) {
  Subset T = 0;
  for (Letter s : letters) T |= Subset{1} << s;
  return T;
}

CosetDecomposition coset_minima(const CoxeterGraph& g, Subset T, const CoxElement& w) {
  // Strip right descents in T until none are left.
  CoxElement m = w;
  std::vector<Letter> removed;
  for (;;) {
    auto d = right_descents(m);
    auto it = std::find_if(d.begin(), d.end(), [&](Letter s) { return T >> s & 1; });
    if (it == d.end()) break;
    removed.push_back(*it);
    m = multiply(m, generator(g, *it));
  }
  std::reverse(removed.begin(), removed.end());
  return {m, reduce_word(g, removed)};
}

long long BoundaryEntry::integer() const {
  long long s = 0;
  for (auto& t : terms) s += t.coefficient;
  return s;
}

namespace {

std::size_t homology_cap(const HomologyOptions& opts) {
  return opts.allow_large ? opts.budgets.enumeration : std::min(kHomologyDefaultCap, opts.budgets.enumeration);
}

std::shared_ptr<const FiniteCoxeterGroup> parabolic(const CoxeterGraph& g, Subset T, std::size_t cap) {
  return FiniteCoxeterGroup::of(g.induced(subset_letters(T)), cap);
}

std::vector<BoundaryEntry> boundary_of(const CoxeterGraph& g, Subset T, std::size_t cap) {
  auto letters = subset_letters(T);
  auto W = parabolic(g, T, cap);
  std::vector<BoundaryEntry> out;
  for (std::size_t j = 0; j < letters.size(); ++j) {
    const std::uint64_t rest = ((std::uint64_t{1} << letters.size()) - 1) & ~(std::uint64_t{1} << j);
    BoundaryEntry e;
    e.from = T;
    e.to = T & ~(Subset{1} << letters[j]);
    const int outer = j % 2 == 0 ? 1 : -1;
    for (FiniteCoxeterGroup::Id u = 0; u < W->size(); ++u) {
      if (W->right_descents(u) & rest) continue;
      SymbolicTerm t;
      t.coefficient = W->length(u) % 2 == 0 ? outer : -outer;
      for (Letter l : W->word(u)) t.word.push_back(letters[l]);
      e.terms.push_back(std::move(t));
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

ChainComplex boundary_matrices(const CoxeterGraph& g, const HomologyOptions& opts) {
  const std::size_t n = g.rank();
  if (n > 20) raise(ErrorCode::EnumerationBudgetExceeded, "too many vertices for the chain complex");
  const std::size_t cap = homology_cap(opts);
  auto W = FiniteCoxeterGroup::of(g, cap);  // size check for the whole group
  (void)W;

  ChainComplex c;
  c.cells.resize(n + 1);
  for (Subset T = 0; T < (Subset{1} << n); ++T) c.cells[static_cast<std::size_t>(std::popcount(T))].push_back(T);
  c.symbolic.resize(n + 1);
  c.integer.resize(n + 1);

  std::vector<std::vector<BoundaryEntry>> per_subset(std::size_t{1} << n);
  const unsigned jobs = std::max(1u, opts.budgets.jobs);
  if (jobs == 1) {
    for (Subset T = 1; T < (Subset{1} << n); ++T) per_subset[T] = boundary_of(g, T, cap);
  } else {
    std::vector<std::future<void>> work;
    for (unsigned k = 0; k < jobs; ++k)
      work.push_back(std::async(std::launch::async, [&, k] {
        for (Subset T = 1 + k; T < (Subset{1} << n); T += jobs) per_subset[T] = boundary_of(g, T, cap);
      }));
    for (auto& f : work) f.get();
  }

  for (std::size_t q = 1; q <= n; ++q) {
    std::map<Subset, std::size_t> row_of;
    for (std::size_t i = 0; i < c.cells[q - 1].size(); ++i) row_of[c.cells[q - 1][i]] = i;
    IntMatrix m(c.cells[q - 1].size(), std::vector<mpz_class>(c.cells[q].size(), 0));
    for (std::size_t col = 0; col < c.cells[q].size(); ++col)
      for (auto& e : per_subset[c.cells[q][col]]) {
        m[row_of.at(e.to)][col] = static_cast<long>(e.integer());
        c.symbolic[q].push_back(e);
      }
    c.integer[q] = std::move(m);
  }
  return c;
}

std::vector<mpz_class> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<mpz_class> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: nonzero entry of least absolute value in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      mpz_class q = m[i][t] / m[t][t];
      for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      mpz_class q = m[t][j] / m[t][t];
      for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder appeared; pivot again
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  // Turn the diagonal into a divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

std::string CohomologyGroup::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (auto& t : torsion) parts.push_back("Z_" + t.get_str());
  std::string out;
  for (auto& p : parts) out += (out.empty() ? "" : " x ") + p;
  return out;
}

std::vector<CohomologyGroup> cohomology_of_complex(const ChainComplex& c) {
  const std::size_t n = c.cells.size() - 1;
  std::vector<std::vector<mpz_class>> inv(n + 2);
  std::vector<std::size_t> rank(n + 2, 0);
  for (std::size_t q = 1; q <= n; ++q) {
    inv[q] = smith_invariants(c.integer[q]);
    rank[q] = inv[q].size();
  }
  std::vector<CohomologyGroup> h(n + 1);
  for (std::size_t q = 0; q <= n; ++q) {
    h[q].free_rank = c.cells[q].size() - rank[q] - rank[q + 1];
    for (auto& d : inv[q])
      if (d > 1) h[q].torsion.push_back(d);
  }
  return h;
}

std::vector<CohomologyGroup> integer_cohomology(const CoxeterGraph& g, const HomologyOptions& opts) {
  return cohomology_of_complex(boundary_matrices(g, opts));
}

std::string cohomology_json(const std::string& label, const std::vector<CohomologyGroup>& h) {
  nlohmann::json j;
  j["graph"] = label;
  j["cohomology"] = nlohmann::json::array();
  for (std::size_t q = 0; q < h.size(); ++q) {
    nlohmann::json t = nlohmann::json::array();
    for (auto& d : h[q].torsion) t.push_back(d.get_str());
    j["cohomology"].push_back({{"degree", q}, {"free_rank", h[q].free_rank}, {"torsion", t}, {"group", h[q].to_string()}});
  }
  return j.dump();
}

std::string cohomology_table(const std::vector<std::pair<std::string, std::vector<CohomologyGroup>>>& rows) {
  std::size_t degrees = 0, width0 = 0;
  for (auto& [name, h] : rows) {
    degrees = std::max(degrees, h.size());
    width0 = std::max(width0, name.size());
  }
  std::vector<std::size_t> width(degrees, 0);
  for (std::size_t q = 0; q < degrees; ++q) {
    width[q] = 2 + std::to_string(q).size();
    for (auto& [name, h] : rows)
      if (q < h.size()) width[q] = std::max(width[q], h[q].to_string().size());
  }
  auto pad = [](std::string s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  std::ostringstream out;
  out << pad("", width0);
  for (std::size_t q = 0; q < degrees; ++q) out << pad("H^" + std::to_string(q), width[q]);
  out << '\n';
  for (auto& [name, h] : rows) {
    out << pad(name, width0);
    for (std::size_t q = 0; q < degrees; ++q) out << pad(q < h.size() ? h[q].to_string() : "0", width[q]);
    out << '\n';
  }
  std::string s = out.str();
  // Strip trailing blanks per line.
  std::string trimmed;
  std::istringstream lines(s);
  std::string line;
  while (std::getline(lines, line)) {
    line.erase(line.find_last_not_of(' ') + 1);
    trimmed += line + '\n';
  }
  return trimmed;
}

// -------------------------------------------------------------- resolution

ResolutionReport verify_resolution(const CoxeterGraph& g, const HomologyOptions& opts) {
  if (g.rank() > 4) raise(ErrorCode::EnumerationBudgetExceeded, "group-ring check supports rank <= 4");
  ChainComplex c = boundary_matrices(g, opts);
  ResolutionReport rep;
  const std::size_t n = g.rank();
  for (std::size_t q = 2; q <= n; ++q) {
    // Integer level: integer[q-1] * integer[q].
    const auto& A = c.integer[q - 1];
    const auto& B = c.integer[q];
    for (std::size_t i = 0; i < A.size(); ++i)
      for (std::size_t j = 0; j < B[0].size(); ++j) {
        mpz_class s = 0;
        for (std::size_t k = 0; k < B.size(); ++k) s += A[i][k] * B[k][j];
        if (s != 0) {
          rep.integer_ok = false;
          rep.failures.emplace_back(q, c.cells[q][j], c.cells[q - 2][i]);
        }
      }
  }

  auto G = garside_structure_of(g, true, opts.budgets);
  std::map<Subset, std::vector<const BoundaryEntry*>> from;
  for (std::size_t q = 1; q <= n; ++q)
    for (auto& e : c.symbolic[q]) from[e.from].push_back(&e);
  for (std::size_t q = 2; q <= n; ++q)
    for (Subset T : c.cells[q]) {
      std::map<Subset, std::map<std::vector<Simple>, long long>> total;
      for (auto* e1 : from[T])
        for (auto* e2 : from[e1->to])
          for (auto& a : e1->terms)
            for (auto& b : e2->terms) {
              std::vector<std::size_t> w(a.word.begin(), a.word.end());
              w.insert(w.end(), b.word.begin(), b.word.end());
              total[e2->to][monoid_normal_form(*G, w)] += a.coefficient * b.coefficient;
            }
      for (auto& [to, sum] : total)
        for (auto& [nf, coeff] : sum)
          if (coeff != 0) {
            rep.group_ring_ok = false;
            rep.failures.emplace_back(q, T, to);
            break;
          }
    }
  return rep;
}

// ------------------------------------------------------------------ poset

struct HatCoxPoset::Impl {
  std::shared_ptr<const FiniteCoxeterGroup> W;
  std::vector<Subset> support;
};

HatCoxPoset::HatCoxPoset(const CoxeterGraph& g, const Budgets& budgets) : graph_(g) {
  auto impl = std::make_shared<Impl>();
  impl->W = FiniteCoxeterGroup::of(g, budgets.enumeration);
  order_ = impl->W->size();
  const std::size_t n = g.rank();
  if (n > 20 || order_ << n > budgets.enumeration * 8)
    raise(ErrorCode::EnumerationBudgetExceeded, "poset too large");
  impl->support.resize(order_);
  for (FiniteCoxeterGroup::Id w = 0; w < order_; ++w) impl->support[w] = subset_of(impl->W->word(w));
  for (Subset T = 0; T < (Subset{1} << n); ++T)
    for (FiniteCoxeterGroup::Id w = 0; w < order_; ++w) cells_.push_back({T, w});
  impl_ = impl;
}

std::size_t HatCoxPoset::dimension(const Cell& c) const { return static_cast<std::size_t>(std::popcount(c.T)); }

bool HatCoxPoset::leq(const Cell& a, const Cell& b) const {
  if ((a.T & b.T) != b.T) return false;
  const auto& W = *impl_->W;
  auto x = W.multiply(W.inverse(a.w), b.w);
  if ((impl_->support[x] & ~a.T) != 0) return false;  // different W_{T1} cosets
  return (W.right_descents(x) & b.T) == 0;
}

HatCoxPoset::Cell HatCoxPoset::act(std::uint32_t u, const Cell& c) const { return {c.T, impl_->W->multiply(u, c.w)}; }

std::vector<HatCoxPoset::Cell> HatCoxPoset::facets(const Cell& c) const {
  const auto& W = *impl_->W;
  std::vector<Cell> out;
  for (Letter s : subset_letters(c.T)) {
    Subset K = c.T & ~(Subset{1} << s);
    for (FiniteCoxeterGroup::Id x = 0; x < order_; ++x)
      if ((impl_->support[x] & ~c.T) == 0 && (W.right_descents(x) & K) == 0) out.push_back({K, W.multiply(c.w, x)});
  }
  return out;
}

std::vector<Subset> HatCoxPoset::quotient_cells() const {
  std::vector<Subset> out;
  for (auto& c : cells_)
    if (c.w == 0) out.push_back(c.T);
  return out;
}

std::vector<int> HatCoxPoset::two_cell_boundary(Letter s, Letter t) const {
  if (s == t || s >= graph_.rank() || t >= graph_.rank()) raise(ErrorCode::BadParameter, "need two distinct vertices");
  const auto& W = *impl_->W;
  Cell top{(Subset{1} << s) | (Subset{1} << t), 0};
  auto edges = facets(top);
  auto has_edge = [&](Letter x, FiniteCoxeterGroup::Id w) {
    return std::any_of(edges.begin(), edges.end(), [&](const Cell& e) { return e.T == (Subset{1} << x) && e.w == w; });
  };
  // Follow edges leaving each vertex in their positive direction, alternating letters.
  auto path = [&](Letter a, Letter b) {
    std::vector<int> word;
    FiniteCoxeterGroup::Id v = 0;
    for (std::size_t i = 0; i < 64; ++i) {
      Letter x = i % 2 == 0 ? a : b;
      if (W.right_descents(v) >> x & 1) break;
      if (!has_edge(x, v)) raise(ErrorCode::InternalError, "missing edge in a two-cell");
      word.push_back(static_cast<int>(x) + 1);
      v = W.right(v, x);
    }
    return std::make_pair(word, v);
  };
  auto [up1, end1] = path(s, t);
  auto [up2, end2] = path(t, s);
  if (end1 != end2) raise(ErrorCode::InternalError, "two-cell boundary does not close");
  for (auto it = up2.rbegin(); it != up2.rend(); ++it) up1.push_back(-*it);
  return up1;
}

Abelianization abelianization(const CoxeterGraph& g) {
  const std::size_t n = g.rank();
  IntMatrix rel;
  for (Letter s = 0; s < n; ++s)
    for (Letter t = s + 1; t < n; ++t) {
      unsigned m = g.label(s, t);
      if (m == kInfinity) continue;
      // prod(s,t;m) prod(t,s;m)^-1 in exponent coordinates.
      std::vector<mpz_class> row(n, 0);
      for (unsigned i = 0; i < m; ++i) {
        row[i % 2 == 0 ? s : t] += 1;
        row[i % 2 == 0 ? t : s] -= 1;
      }
      rel.push_back(row);
    }
  Abelianization a;
  auto inv = rel.empty() ? std::vector<mpz_class>{} : smith_invariants(rel);
  a.rank = n - inv.size();
  for (auto& d : inv)
    if (d > 1) a.torsion.push_back(d);
  return a;
}

}  // namespace gk
