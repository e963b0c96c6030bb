#include "garside_kit/lkb.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "garside_kit/artin.hpp"
#include "garside_kit/errors.hpp"

namespace gk {

// ------------------------------------------------------------- TwoVarPoly

TwoVarPoly::TwoVarPoly(const mpq_class& c) {
  if (c != 0) t_[{0, 0}] = c;
}

TwoVarPoly TwoVarPoly::x() { return monomial(1, 1, 0); }
TwoVarPoly TwoVarPoly::y() { return monomial(1, 0, 1); }

TwoVarPoly TwoVarPoly::monomial(const mpq_class& c, unsigned dx, unsigned dy) {
  TwoVarPoly p;
  if (c != 0) p.t_[{dx, dy}] = c;
  return p;
}

TwoVarPoly TwoVarPoly::in_y(const RatPoly& q) {
  TwoVarPoly p;
  for (std::size_t i = 0; i < q.coeffs().size(); ++i)
    if (q.coeffs()[i] != 0) p.t_[{0, static_cast<unsigned>(i)}] = q.coeffs()[i];
  return p;
}

unsigned TwoVarPoly::degree_x() const {
  unsigned d = 0;
  for (auto& [e, c] : t_) d = std::max(d, e.first);
  return d;
}

RatPoly TwoVarPoly::coeff_x(unsigned k) const {
  std::vector<mpq_class> c;
  for (auto& [e, v] : t_)
    if (e.first == k) {
      if (c.size() <= e.second) c.resize(e.second + 1);
      c[e.second] = v;
    }
  return RatPoly(c);
}

mpq_class TwoVarPoly::eval(const mpq_class& xv, const mpq_class& yv) const {
  mpq_class s = 0;
  for (auto& [e, c] : t_) {
    mpq_class term = c;
    for (unsigned i = 0; i < e.first; ++i) term *= xv;
    for (unsigned i = 0; i < e.second; ++i) term *= yv;
    s += term;
  }
  return s;
}

TwoVarPoly& TwoVarPoly::operator+=(const TwoVarPoly& o) {
  for (auto& [e, c] : o.t_) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

TwoVarPoly TwoVarPoly::operator+(const TwoVarPoly& o) const {
  TwoVarPoly r = *this;
  r += o;
  return r;
}

TwoVarPoly TwoVarPoly::operator-() const {
  TwoVarPoly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

TwoVarPoly TwoVarPoly::operator-(const TwoVarPoly& o) const { return *this + (-o); }

TwoVarPoly TwoVarPoly::operator*(const TwoVarPoly& o) const {
  TwoVarPoly r;
  if (is_zero() || o.is_zero()) return r;
  for (auto& [a, ca] : t_)
    for (auto& [b, cb] : o.t_) {
      Exponents e{a.first + b.first, a.second + b.second};
      auto it = r.t_.find(e);
      if (it == r.t_.end())
        r.t_.emplace(e, ca * cb);
      else
        it->second += ca * cb;
    }
  for (auto it = r.t_.begin(); it != r.t_.end();)
    it = it->second == 0 ? r.t_.erase(it) : std::next(it);
  return r;
}

std::string TwoVarPoly::to_string() const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Exponents, mpq_class>> terms(t_.begin(), t_.end());
  std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) {
    unsigned da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (auto& [e, c] : terms) {
    mpq_class a = abs(c);
    std::string mono;
    auto var = [&](const char* v, unsigned d) {
      if (d == 0) return;
      if (!mono.empty()) mono += '*';
      mono += v;
      if (d > 1) mono += "^" + std::to_string(d);
    };
    var("x", e.first);
    var("y", e.second);
    std::string body = mono.empty() ? rational_string(a) : (a == 1 ? mono : rational_string(a) + "*" + mono);
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  PolyMatrix c(n, std::vector<TwoVarPoly>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

PolyMatrix identity_matrix(std::size_t n) {
  PolyMatrix m(n, std::vector<TwoVarPoly>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = TwoVarPoly(1);
  return m;
}

namespace {

// Exact quotient a / d under lex order (x before y); the division must be exact.
TwoVarPoly exact_div(TwoVarPoly a, const TwoVarPoly& d) {
  if (d.is_zero()) raise(ErrorCode::InternalError, "division by the zero polynomial");
  auto lt = *d.terms().rbegin();
  TwoVarPoly q;
  while (!a.is_zero()) {
    auto la = *a.terms().rbegin();
    if (la.first.first < lt.first.first || la.first.second < lt.first.second)
      raise(ErrorCode::InternalError, "inexact polynomial division");
    TwoVarPoly t = TwoVarPoly::monomial(la.second / lt.second, la.first.first - lt.first.first,
                                        la.first.second - lt.first.second);
    q += t;
    a = a - t * d;
  }
  return q;
}

}  // namespace

TwoVarPoly determinant(const PolyMatrix& m0) {
  // Fraction-free Bareiss elimination.
  PolyMatrix m = m0;
  const std::size_t n = m.size();
  if (n == 0) return TwoVarPoly(1);
  TwoVarPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return TwoVarPoly();
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// ----------------------------------------------------------------- basis

std::size_t LKBBasis::simple(Letter s) const {
  std::vector<int> e(graph.rank(), 0);
  e[s] = 1;
  return index.at(e);
}

int LKBBasis::pairing(Letter s, const std::vector<int>& f) const {
  int p = 0;
  for (std::size_t j = 0; j < f.size(); ++j) p += form[s][j] * f[j];
  return p;
}

std::string LKBBasis::root_string(std::size_t i) const {
  std::string out = "(";
  for (std::size_t j = 0; j < roots[i].size(); ++j) out += (j ? "," : "") + std::to_string(roots[i][j]);
  return out + ")";
}

LKBBasis lkb_basis(const CoxeterGraph& g) {
  const std::size_t n = g.rank();
  for (Letter s = 0; s < n; ++s)
    for (Letter t = s + 1; t < n; ++t) {
      unsigned m = g.label(s, t);
      if (m == kInfinity || m > 3) raise(ErrorCode::NotSmallType, "label " + g.name(s) + "-" + g.name(t) + " exceeds 3");
    }
  for (Letter a = 0; a < n; ++a)
    for (Letter b = a + 1; b < n; ++b)
      for (Letter c = b + 1; c < n; ++c)
        if (g.label(a, b) == 3 && g.label(b, c) == 3 && g.label(a, c) == 3)
          raise(ErrorCode::HasTriangle, "triangle " + g.name(a) + "," + g.name(b) + "," + g.name(c));
  if (!is_spherical(g)) raise(ErrorCode::NotSpherical, "LKB basis needs a spherical graph");

  LKBBasis B;
  B.graph = g;
  B.form.assign(n, std::vector<int>(n, 0));
  for (Letter s = 0; s < n; ++s)
    for (Letter t = 0; t < n; ++t) B.form[s][t] = s == t ? 2 : (g.label(s, t) == 3 ? -1 : 0);
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (Letter s = 0; s < n; ++s) {
    std::vector<int> e(n, 0);
    e[s] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto f = queue.front();
    queue.pop_front();
    for (Letter s = 0; s < n; ++s) {
      int p = B.pairing(s, f);
      if (p >= 0) continue;  // only moves upward
      auto h = f;
      h[s] -= p;
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  B.roots.assign(seen.begin(), seen.end());
  std::sort(B.roots.begin(), B.roots.end(), [](const auto& a, const auto& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  for (std::size_t i = 0; i < B.roots.size(); ++i) B.index[B.roots[i]] = i;
  return B;
}

// --------------------------------------------------------------- matrices

PolyMatrix lkb_phi_matrix(const LKBBasis& B, Letter s) {
  if (s >= B.graph.rank()) raise(ErrorCode::LetterNotInGraph, "vertex out of range");
  const std::size_t N = B.size();
  PolyMatrix M(N, std::vector<TwoVarPoly>(N));
  const std::size_t es = B.simple(s);
  const TwoVarPoly y = TwoVarPoly::y();
  for (std::size_t f = 0; f < N; ++f) {
    if (f == es) continue;
    const auto& root = B.roots[f];
    int a = B.pairing(s, root);
    auto shifted = [&](int k) {
      auto h = root;
      h[s] += k;
      auto it = B.index.find(h);
      if (it == B.index.end()) raise(ErrorCode::InternalError, "reflection left the root set");
      return it->second;
    };
    if (a == 0) {
      M[f][f] = TwoVarPoly(1);
    } else if (a > 0) {
      M[shifted(-a)][f] = y;
    } else {
      M[f][f] = TwoVarPoly(1) - y;
      M[shifted(-a)][f] = TwoVarPoly(1);
    }
  }
  return M;
}

PolyMatrix lkb_Phi_matrix(const LKBBasis& B, Letter s, const TTable& T) {
  if (T.size() != B.graph.rank()) raise(ErrorCode::BadParameter, "T table has the wrong number of vertices");
  PolyMatrix M = lkb_phi_matrix(B, s);
  const std::size_t es = B.simple(s);
  if (T[s].size() != B.size()) raise(ErrorCode::BadParameter, "T table has the wrong number of roots");
  for (std::size_t f = 0; f < B.size(); ++f) M[es][f] += TwoVarPoly::x() * TwoVarPoly::in_y(T[s][f]);
  return M;
}

std::vector<PolyMatrix> lkb_matrices(const LKBBasis& B, const TTable* T) {
  std::vector<PolyMatrix> out;
  for (Letter s = 0; s < B.graph.rank(); ++s) out.push_back(T ? lkb_Phi_matrix(B, s, *T) : lkb_phi_matrix(B, s));
  return out;
}

bool LKBValidation::invertible() const {
  return std::none_of(determinants.begin(), determinants.end(), [](const TwoVarPoly& d) { return d.is_zero(); });
}

namespace {

PolyMatrix alternating_product(const std::vector<PolyMatrix>& mats, Letter s, Letter t, unsigned m) {
  PolyMatrix acc = mats[s];
  for (unsigned i = 1; i < m; ++i) acc = matmul(acc, mats[i % 2 == 0 ? s : t]);
  return acc;
}

bool relation_holds(const std::vector<PolyMatrix>& mats, const CoxeterGraph& g, Letter s, Letter t) {
  unsigned m = g.label(s, t);
  return alternating_product(mats, s, t, m) == alternating_product(mats, t, s, m);
}

}  // namespace

LKBValidation validate_lkb(const LKBBasis& B, const std::vector<PolyMatrix>& mats) {
  const auto& g = B.graph;
  if (mats.size() != g.rank()) raise(ErrorCode::BadParameter, "one matrix per vertex expected");
  LKBValidation v;
  for (Letter s = 0; s < g.rank(); ++s)
    for (Letter t = s + 1; t < g.rank(); ++t)
      if (!relation_holds(mats, g, s, t)) v.violated.emplace_back(s, t);
  for (auto& m : mats) v.determinants.push_back(determinant(m));
  return v;
}

// ----------------------------------------------------------------- solver

namespace {

// Reduced row echelon form; returns a basis of the nullspace.
std::vector<std::vector<mpq_class>> nullspace(std::vector<std::vector<mpq_class>> A, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < A.size(); ++c) {
    std::size_t p = row;
    while (p < A.size() && A[p][c] == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[row]);
    mpq_class inv = 1 / A[row][c];
    for (auto& v : A[row]) v *= inv;
    for (std::size_t r = 0; r < A.size(); ++r)
      if (r != row && A[r][c] != 0) {
        mpq_class f = A[r][c];
        for (std::size_t j = c; j < cols; ++j) A[r][j] -= f * A[row][j];
      }
    pivots.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -A[i][free];
    // Scale to a primitive integer vector.
    mpz_class l = 1;
    for (auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    mpz_class gcd = 0;
    for (auto& q : v) {
      q *= l;
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), mpz_class(q).get_mpz_t());
    }
    if (gcd != 0)
      for (auto& q : v) q /= gcd;
    basis.push_back(v);
  }
  return basis;
}

// Integer vectors with |c|_1 = L, first coordinate largest first.
void vectors_with_norm(std::size_t k, long L, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  std::size_t i = cur.size();
  long used = 0;
  for (long c : cur) used += std::labs(c);
  long rem = L - used;
  if (i + 1 == k) {
    cur.push_back(rem);
    out.push_back(cur);
    cur.pop_back();
    if (rem > 0) {
      cur.push_back(-rem);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (long v = rem; v >= -rem; --v) {
    cur.push_back(v);
    vectors_with_norm(k, L, cur, out);
    cur.pop_back();
  }
}

TTable table_from(const std::vector<mpq_class>& c, std::size_t rank, std::size_t N, unsigned d) {
  TTable T(rank, std::vector<RatPoly>(N));
  for (std::size_t s = 0; s < rank; ++s)
    for (std::size_t f = 0; f < N; ++f) {
      std::vector<mpq_class> coeffs(d + 1);
      for (unsigned k = 0; k <= d; ++k) coeffs[k] = c[(s * N + f) * (d + 1) + k];
      T[s][f] = RatPoly(coeffs);
    }
  return T;
}

}  // namespace

TTable solve_T_table(const CoxeterGraph& g, unsigned degree_bound) {
  if (g.rank() > 3) raise(ErrorCode::BudgetExceeded, "T-table solver supports rank <= 3");
  if (degree_bound > 3) raise(ErrorCode::BudgetExceeded, "T-table solver supports degree <= 3");
  LKBBasis B = lkb_basis(g);
  const std::size_t r = g.rank(), N = B.size();
  auto phi = lkb_matrices(B, nullptr);

  for (unsigned d = 0; d <= degree_bound; ++d) {
    const std::size_t unknowns = r * N * (d + 1);
    // Linear equations: the x^1 part of each relation, evaluated on unit tables.
    std::map<std::tuple<Letter, Letter, std::size_t, std::size_t, unsigned>, std::vector<mpq_class>> eqs;
    for (std::size_t u = 0; u < unknowns; ++u) {
      std::vector<mpq_class> c(unknowns, 0);
      c[u] = 1;
      auto mats = lkb_matrices(B, nullptr);
      TTable T = table_from(c, r, N, d);
      for (Letter s = 0; s < r; ++s) mats[s] = lkb_Phi_matrix(B, s, T);
      for (Letter s = 0; s < r; ++s)
        for (Letter t = s + 1; t < r; ++t) {
          unsigned m = g.label(s, t);
          PolyMatrix lhs = alternating_product(mats, s, t, m), rhs = alternating_product(mats, t, s, m);
          for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
              TwoVarPoly diff = lhs[i][j] - rhs[i][j];
              for (auto& [e, v] : diff.terms()) {
                if (e.first != 1) continue;
                auto& row = eqs[{s, t, i, j, e.second}];
                if (row.empty()) row.assign(unknowns, 0);
                row[u] = v;
              }
            }
        }
    }
    std::vector<std::vector<mpq_class>> A;
    for (auto& [key, row] : eqs) A.push_back(row);
    auto basis = nullspace(A, unknowns);
    if (basis.empty()) continue;

    const long max_norm = 4;
    const std::size_t max_candidates = 200000;
    std::size_t tried = 0;
    for (long L = 1; L <= max_norm; ++L) {
      std::vector<std::vector<long>> combos;
      std::vector<long> cur;
      vectors_with_norm(basis.size(), L, cur, combos);
      for (auto& combo : combos) {
        if (++tried > max_candidates) break;
        std::vector<mpq_class> c(unknowns, 0);
        for (std::size_t b = 0; b < basis.size(); ++b)
          if (combo[b] != 0)
            for (std::size_t u = 0; u < unknowns; ++u) c[u] += combo[b] * basis[b][u];
        TTable T = table_from(c, r, N, d);
        auto mats = lkb_matrices(B, &T);
        bool ok = true;
        for (Letter s = 0; s < r && ok; ++s)
          for (Letter t = s + 1; t < r && ok; ++t) ok = relation_holds(mats, g, s, t);
        if (!ok) continue;
        for (auto& m : mats)
          if (determinant(m).is_zero()) ok = false;
        if (ok) return T;
      }
    }
  }
  raise(ErrorCode::NoSolutionFound, "no T table within the degree bound and search budget");
}

// ------------------------------------------------------------ injectivity

InjectivityReport injectivity_scan(const CoxeterGraph& g, const std::vector<PolyMatrix>& mats, std::size_t max_length,
                                   const Budgets& budgets) {
  auto G = garside_structure_of(g);
  if (mats.size() != G->num_atoms()) raise(ErrorCode::BadParameter, "one matrix per atom expected");
  auto key = [](const PolyMatrix& m) {
    std::string k;
    for (auto& row : m) {
      for (auto& e : row) k += e.to_string() + ",";
      k += ";";
    }
    return k;
  };
  InjectivityReport rep;
  struct Node {
    std::vector<Simple> nf;
    std::vector<std::size_t> word;
    PolyMatrix mat;
  };
  std::vector<Node> level{{{}, {}, identity_matrix(mats.empty() ? 0 : mats[0].size())}};
  std::map<std::string, std::vector<std::size_t>> by_matrix;
  auto record = [&](const Node& n) {
    ++rep.elements;
    auto [it, inserted] = by_matrix.emplace(key(n.mat), n.word);
    if (!inserted) {
      ++rep.collision_count;
      if (rep.collisions.size() < 20) rep.collisions.emplace_back(it->second, n.word);
    }
  };
  record(level[0]);
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Node> next;
    std::set<std::vector<Simple>> seen;
    for (auto& node : level)
      for (std::size_t a = 0; a < G->num_atoms(); ++a) {
        auto w = node.word;
        w.push_back(a);
        auto nf = monoid_normal_form(*G, w);
        if (!seen.insert(nf).second) continue;
        if (rep.elements + next.size() >= budgets.enumeration)
          raise(ErrorCode::BudgetExceeded, "injectivity scan exceeded the enumeration budget");
        next.push_back({nf, w, matmul(node.mat, mats[a])});
      }
    for (auto& n : next) record(n);
    level = std::move(next);
  }
  return rep;
}

// --------------------------------------------------------------------- io

RatPoly parse_poly(const std::string& text, char var) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) raise(ErrorCode::MalformedSpec, "empty polynomial");
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^') {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  terms.push_back(s.substr(start));
  const std::string v(1, var);
  const std::regex term("([+-]?)(\\d+(?:/\\d+)?)?(?:\\*?(" + v + ")(?:\\^(\\d+))?)?");
  std::vector<mpq_class> coeffs;
  for (auto& t : terms) {
    std::smatch m;
    if (t.empty() || t == "+" || t == "-" || !std::regex_match(t, m, term) || (!m[2].matched && !m[3].matched))
      raise(ErrorCode::MalformedSpec, "bad polynomial term: " + t);
    mpq_class c = m[2].matched ? mpq_class(m[2].str()) : mpq_class(1);
    c.canonicalize();
    if (m[1] == "-") c = -c;
    std::size_t deg = m[3].matched ? (m[4].matched ? std::stoul(m[4].str()) : 1) : 0;
    if (coeffs.size() <= deg) coeffs.resize(deg + 1);
    coeffs[deg] += c;
  }
  return RatPoly(coeffs);
}

std::string write_T_table(const LKBBasis& B, const TTable& T) {
  std::ostringstream out;
  for (Letter s = 0; s < B.graph.rank(); ++s)
    for (std::size_t f = 0; f < B.size(); ++f)
      out << B.graph.name(s) << ' ' << B.root_string(f) << " -> " << T[s][f].to_string("y") << '\n';
  return out.str();
}

TTable read_T_table(const LKBBasis& B, const std::string& text) {
  TTable T(B.graph.rank(), std::vector<RatPoly>(B.size()));
  std::istringstream in(text);
  std::string line;
  static const std::regex entry(R"(\s*(\S+)\s*\(([-\d,\s]+)\)\s*->\s*(.+?)\s*)");
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::smatch m;
    if (!std::regex_match(line, m, entry)) raise(ErrorCode::MalformedSpec, "bad T-table line: " + line);
    Letter s = B.graph.index_of(m[1]);
    std::vector<int> root;
    std::string coords = m[2];
    std::replace(coords.begin(), coords.end(), ',', ' ');
    std::istringstream cs(coords);
    int c;
    while (cs >> c) root.push_back(c);
    auto it = B.index.find(root);
    if (it == B.index.end()) raise(ErrorCode::MalformedSpec, "not a positive root: (" + m[2].str() + ")");
    T[s][it->second] = parse_poly(m[3]);
  }
  return T;
}

std::string matrix_triples(const LKBBasis& B, const PolyMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (!m[i][j].is_zero()) out << B.root_string(i) << ' ' << B.root_string(j) << ' ' << m[i][j].to_string() << '\n';
  return out.str();
}

}  // namespace gk
