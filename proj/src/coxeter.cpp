#include "garside_kit/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>

#include "garside_kit/coxeter_engine.hpp"
#include "garside_kit/errors.hpp"
#include "garside_kit/roots.hpp"

namespace gk {

bool CoxElement::operator<(const CoxElement& o) const {
  if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
  return word_ < o.word_;
}

namespace {

void check_letters(const CoxeterGraph& g, const std::vector<Letter>& w) {
  for (Letter s : w)
    if (s >= g.rank()) raise(ErrorCode::LetterNotInGraph, "letter index " + std::to_string(s) + " out of range");
}

void check_same_graph(const CoxElement& u, const CoxElement& v) {
  if (u.graph() != v.graph()) raise(ErrorCode::GraphMismatch, "elements live over different graphs");
}

// Finite engine when the group is spherical and fits the budget.
std::shared_ptr<const FiniteCoxeterGroup> engine_if_small(const CoxeterGraph& g) {
  if (!is_spherical(g)) return nullptr;
  try {
    return FiniteCoxeterGroup::of(g);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::EnumerationBudgetExceeded) return nullptr;
    throw;
  }
}

// The columns w^-1(e_s); column s is negative iff s is a left descent of w.
struct InverseColumns {
  std::shared_ptr<const ReflectionRep> rep;
  std::vector<Root> cols;

  InverseColumns(const CoxeterGraph& g, const std::vector<Letter>& word) : rep(ReflectionRep::of(g)) {
    for (Letter s = 0; s < g.rank(); ++s) cols.push_back(rep->simple_root(s));
    for (Letter s : word)
      for (auto& c : cols) c = rep->reflect(s, c);
  }

  int column_sign(Letter s) const {
    int sg = cols[s].sign();
    if (sg == 0) raise(ErrorCode::MixedSignRoot, "root with coordinates of both signs");
    return sg;
  }

  // w <- s w, i.e. w^-1 <- w^-1 s.
  void strip_left(Letter s) {
    const std::size_t n = cols.size();
    Root cs = cols[s];
    for (Letter t = 0; t < n; ++t) {
      const CycloReal& b = rep->form(t, s);
      if (t == s) {
        cols[t] = -cs;
        continue;
      }
      if (b.is_zero()) continue;
      CycloReal k = b * mpq_class(2);
      for (std::size_t i = 0; i < n; ++i) cols[t].coords[i] -= k * cs.coords[i];
    }
  }

  std::vector<Letter> descents() const {
    std::vector<Letter> out;
    for (Letter s = 0; s < cols.size(); ++s)
      if (column_sign(s) < 0) out.push_back(s);
    return out;
  }
};

std::vector<Letter> linear_canonical(const CoxeterGraph& g, const std::vector<Letter>& word) {
  InverseColumns m(g, word);
  std::vector<Letter> out;
  for (;;) {
    Letter pick = static_cast<Letter>(g.rank());
    for (Letter s = 0; s < g.rank(); ++s)
      if (m.column_sign(s) < 0) {
        pick = s;
        break;
      }
    if (pick == g.rank()) break;
    out.push_back(pick);
    m.strip_left(pick);
  }
  return out;
}

std::vector<Letter> concat(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  std::vector<Letter> r(a);
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::vector<Letter> reversed(const std::vector<Letter>& a) { return {a.rbegin(), a.rend()}; }

}  // namespace

std::optional<std::vector<Letter>> tits_reduce(const CoxeterGraph& g, const std::vector<Letter>& word,
                                               std::size_t orbit_budget) {
  check_letters(g, word);
  if (g.rank() > 250) raise(ErrorCode::BadParameter, "Tits reduction supports rank <= 250");
  std::string cur;
  for (Letter s : word) cur.push_back(static_cast<char>(s));
  for (;;) {
    std::unordered_set<std::string> orbit{cur};
    std::deque<std::string> queue{cur};
    std::optional<std::string> shorter;
    while (!queue.empty() && !shorter) {
      std::string x = std::move(queue.front());
      queue.pop_front();
      const std::size_t len = x.size();
      for (std::size_t i = 0; i + 1 < len; ++i) {
        if (x[i] == x[i + 1]) {  // type I
          shorter = x.substr(0, i) + x.substr(i + 2);
          break;
        }
      }
      if (shorter) break;
      for (std::size_t i = 0; i + 1 < len; ++i) {
        char s = x[i], t = x[i + 1];
        unsigned m = g.label(static_cast<Letter>(s), static_cast<Letter>(t));
        if (m == kInfinity || i + m > len) continue;
        bool alternating = true;
        for (std::size_t k = 0; k < m && alternating; ++k)
          alternating = x[i + k] == (k % 2 == 0 ? s : t);
        if (!alternating) continue;
        std::string y = x;
        for (std::size_t k = 0; k < m; ++k) y[i + k] = (k % 2 == 0 ? t : s);  // type II
        if (orbit.insert(y).second) {
          if (orbit.size() > orbit_budget) return std::nullopt;
          queue.push_back(std::move(y));
        }
      }
    }
    if (shorter) {
      cur = std::move(*shorter);
      continue;
    }
    const std::string& best = *std::min_element(orbit.begin(), orbit.end());
    std::vector<Letter> out;
    for (char c : best) out.push_back(static_cast<unsigned char>(c));
    return out;
  }
}

CoxElement canonical_element(const CoxeterGraph& g, const std::vector<Letter>& word) {
  check_letters(g, word);
  if (auto eng = engine_if_small(g)) return eng->element(eng->id_of(word));
  return CoxElement(g, linear_canonical(g, word));
}

CoxElement reduce_word(const CoxeterGraph& g, const std::vector<Letter>& word, const Budgets& budgets) {
  check_letters(g, word);
  if (auto w = tits_reduce(g, word, budgets.tits_orbit)) return CoxElement(g, std::move(*w));
  return canonical_element(g, word);
}

bool elements_equal(const CoxeterGraph& g, const std::vector<Letter>& u, const std::vector<Letter>& v,
                    const Budgets& budgets) {
  return reduce_word(g, u, budgets).word() == reduce_word(g, v, budgets).word();
}

CoxElement identity_element(const CoxeterGraph& g) { return CoxElement(g, {}); }

CoxElement generator(const CoxeterGraph& g, Letter s) {
  check_letters(g, {s});
  return CoxElement(g, {s});
}

CoxElement multiply(const CoxElement& u, const CoxElement& v) {
  check_same_graph(u, v);
  return canonical_element(u.graph(), concat(u.word(), v.word()));
}

CoxElement inverse(const CoxElement& u) { return canonical_element(u.graph(), reversed(u.word())); }

std::vector<Letter> left_descents(const CoxElement& w) {
  if (auto eng = engine_if_small(w.graph())) {
    std::vector<Letter> out;
    auto mask = eng->left_descents(eng->id_of(w));
    for (Letter s = 0; s < w.graph().rank(); ++s)
      if (mask >> s & 1) out.push_back(s);
    return out;
  }
  return InverseColumns(w.graph(), w.word()).descents();
}

std::vector<Letter> right_descents(const CoxElement& w) {
  return left_descents(CoxElement(w.graph(), reversed(w.word())));
}

bool weak_le(const CoxElement& u, const CoxElement& v) {
  check_same_graph(u, v);
  if (u.length() > v.length()) return false;
  auto q = canonical_element(u.graph(), concat(reversed(u.word()), v.word()));
  return u.length() + q.length() == v.length();
}

CoxElement weak_order_meet(const CoxElement& u, const CoxElement& v) {
  check_same_graph(u, v);
  const CoxeterGraph& g = u.graph();
  std::vector<Letter> out;
  if (auto eng = engine_if_small(g)) {
    auto a = eng->id_of(u), b = eng->id_of(v);
    for (;;) {
      auto common = eng->left_descents(a) & eng->left_descents(b);
      if (!common) break;
      Letter s = static_cast<Letter>(__builtin_ctzll(common));
      out.push_back(s);
      a = eng->left(a, s);
      b = eng->left(b, s);
    }
    return canonical_element(g, out);
  }
  InverseColumns a(g, u.word()), b(g, v.word());
  for (;;) {
    Letter pick = static_cast<Letter>(g.rank());
    for (Letter s = 0; s < g.rank(); ++s)
      if (a.column_sign(s) < 0 && b.column_sign(s) < 0) {
        pick = s;
        break;
      }
    if (pick == g.rank()) break;
    out.push_back(pick);
    a.strip_left(pick);
    b.strip_left(pick);
  }
  return canonical_element(g, out);
}

CoxElement weak_order_join(const CoxElement& u, const CoxElement& v, const Budgets& budgets) {
  check_same_graph(u, v);
  const CoxeterGraph& g = u.graph();
  if (!is_spherical(g)) raise(ErrorCode::NotSpherical, "weak-order joins need a finite Coxeter group");
  auto eng = FiniteCoxeterGroup::of(g, budgets.enumeration);
  auto a = eng->id_of(u), b = eng->id_of(v);
  auto ia = eng->inverse(a), ib = eng->inverse(b);
  // Ids are sorted by length, so the first common upper bound is the least.
  for (FiniteCoxeterGroup::Id x = 0; x < eng->size(); ++x) {
    if (eng->length(x) < std::max(u.length(), v.length())) continue;
    if (eng->length(a) + eng->length(eng->multiply(ia, x)) != eng->length(x)) continue;
    if (eng->length(b) + eng->length(eng->multiply(ib, x)) != eng->length(x)) continue;
    return eng->element(x);
  }
  raise(ErrorCode::InternalError, "no common upper bound in a finite Coxeter group");
}

CoxElement longest_element(const CoxeterGraph& g) {
  if (!is_spherical(g)) raise(ErrorCode::NotSpherical, "only finite Coxeter groups have a longest element");
  auto rep = ReflectionRep::of(g);
  // Columns w(e_s); right-multiplying by s lengthens w iff w(e_s) > 0.
  std::vector<Letter> word;
  std::vector<Root> cols;
  for (Letter s = 0; s < g.rank(); ++s) cols.push_back(rep->simple_root(s));
  for (;;) {
    Letter pick = static_cast<Letter>(g.rank());
    for (Letter s = 0; s < g.rank(); ++s) {
      int sg = cols[s].sign();
      if (sg == 0) raise(ErrorCode::MixedSignRoot, "root with coordinates of both signs");
      if (sg > 0) {
        pick = s;
        break;
      }
    }
    if (pick == g.rank()) break;
    word.push_back(pick);
    // w <- w s: column t becomes w(e_t) - 2<e_t,e_s> w(e_s).
    Root cs = cols[pick];
    for (Letter t = 0; t < g.rank(); ++t) {
      if (t == pick) {
        cols[t] = -cs;
        continue;
      }
      const CycloReal& b = rep->form(t, pick);
      if (b.is_zero()) continue;
      CycloReal k = b * mpq_class(2);
      for (std::size_t i = 0; i < g.rank(); ++i) cols[t].coords[i] -= k * cs.coords[i];
    }
  }
  return canonical_element(g, word);
}

std::vector<CoxElement> enumerate_group(const CoxeterGraph& g, std::size_t max_length, const Budgets& budgets) {
  std::vector<CoxElement> out{identity_element(g)};
  if (auto eng = engine_if_small(g)) {
    for (FiniteCoxeterGroup::Id x = 1; x < eng->size() && eng->length(x) <= max_length; ++x) {
      if (out.size() >= budgets.enumeration)
        raise(ErrorCode::EnumerationBudgetExceeded, "enumeration exceeded its budget");
      out.push_back(eng->element(x));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::set<std::vector<Letter>> seen{{}};
  std::vector<CoxElement> frontier{out[0]};
  for (std::size_t len = 0; len < max_length && !frontier.empty(); ++len) {
    std::set<std::vector<Letter>> next;
    for (const auto& w : frontier) {
      auto rd = right_descents(w);
      for (Letter s = 0; s < g.rank(); ++s) {
        if (std::binary_search(rd.begin(), rd.end(), s)) continue;
        auto c = canonical_element(g, concat(w.word(), {s}));
        if (seen.insert(c.word()).second) next.insert(c.word());
      }
    }
    frontier.clear();
    for (auto& wd : next) {
      if (out.size() >= budgets.enumeration)
        raise(ErrorCode::EnumerationBudgetExceeded, "enumeration exceeded its budget");
      frontier.emplace_back(g, wd);
      out.push_back(frontier.back());
    }
  }
  return out;
}

}  // namespace gk
