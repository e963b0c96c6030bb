#include "garside_kit/reversing.hpp"

#include "garside_kit/errors.hpp"

namespace gk {

Complement::Complement(std::size_t n) : n_(n), table_(n * n) {
  for (std::size_t x = 0; x < n; ++x) table_[x * n + x] = AtomWord{};
}

void Complement::set(std::size_t x, std::size_t y, AtomWord w) {
  if (x == y && !w.empty()) raise(ErrorCode::MalformedSpec, "complement must satisfy f(x,x) = empty");
  table_.at(x * n_ + y) = std::move(w);
}

const AtomWord* Complement::get(std::size_t x, std::size_t y) const {
  const auto& e = table_.at(x * n_ + y);
  return e ? &*e : nullptr;
}

Complement Complement::artin(const CoxeterGraph& g, Side side) {
  Complement f(g.rank());
  for (Letter s = 0; s < g.rank(); ++s)
    for (Letter t = 0; t < g.rank(); ++t) {
      if (s == t || g.label(s, t) == kInfinity) continue;
      unsigned m = g.label(s, t);
      AtomWord w;
      if (side == Side::Left) {
        for (unsigned k = 0; k + 1 < m; ++k) w.push_back(k % 2 == 0 ? t : s);
      } else {
        for (unsigned k = 0; k + 1 < m; ++k) w.push_back(k % 2 == 0 ? s : t);
        std::reverse(w.begin(), w.end());
      }
      f.set(s, t, std::move(w));
    }
  return f;
}

Complement Complement::from_structure(const GarsideStructure& G, Side side) {
  Complement f(G.num_atoms());
  for (std::size_t x = 0; x < G.num_atoms(); ++x)
    for (std::size_t y = 0; y < G.num_atoms(); ++y) {
      if (x == y) continue;
      Simple a = G.atom(x), b = G.atom(y);
      if (side == Side::Left)
        f.set(x, y, G.atom_word(G.left_quotient(a, G.join(a, b))));
      else
        f.set(x, y, G.atom_word(G.right_quotient(G.join_right(a, b), b)));
    }
  return f;
}

SignedWord positive_word(const AtomWord& w) {
  SignedWord s;
  for (auto x : w) s.push_back(static_cast<int>(x) + 1);
  return s;
}

SignedWord inverse_word(const SignedWord& w) {
  SignedWord s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) s.push_back(-*it);
  return s;
}

ReversingResult reverse(const Complement& f, const SignedWord& w0, Side side, std::uint64_t budget) {
  SignedWord w = w0;
  for (int l : w)
    if (l == 0 || static_cast<std::size_t>(std::abs(l)) > f.size())
      raise(ErrorCode::OutOfRange, "letter outside the complement alphabet");
  ReversingResult res;
  std::size_t i = 0;
  while (i + 1 < w.size()) {
    // Left: pattern x^-1 y. Right: pattern y x^-1.
    bool hit = side == Side::Left ? (w[i] < 0 && w[i + 1] > 0) : (w[i] > 0 && w[i + 1] < 0);
    if (!hit) {
      ++i;
      continue;
    }
    if (++res.steps > budget) raise(ErrorCode::ReversingDiverged, "reversing exceeded its step budget");
    std::size_t x, y;
    if (side == Side::Left) {
      x = static_cast<std::size_t>(-w[i]) - 1;
      y = static_cast<std::size_t>(w[i + 1]) - 1;
    } else {
      y = static_cast<std::size_t>(w[i]) - 1;
      x = static_cast<std::size_t>(-w[i + 1]) - 1;
    }
    const AtomWord* fxy = f.get(x, y);
    const AtomWord* fyx = f.get(y, x);
    if (!fxy || !fyx) raise(ErrorCode::ReversingDiverged, "no complement entry: the letters have no common multiple");
    SignedWord rep;
    if (side == Side::Left) {
      rep = positive_word(*fxy);
      auto tail = inverse_word(positive_word(*fyx));
      rep.insert(rep.end(), tail.begin(), tail.end());
    } else {
      rep = inverse_word(positive_word(*fxy));
      auto tail = positive_word(*fyx);
      rep.insert(rep.end(), tail.begin(), tail.end());
    }
    w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
    w.insert(w.begin() + static_cast<long>(i), rep.begin(), rep.end());
    i = i > 0 ? i - 1 : 0;
  }
  if (side == Side::Left) {
    for (int l : w) {
      if (l > 0) res.positive.push_back(static_cast<std::size_t>(l) - 1);
    }
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      if (*it < 0) res.negative.push_back(static_cast<std::size_t>(-*it) - 1);
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      if (*it < 0) res.negative.push_back(static_cast<std::size_t>(-*it) - 1);
    for (int l : w)
      if (l > 0) res.positive.push_back(static_cast<std::size_t>(l) - 1);
  }
  return res;
}

AtomWord complement_left(const Complement& f, const AtomWord& u, const AtomWord& v, std::uint64_t budget) {
  SignedWord w = inverse_word(positive_word(u));
  auto pv = positive_word(v);
  w.insert(w.end(), pv.begin(), pv.end());
  return reverse(f, w, Side::Left, budget).positive;
}

AtomWord complement_right(const Complement& g, const AtomWord& u, const AtomWord& v, std::uint64_t budget) {
  SignedWord w = positive_word(v);
  auto iu = inverse_word(positive_word(u));
  w.insert(w.end(), iu.begin(), iu.end());
  return reverse(g, w, Side::Right, budget).negative;
}

namespace {

AtomWord cat(AtomWord a, const AtomWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

AtomWord rev(const AtomWord& a) { return {a.rbegin(), a.rend()}; }

bool positive_equal(const Complement& f, const GarsideStructure* G, const AtomWord& a, const AtomWord& b,
                    std::uint64_t budget) {
  if (G) return monoid_normal_form(*G, a) == monoid_normal_form(*G, b);
  SignedWord w = inverse_word(positive_word(a));
  auto pb = positive_word(b);
  w.insert(w.end(), pb.begin(), pb.end());
  auto r = reverse(f, w, Side::Left, budget);
  return r.positive.empty() && r.negative.empty();
}

}  // namespace

bool check_coherence(const Complement& f, Side side, const GarsideStructure* G, std::uint64_t budget) {
  const std::size_t n = f.size();
  if (side == Side::Left) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const AtomWord *fxy = f.get(x, y), *fxz = f.get(x, z), *fyx = f.get(y, x), *fyz = f.get(y, z);
          if (!fxy || !fxz || !fyx || !fyz) continue;
          AtomWord lhs = cat(cat({x}, *fxy), complement_left(f, *fxy, *fxz, budget));
          AtomWord rhs = cat(cat({y}, *fyx), complement_left(f, *fyx, *fyz, budget));
          if (!positive_equal(f, G, lhs, rhs, budget)) return false;
        }
    return true;
  }
  // Mirror image: m(x,y) = rev(g(y,x)) is a left complement of the reversed monoid.
  Complement m(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y)
        if (const AtomWord* e = f.get(y, x)) m.set(x, y, rev(*e));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const AtomWord *fxy = m.get(x, y), *fxz = m.get(x, z), *fyx = m.get(y, x), *fyz = m.get(y, z);
        if (!fxy || !fxz || !fyx || !fyz) continue;
        AtomWord lhs = cat(cat({x}, *fxy), complement_left(m, *fxy, *fxz, budget));
        AtomWord rhs = cat(cat({y}, *fyx), complement_left(m, *fyx, *fyz, budget));
        if (G) {
          if (monoid_normal_form(*G, rev(lhs)) != monoid_normal_form(*G, rev(rhs))) return false;
        } else if (!positive_equal(m, nullptr, lhs, rhs, budget)) {
          return false;
        }
      }
  return true;
}

bool word_problem_reversing(const Complement& f, const SignedWord& w, std::uint64_t budget) {
  auto r = reverse(f, w, Side::Left, budget);
  SignedWord second = inverse_word(positive_word(r.negative));
  auto pv = positive_word(r.positive);
  second.insert(second.end(), pv.begin(), pv.end());
  auto r2 = reverse(f, second, Side::Left, budget);
  return r2.positive.empty() && r2.negative.empty();
}

AtomWord reversing_join(const Complement& f, const AtomWord& u, const AtomWord& v, std::uint64_t budget) {
  return cat(u, complement_left(f, u, v, budget));
}

AtomWord reversing_meet(const Complement& f, const Complement& g, const AtomWord& u, const AtomWord& v,
                        std::uint64_t budget) {
  AtomWord up = complement_left(f, u, v, budget);
  AtomWord vp = complement_left(f, v, u, budget);
  AtomWord z = complement_right(g, vp, up, budget);
  return complement_right(g, u, z, budget);
}

}  // namespace gk
