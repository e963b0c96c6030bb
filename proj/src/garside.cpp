#include "garside_kit/garside.hpp"

#include <algorithm>
#include <sstream>

#include "garside_kit/errors.hpp"

namespace gk {

Simple GarsideStructure::meet_right(Simple a, Simple b) const {
  return right_complement(join(left_complement(a), left_complement(b)));
}

Simple GarsideStructure::join_right(Simple a, Simple b) const {
  return right_complement(meet(left_complement(a), left_complement(b)));
}

Simple GarsideStructure::right_quotient(Simple a, Simple b) const {
  return left_quotient(left_complement(a), left_complement(b));
}

Simple GarsideStructure::tau_power(Simple a, long long k) const {
  // tau has finite order, but k is small in practice.
  if (k >= 0)
    for (long long i = 0; i < k; ++i) a = tau(a);
  else
    for (long long i = 0; i < -k; ++i) a = tau_inverse(a);
  return a;
}

std::optional<Simple> GarsideStructure::simple_from_atoms(const std::vector<std::size_t>& atoms) const {
  Simple c = identity();
  for (auto i : atoms) {
    auto p = product(c, atom(i));
    if (!p) return std::nullopt;
    c = *p;
  }
  return c;
}

std::vector<Simple> left_weight(const GarsideStructure& G, std::vector<Simple> f) {
  const Simple id = G.identity();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = f.size(); i-- > 1;) {
      Simple a = f[i - 1], b = f[i];
      if (b == id) continue;
      Simple t = G.meet(G.right_complement(a), b);
      if (t == id) continue;
      auto at = G.product(a, t);
      if (!at) raise(ErrorCode::InternalError, "Garside structure: a d_R(a)-divisor product is not simple");
      f[i - 1] = *at;
      f[i] = G.left_quotient(t, b);
      changed = true;
    }
  }
  f.erase(std::remove(f.begin(), f.end(), id), f.end());
  return f;
}

GarsideElement normalize(const GarsideStructure& G, long long p, std::vector<Simple> factors) {
  factors = left_weight(G, std::move(factors));
  std::size_t k = 0;
  while (k < factors.size() && factors[k] == G.delta()) ++k;
  GarsideElement e;
  e.delta_power = p + static_cast<long long>(k);
  e.factors.assign(factors.begin() + static_cast<long>(k), factors.end());
  return e;
}

GarsideElement from_simple(const GarsideStructure& G, Simple a) { return normalize(G, 0, {a}); }

GarsideElement delta_power(const GarsideStructure&, long long k) {
  GarsideElement e;
  e.delta_power = k;
  return e;
}

GarsideElement atom_element(const GarsideStructure& G, std::size_t i) { return from_simple(G, G.atom(i)); }

std::vector<Simple> monoid_normal_form(const GarsideStructure& G, const std::vector<std::size_t>& word) {
  std::vector<Simple> f;
  for (auto i : word) {
    if (i >= G.num_atoms()) raise(ErrorCode::OutOfRange, "atom index out of range");
    f.push_back(G.atom(i));
  }
  return left_weight(G, std::move(f));
}

GarsideElement delta_normal_form(const GarsideStructure& G, const SignedWord& word) {
  long long p = 0;
  std::vector<Simple> f;
  for (int l : word) {
    std::size_t i = static_cast<std::size_t>(std::abs(l)) - 1;
    if (l == 0 || i >= G.num_atoms()) raise(ErrorCode::OutOfRange, "atom index out of range");
    if (l > 0) {
      f.push_back(G.atom(i));
    } else {
      // A a^-1 = A Delta^-1 d_L(a) = Delta^-1 tau(A) d_L(a)
      --p;
      for (auto& x : f) x = G.tau(x);
      f.push_back(G.left_complement(G.atom(i)));
    }
  }
  return normalize(G, p, std::move(f));
}

GarsideElement tau_element(const GarsideStructure& G, const GarsideElement& a, long long k) {
  GarsideElement r = a;
  for (auto& x : r.factors) x = G.tau_power(x, k);
  return r;
}

GarsideElement multiply(const GarsideStructure& G, const GarsideElement& a, const GarsideElement& b) {
  // Delta^p A Delta^q B = Delta^(p+q) tau^-q(A) B
  std::vector<Simple> f;
  f.reserve(a.factors.size() + b.factors.size());
  for (Simple x : a.factors) f.push_back(G.tau_power(x, -b.delta_power));
  f.insert(f.end(), b.factors.begin(), b.factors.end());
  return normalize(G, a.delta_power + b.delta_power, std::move(f));
}

GarsideElement inverse(const GarsideStructure& G, const GarsideElement& a) {
  // (Delta^p a_1...a_r)^-1 = Delta^(-p-r) prod_{i=r..1} tau^(p+i-1)(d_L(a_i))
  const long long p = a.delta_power;
  const long long r = static_cast<long long>(a.factors.size());
  std::vector<Simple> f;
  for (long long i = r; i >= 1; --i) f.push_back(G.tau_power(G.left_complement(a.factors[i - 1]), p + i - 1));
  return normalize(G, -p - r, std::move(f));
}

GarsideElement power(const GarsideStructure& G, const GarsideElement& a, long long n) {
  GarsideElement base = n < 0 ? inverse(G, a) : a;
  GarsideElement r;
  for (long long i = 0; i < std::llabs(n); ++i) r = multiply(G, r, base);
  return r;
}

GarsideElement conjugate(const GarsideStructure& G, const GarsideElement& a, const GarsideElement& c) {
  return multiply(G, multiply(G, inverse(G, c), a), c);
}

SignedWord to_word(const GarsideStructure& G, const GarsideElement& a) {
  SignedWord w;
  auto dw = G.atom_word(G.delta());
  for (long long i = 0; i < std::llabs(a.delta_power); ++i) {
    if (a.delta_power > 0)
      for (auto x : dw) w.push_back(static_cast<int>(x) + 1);
    else
      for (auto it = dw.rbegin(); it != dw.rend(); ++it) w.push_back(-static_cast<int>(*it) - 1);
  }
  for (Simple s : a.factors)
    for (auto x : G.atom_word(s)) w.push_back(static_cast<int>(x) + 1);
  return w;
}

std::vector<Simple> positive_factors(const GarsideStructure& G, const GarsideElement& a) {
  if (a.delta_power < 0) raise(ErrorCode::InternalError, "element is not positive");
  std::vector<Simple> f(static_cast<std::size_t>(a.delta_power), G.delta());
  f.insert(f.end(), a.factors.begin(), a.factors.end());
  return f;
}

bool word_problem_nf(const GarsideStructure& G, const SignedWord& word) {
  return delta_normal_form(G, word).is_identity();
}

namespace {

Simple head(const GarsideStructure& G, const GarsideElement& x) {
  if (x.delta_power > 0) return G.delta();
  if (x.factors.empty()) return G.identity();
  return x.factors[0];
}

GarsideElement meet_left(const GarsideStructure& G, const GarsideElement& a, const GarsideElement& b) {
  long long k = std::max(0LL, -std::min(a.delta_power, b.delta_power));
  GarsideElement x = multiply(G, delta_power(G, k), a);
  GarsideElement y = multiply(G, delta_power(G, k), b);
  std::vector<Simple> common;
  for (;;) {
    Simple m = G.meet(head(G, x), head(G, y));
    if (m == G.identity()) break;
    common.push_back(m);
    GarsideElement mi = inverse(G, from_simple(G, m));
    x = multiply(G, mi, x);
    y = multiply(G, mi, y);
  }
  return multiply(G, delta_power(G, -k), normalize(G, 0, std::move(common)));
}

// Left reversing over the alphabet of simples: a^-1 b => (a\(a v b)) (b\(a v b))^-1.
GarsideElement join_left(const GarsideStructure& G, const GarsideElement& a, const GarsideElement& b) {
  long long k = std::max(0LL, -std::min(a.delta_power, b.delta_power));
  GarsideElement x = multiply(G, delta_power(G, k), a);
  GarsideElement y = multiply(G, delta_power(G, k), b);
  std::vector<std::pair<Simple, bool>> w;  // (simple, inverted)
  auto xf = positive_factors(G, x);
  for (auto it = xf.rbegin(); it != xf.rend(); ++it) w.emplace_back(*it, true);
  for (Simple s : positive_factors(G, y)) w.emplace_back(s, false);
  std::size_t i = 0;
  while (i + 1 < w.size()) {
    if (!(w[i].second && !w[i + 1].second)) {
      ++i;
      continue;
    }
    Simple s = w[i].first, t = w[i + 1].first;
    Simple j = G.join(s, t);
    Simple u = G.left_quotient(s, j), v = G.left_quotient(t, j);
    std::vector<std::pair<Simple, bool>> rep;
    if (u != G.identity()) rep.emplace_back(u, false);
    if (v != G.identity()) rep.emplace_back(v, true);
    w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
    w.insert(w.begin() + static_cast<long>(i), rep.begin(), rep.end());
    i = i > 0 ? i - 1 : 0;
  }
  std::vector<Simple> tail;
  for (auto& [s, inv] : w)
    if (!inv) tail.push_back(s);
  GarsideElement lcm = multiply(G, x, normalize(G, 0, std::move(tail)));
  return multiply(G, delta_power(G, -k), lcm);
}

}  // namespace

GarsideElement lattice_meet(const GarsideStructure& G, const GarsideElement& a, const GarsideElement& b, Side side) {
  if (side == Side::Left) return meet_left(G, a, b);
  return inverse(G, join_left(G, inverse(G, a), inverse(G, b)));
}

GarsideElement lattice_join(const GarsideStructure& G, const GarsideElement& a, const GarsideElement& b, Side side) {
  if (side == Side::Left) return join_left(G, a, b);
  return inverse(G, meet_left(G, inverse(G, a), inverse(G, b)));
}

bool left_le(const GarsideStructure& G, const GarsideElement& a, const GarsideElement& b) {
  return multiply(G, inverse(G, a), b).delta_power >= 0;
}

SymmetricForm symmetric_form(const GarsideStructure& G, const GarsideElement& a) {
  SymmetricForm sf;
  if (a.delta_power >= 0) {
    sf.positive = positive_factors(G, a);
    return sf;
  }
  GarsideElement b = delta_power(G, -a.delta_power);
  GarsideElement c;
  c.factors = a.factors;
  GarsideElement d = meet_left(G, b, c);
  GarsideElement di = inverse(G, d);
  sf.negative = positive_factors(G, multiply(G, di, b));
  sf.positive = positive_factors(G, multiply(G, di, c));
  return sf;
}

std::string simple_to_string(const GarsideStructure& G, Simple s) {
  std::string out;
  for (auto i : G.atom_word(s)) {
    if (!out.empty()) out += ' ';
    out += G.atom_name(i);
  }
  return out;
}

std::string element_to_string(const GarsideStructure& G, const GarsideElement& a) {
  std::ostringstream os;
  os << "Δ^" << a.delta_power;
  for (Simple s : a.factors) os << " [" << simple_to_string(G, s) << "]";
  return os.str();
}

}  // namespace gk
