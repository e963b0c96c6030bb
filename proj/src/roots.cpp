#include "garside_kit/roots.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <unordered_map>

#include <json.hpp>

#include "garside_kit/coxeter.hpp"
#include "garside_kit/errors.hpp"

namespace gk {

bool Root::operator<(const Root& o) const {
  if (coords.size() != o.coords.size()) return coords.size() < o.coords.size();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].lex_less(o.coords[i])) return true;
    if (o.coords[i].lex_less(coords[i])) return false;
  }
  return false;
}

Root Root::operator-() const {
  Root r;
  for (auto& c : coords) r.coords.push_back(-c);
  return r;
}

int Root::sign() const {
  bool pos = false, neg = false;
  for (auto& c : coords) {
    int s = c.sign();
    if (s > 0) pos = true;
    if (s < 0) neg = true;
  }
  if (pos && !neg) return 1;
  if (neg && !pos) return -1;
  return 0;
}

ReflectionRep::ReflectionRep(const CoxeterGraph& g) : graph_(g) {
  field_ = CycloField::get(2 * g.label_lcm());
  const std::size_t n = g.rank();
  form_.assign(n, std::vector<CycloReal>(n, CycloReal(field_, 0)));
  two_form_ = form_;
  for (Letter s = 0; s < n; ++s)
    for (Letter t = 0; t < n; ++t) {
      if (s == t) {
        form_[s][t] = CycloReal(field_, 1);
      } else if (g.label(s, t) == kInfinity) {
        form_[s][t] = CycloReal(field_, -1);
      } else {
        // <e_s, e_t> = -cos(pi/m) = -(2cos(pi/m))/2
        form_[s][t] = CycloReal(field_, field_->two_cos_pi_over(g.label(s, t)) * mpq_class(-1, 2));
      }
      two_form_[s][t] = form_[s][t] * mpq_class(2);
    }
}

std::shared_ptr<const ReflectionRep> ReflectionRep::of(const CoxeterGraph& g) {
  static std::mutex mu;
  static std::unordered_map<std::string, std::shared_ptr<const ReflectionRep>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(g.key());
    if (it != cache.end()) return it->second;
  }
  auto rep = std::make_shared<const ReflectionRep>(g);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(g.key(), rep).first->second;
}

Root ReflectionRep::simple_root(Letter s) const {
  Root r;
  r.coords.assign(graph_.rank(), zero());
  r.coords.at(s) = CycloReal(field_, 1);
  return r;
}

CycloReal ReflectionRep::pairing(const Root& x, Letter s) const {
  CycloReal acc = zero();
  for (Letter t = 0; t < graph_.rank(); ++t)
    if (!x.coords[t].is_zero()) acc += x.coords[t] * form_[t][s];
  return acc;
}

CycloReal ReflectionRep::inner(const Root& x, const Root& y) const {
  CycloReal acc = zero();
  for (Letter t = 0; t < graph_.rank(); ++t) {
    if (y.coords[t].is_zero()) continue;
    acc += pairing(x, t) * y.coords[t];
  }
  return acc;
}

Root ReflectionRep::reflect(Letter s, const Root& x) const {
  CycloReal c = zero();
  for (Letter t = 0; t < graph_.rank(); ++t)
    if (!x.coords[t].is_zero()) c += x.coords[t] * two_form_[t][s];
  Root r = x;
  r.coords[s] -= c;
  return r;
}

Root ReflectionRep::act(const std::vector<Letter>& word, const Root& x) const {
  Root r = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = reflect(*it, r);
  return r;
}

std::string ReflectionRep::root_to_json(const Root& r) const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (Letter s = 0; s < graph_.rank(); ++s) j[graph_.name(s)] = r.coords[s].to_string();
  return j.dump();
}

Matrix bilinear_form(const CoxeterGraph& g) { return ReflectionRep::of(g)->form_matrix(); }

Root reflect(const CoxeterGraph& g, Letter s, const Root& x) { return ReflectionRep::of(g)->reflect(s, x); }

Root act(const CoxElement& w, const Root& x) { return ReflectionRep::of(w.graph())->act(w.word(), x); }

std::vector<Root> positive_roots(const CoxeterGraph& g, unsigned max_depth) {
  if (max_depth == 0 && !is_spherical(g))
    raise(ErrorCode::NotSpherical, "positive roots of an infinite root system need a depth bound");
  auto rep = ReflectionRep::of(g);
  std::vector<Root> out;
  std::map<Root, std::size_t> seen;
  std::deque<std::pair<Root, unsigned>> queue;
  for (Letter s = 0; s < g.rank(); ++s) {
    Root e = rep->simple_root(s);
    seen.emplace(e, out.size());
    out.push_back(e);
    queue.emplace_back(e, 0);
  }
  while (!queue.empty()) {
    auto [f, depth] = queue.front();
    queue.pop_front();
    if (max_depth != 0 && depth >= max_depth) continue;
    for (Letter s = 0; s < g.rank(); ++s) {
      Root r = rep->reflect(s, f);
      int sg = r.sign();
      if (sg == 0) raise(ErrorCode::MixedSignRoot, "root with coordinates of both signs");
      if (sg < 0) {
        if (r != -rep->simple_root(s)) raise(ErrorCode::MixedSignRoot, "reflection made a non-simple root negative");
        continue;
      }
      if (seen.count(r)) continue;
      seen.emplace(r, out.size());
      out.push_back(r);
      queue.emplace_back(std::move(r), depth + 1);
    }
  }
  return out;
}

std::vector<Root> inversion_set(const CoxElement& w, unsigned depth) {
  const CoxeterGraph& g = w.graph();
  unsigned d = 0;
  if (!is_spherical(g)) d = std::max<unsigned>({depth, static_cast<unsigned>(w.length()), 1u});
  auto rep = ReflectionRep::of(g);
  std::vector<Letter> inv(w.word().rbegin(), w.word().rend());
  std::vector<Root> out;
  for (const Root& f : positive_roots(g, d)) {
    int sg = rep->act(inv, f).sign();
    if (sg == 0) raise(ErrorCode::MixedSignRoot, "root with coordinates of both signs");
    if (sg < 0) out.push_back(f);
  }
  return out;
}

CycloReal determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return CycloReal();
  auto field = m[0][0].field();
  if (n > 20) raise(ErrorCode::BadParameter, "cofactor determinant limited to 20x20");
  // Expansion along rows with memoization over used-column sets.
  std::unordered_map<std::uint32_t, CycloReal> memo;
  std::function<CycloReal(std::size_t, std::uint32_t)> rec = [&](std::size_t row, std::uint32_t used) {
    if (row == n) return CycloReal(field, 1);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    CycloReal acc(field, 0);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      if (!m[row][c].is_zero()) {
        CycloReal term = m[row][c] * rec(row + 1, used | (1u << c));
        acc = sign > 0 ? acc + term : acc - term;
      }
      sign = -sign;  // alternates over the remaining columns only
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(0, 0);
}

bool is_positive_definite(const Matrix& form) {
  for (std::size_t k = 1; k <= form.size(); ++k) {
    Matrix minor(k);
    for (std::size_t i = 0; i < k; ++i) minor[i].assign(form[i].begin(), form[i].begin() + k);
    if (determinant(minor).sign() <= 0) return false;
  }
  return true;
}

}  // namespace gk
