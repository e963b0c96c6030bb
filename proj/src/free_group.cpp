#include "garside_kit/free_group.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "garside_kit/artin.hpp"
#include "garside_kit/errors.hpp"

namespace gk {

FreeWord free_reduce(const std::vector<int>& letters) { return FreeWord(letters); }

FreeWord::FreeWord(std::vector<int> letters) {
  for (int x : letters) {
    if (x == 0) raise(ErrorCode::OutOfRange, "free word letter 0");
    if (!letters_.empty() && letters_.back() == -x)
      letters_.pop_back();
    else
      letters_.push_back(x);
  }
}

FreeWord FreeWord::inverse() const {
  std::vector<int> out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(-*it);
  return FreeWord(out);
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<int> all = letters_;
  all.insert(all.end(), o.letters_.begin(), o.letters_.end());
  return FreeWord(all);
}

std::string FreeWord::to_string(const std::string& prefix) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int x : letters_) {
    if (!out.empty()) out += ' ';
    out += prefix + std::to_string(std::abs(x));
    if (x < 0) out += "^-1";
  }
  return out;
}

FreeWord cyclic_reduce(const FreeWord& w) {
  const auto& l = w.letters();
  std::size_t i = 0, j = l.size();
  while (j - i >= 2 && l[i] == -l[j - 1]) {
    ++i;
    --j;
  }
  return FreeWord(std::vector<int>(l.begin() + static_cast<long>(i), l.begin() + static_cast<long>(j)));
}

bool free_conjugate(const FreeWord& u, const FreeWord& v) {
  auto a = cyclic_reduce(u).letters(), b = cyclic_reduce(v).letters();
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto doubled = a;
  doubled.insert(doubled.end(), a.begin(), a.end());
  return std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) != doubled.end();
}

FreeWord parse_free_word(const std::string& text) {
  static const std::regex tok(R"((-?)(?:[A-Za-z]+)?(\d+)(?:\^(-?\d+))?)");
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  if (cleaned.find_first_not_of(" \t") == std::string::npos || cleaned == "1") return FreeWord();
  std::istringstream in(cleaned);
  std::vector<int> letters;
  std::string t;
  while (in >> t) {
    std::smatch m;
    if (!std::regex_match(t, m, tok)) raise(ErrorCode::MalformedSpec, "bad free word token: " + t);
    int k = std::stoi(m[2]);
    int e = m[3].matched ? std::stoi(m[3]) : 1;
    if (m[1].length()) e = -e;
    for (int i = 0; i < std::abs(e); ++i) letters.push_back(e < 0 ? -k : k);
  }
  return FreeWord(letters);
}

FreeEndo FreeEndo::identity(std::size_t rank) {
  std::vector<FreeWord> im;
  for (std::size_t k = 1; k <= rank; ++k) im.push_back(FreeWord::generator(static_cast<int>(k)));
  return FreeEndo(im);
}

FreeWord FreeEndo::apply(const FreeWord& w) const {
  std::vector<int> out;
  for (int x : w.letters()) {
    std::size_t k = static_cast<std::size_t>(std::abs(x));
    if (k > images_.size()) raise(ErrorCode::OutOfRange, "free letter outside the rank");
    const auto& img = x > 0 ? images_[k - 1] : images_[k - 1].inverse();
    out.insert(out.end(), img.letters().begin(), img.letters().end());
  }
  return FreeWord(out);
}

FreeEndo FreeEndo::compose(const FreeEndo& other) const {
  std::vector<FreeWord> im;
  for (auto& w : other.images_) im.push_back(apply(w));
  return FreeEndo(im);
}

namespace {

void check_letter(std::size_t n, int letter) {
  if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) >= n)
    raise(ErrorCode::OutOfRange, "braid letter " + std::to_string(letter) + " out of range");
}

FreeEndo word_rep(std::size_t rank, const SignedWord& word, FreeEndo (*gen)(std::size_t, int), std::size_t n) {
  FreeEndo acc = FreeEndo::identity(rank);
  for (int x : word) acc = acc.compose(gen(n, x));
  return acc;
}

}  // namespace

FreeEndo artin_generator(std::size_t n, int letter) {
  check_letter(n, letter);
  int k = std::abs(letter);
  auto im = FreeEndo::identity(n).images();
  FreeWord xk = FreeWord::generator(k), xk1 = FreeWord::generator(k + 1);
  if (letter > 0) {
    im[k - 1] = xk.inverse() * xk1 * xk;
    im[k] = xk;
  } else {
    // Inverse: x_k -> x_{k+1}, x_{k+1} -> x_{k+1} x_k x_{k+1}^-1.
    im[k - 1] = xk1;
    im[k] = xk1 * xk * xk1.inverse();
  }
  return FreeEndo(im);
}

FreeEndo artin_rep(std::size_t n, const SignedWord& word) { return word_rep(n, word, artin_generator, n); }

FreeWord artin_rep_apply(std::size_t n, const SignedWord& word, const FreeWord& w) {
  for (int x : w.letters())
    if (static_cast<std::size_t>(std::abs(x)) > n) raise(ErrorCode::OutOfRange, "free letter outside x_1..x_n");
  return artin_rep(n, word).apply(w);
}

FreeEndo rho_D_generator(std::size_t n, int letter) {
  if (n < 2) raise(ErrorCode::OutOfRange, "rho_D needs n >= 2");
  check_letter(n, letter);
  const std::size_t r = n - 1;
  int i = std::abs(letter);
  auto im = FreeEndo::identity(r).images();
  FreeWord y1 = FreeWord::generator(1);
  if (i == 1) {
    // y_j -> y_1^-1 y_j, inverse y_j -> y_1 y_j.
    for (std::size_t j = 2; j <= r; ++j) {
      FreeWord yj = FreeWord::generator(static_cast<int>(j));
      im[j - 1] = (letter > 0 ? y1.inverse() : y1) * yj;
    }
  } else {
    FreeWord a = FreeWord::generator(i - 1), b = FreeWord::generator(i);
    if (letter > 0) {
      im[i - 2] = b;
      im[i - 1] = b * a.inverse() * b;
    } else {
      // Inverse: y_{i-1} -> y_{i-1} y_i^-1 y_{i-1}, y_i -> y_{i-1}.
      im[i - 2] = a * b.inverse() * a;
      im[i - 1] = a;
    }
  }
  return FreeEndo(im);
}

FreeEndo rho_D(std::size_t n, const SignedWord& word) { return word_rep(n - 1, word, rho_D_generator, n); }

FreeWord rho_D_apply(std::size_t n, const SignedWord& word, const FreeWord& w) {
  if (n < 2) raise(ErrorCode::OutOfRange, "rho_D needs n >= 2");
  for (int x : w.letters())
    if (static_cast<std::size_t>(std::abs(x)) > n - 1) raise(ErrorCode::OutOfRange, "free letter outside y_1..y_{n-1}");
  return rho_D(n, word).apply(w);
}

bool artin_image_membership(std::size_t n, const FreeEndo& alpha) {
  if (alpha.rank() != n) raise(ErrorCode::RankMismatch, "endomorphism rank differs from n");
  std::vector<int> prod;
  for (int k = static_cast<int>(n); k >= 1; --k) prod.push_back(k);
  FreeWord p(prod);
  if (alpha.apply(p) != p) return false;
  std::vector<bool> used(n + 1, false);
  for (std::size_t k = 0; k < n; ++k) {
    auto core = cyclic_reduce(alpha.images()[k]).letters();
    if (core.size() != 1 || core[0] < 0) return false;
    auto j = static_cast<std::size_t>(core[0]);
    if (j > n || used[j]) return false;
    used[j] = true;
  }
  return true;
}

namespace {

struct SemiElement {
  FreeWord free;
  SignedWord braid;
};

}  // namespace

SemidirectReport semidirect_relation_check(SemidirectKind kind, std::size_t n) {
  if (n < 2 || n > 8) raise(ErrorCode::BudgetExceeded, "semidirect check supports 2 <= n <= 8");
  if (kind == SemidirectKind::D && n < 4) raise(ErrorCode::BadParameter, "D_n needs n >= 4");
  SemidirectReport rep;
  rep.graph = builtin_graph((kind == SemidirectKind::B ? "B" : "D") + std::to_string(n));
  auto G = garside_structure_of(builtin_graph("A" + std::to_string(n - 1)));
  auto rho = [&](const SignedWord& a) { return kind == SemidirectKind::B ? artin_rep(n, a) : rho_D(n, a); };

  std::vector<SemiElement> gens(n);
  if (kind == SemidirectKind::B) {
    gens[0] = {FreeWord::generator(1), {}};
    for (std::size_t i = 2; i <= n; ++i) gens[i - 1] = {FreeWord(), {static_cast<int>(i - 1)}};
  } else {
    gens[0] = {FreeWord::generator(1), {1}};
    gens[1] = {FreeWord(), {1}};
    for (std::size_t i = 3; i <= n; ++i) gens[i - 1] = {FreeWord(), {static_cast<int>(i - 1)}};
  }
  auto mul = [&](const SemiElement& u, const SemiElement& v) {
    SemiElement out{u.free * rho(u.braid).apply(v.free), u.braid};
    out.braid.insert(out.braid.end(), v.braid.begin(), v.braid.end());
    return out;
  };
  auto prod = [&](Letter s, Letter t, unsigned m) {
    SemiElement acc;
    for (unsigned i = 0; i < m; ++i) acc = mul(acc, gens[i % 2 == 0 ? s : t]);
    return acc;
  };
  for (Letter s = 0; s < n; ++s)
    for (Letter t = s + 1; t < n; ++t) {
      unsigned m = rep.graph.label(s, t);
      auto a = prod(s, t, m), b = prod(t, s, m);
      SignedWord q = b.braid;
      for (auto it = a.braid.rbegin(); it != a.braid.rend(); ++it) q.push_back(-*it);
      ++rep.relations_checked;
      if (a.free != b.free || !word_problem_nf(*G, q)) rep.failures.emplace_back(s, t);
    }
  return rep;
}

long long abelian_character(const CoxeterGraph& g, const std::map<Letter, long long>& weights, const SignedWord& word) {
  auto weight = [&](Letter s) {
    auto it = weights.find(s);
    return it == weights.end() ? 0LL : it->second;
  };
  for (auto& [s, w] : weights)
    if (s >= g.rank()) raise(ErrorCode::LetterNotInGraph, "weight on a letter outside the graph");
  for (Letter s = 0; s < g.rank(); ++s)
    for (Letter t = s + 1; t < g.rank(); ++t) {
      unsigned m = g.label(s, t);
      if (m != kInfinity && m % 2 == 1 && weight(s) != weight(t))
        raise(ErrorCode::NotAHomomorphism, "weights differ across the odd edge " + g.name(s) + "-" + g.name(t));
    }
  long long total = 0;
  for (int x : word) {
    if (x == 0 || static_cast<std::size_t>(std::abs(x)) > g.rank()) raise(ErrorCode::OutOfRange, "letter out of range");
    Letter s = static_cast<Letter>(std::abs(x) - 1);
    total += x > 0 ? weight(s) : -weight(s);
  }
  return total;
}

std::map<Letter, long long> b_type_character(std::size_t n) {
  std::map<Letter, long long> w;
  for (Letter s = 0; s < n; ++s) w[s] = s == 0 ? 1 : 0;
  return w;
}

}  // namespace gk
