#include "garside_kit/artin.hpp"

#include <algorithm>
#include <sstream>

#include "garside_kit/errors.hpp"

namespace gk {

// ---------------------------------------------------------------- Coxeter

CoxeterGarside::CoxeterGarside(const CoxeterGraph& g, const Budgets& budgets)
    : W_(FiniteCoxeterGroup::of(g, budgets.enumeration)) {
  const auto& W = *W_;
  const std::size_t N = W.size();
  const Simple w0 = W.longest();
  for (std::size_t s = 0; s < W.rank(); ++s) atoms_.push_back(W.right(0, static_cast<Letter>(s)));
  dl_.resize(N);
  dr_.resize(N);
  tau_.resize(N);
  tau_inv_.resize(N);
  for (Simple w = 0; w < N; ++w) {
    Simple wi = W.inverse(w);
    dl_[w] = W.multiply(w0, wi);
    dr_[w] = W.multiply(wi, w0);
    tau_[w] = W.multiply(W.multiply(w0, w), w0);
  }
  for (Simple w = 0; w < N; ++w) tau_inv_[tau_[w]] = w;
}

std::optional<Simple> CoxeterGarside::product(Simple a, Simple b) const {
  Simple c = W_->multiply(a, b);
  if (W_->length(c) != W_->length(a) + W_->length(b)) return std::nullopt;
  return c;
}

Simple CoxeterGarside::meet(Simple a, Simple b) const {
  const auto& W = *W_;
  Simple m = 0;
  for (;;) {
    std::uint64_t common = W.left_descents(a) & W.left_descents(b);
    if (!common) return m;
    auto s = static_cast<Letter>(__builtin_ctzll(common));
    a = W.left(a, s);
    b = W.left(b, s);
    m = W.right(m, s);
  }
}

Simple CoxeterGarside::join(Simple a, Simple b) const {
  const auto& W = *W_;
  Simple w0 = W.longest();
  return W.multiply(w0, meet(W.multiply(w0, a), W.multiply(w0, b)));
}

std::vector<std::size_t> CoxeterGarside::atom_word(Simple a) const {
  auto w = W_->word(a);
  return {w.begin(), w.end()};
}

// ------------------------------------------------------------ permutations

namespace {

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::size_t inversions(const PermutationGarside::Perm& p) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  return c;
}

}  // namespace

PermutationGarside::PermutationGarside(std::size_t n, std::vector<std::string> names) : n_(n), names_(std::move(names)) {
  if (n < 1 || n > 12) raise(ErrorCode::BadParameter, "strand count out of range: " + std::to_string(n));
  count_ = factorial(n);
  if (count_ > default_budgets().enumeration)
    raise(ErrorCode::EnumerationBudgetExceeded, "Sym_" + std::to_string(n) + " exceeds the enumeration budget");
  if (names_.empty())
    for (std::size_t i = 1; i < n; ++i) names_.push_back(std::to_string(i));
  if (names_.size() != n - 1) raise(ErrorCode::BadParameter, "wrong number of atom names");
  Perm w0(n);
  for (std::size_t i = 0; i < n; ++i) w0[i] = static_cast<std::uint8_t>(n - 1 - i);
  delta_ = rank(w0);
}

PermutationGarside::Perm PermutationGarside::perm(Simple a) const {
  // Lehmer code unranking.
  Perm out(n_);
  std::vector<std::uint8_t> pool(n_);
  for (std::size_t i = 0; i < n_; ++i) pool[i] = static_cast<std::uint8_t>(i);
  std::size_t r = a;
  for (std::size_t i = 0; i < n_; ++i) {
    std::size_t f = factorial(n_ - 1 - i);
    std::size_t d = r / f;
    r %= f;
    out[i] = pool[d];
    pool.erase(pool.begin() + static_cast<long>(d));
  }
  return out;
}

Simple PermutationGarside::rank(const Perm& p) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n_; ++j) smaller += p[j] < p[i];
    r += smaller * factorial(n_ - 1 - i);
  }
  return static_cast<Simple>(r);
}

PermutationGarside::Perm PermutationGarside::compose(const Perm& a, const Perm& b) const {
  Perm c(n_);
  for (std::size_t j = 0; j < n_; ++j) c[j] = a[b[j]];
  return c;
}

PermutationGarside::Perm PermutationGarside::inverse(const Perm& a) const {
  Perm c(n_);
  for (std::size_t j = 0; j < n_; ++j) c[a[j]] = static_cast<std::uint8_t>(j);
  return c;
}

Simple PermutationGarside::atom(std::size_t i) const {
  if (i + 1 >= n_) raise(ErrorCode::OutOfRange, "atom index out of range");
  Perm p(n_);
  for (std::size_t j = 0; j < n_; ++j) p[j] = static_cast<std::uint8_t>(j);
  std::swap(p[i], p[i + 1]);
  return rank(p);
}

std::size_t PermutationGarside::norm(Simple a) const { return inversions(perm(a)); }

std::optional<Simple> PermutationGarside::product(Simple a, Simple b) const {
  Perm pa = perm(a), pb = perm(b), pc = compose(pa, pb);
  if (inversions(pc) != inversions(pa) + inversions(pb)) return std::nullopt;
  return rank(pc);
}

Simple PermutationGarside::left_complement(Simple a) const {
  return rank(compose(perm(delta_), inverse(perm(a))));
}

Simple PermutationGarside::right_complement(Simple a) const {
  return rank(compose(inverse(perm(a)), perm(delta_)));
}

Simple PermutationGarside::tau(Simple a) const {
  Perm w0 = perm(delta_);
  return rank(compose(compose(w0, perm(a)), w0));
}

Simple PermutationGarside::left_quotient(Simple a, Simple b) const {
  return rank(compose(inverse(perm(a)), perm(b)));
}

Simple PermutationGarside::meet(Simple a, Simple b) const {
  // s_i is a left descent of p iff value i sits to the right of value i+1.
  Perm pa = perm(a), pb = perm(b), m(n_);
  for (std::size_t j = 0; j < n_; ++j) m[j] = static_cast<std::uint8_t>(j);
  for (;;) {
    Perm ia = inverse(pa), ib = inverse(pb);
    std::size_t i = 0;
    while (i + 1 < n_ && !(ia[i] > ia[i + 1] && ib[i] > ib[i + 1])) ++i;
    if (i + 1 >= n_) return rank(m);
    for (auto& v : pa)
      if (v == i || v == i + 1) v = static_cast<std::uint8_t>(2 * i + 1 - v);
    for (auto& v : pb)
      if (v == i || v == i + 1) v = static_cast<std::uint8_t>(2 * i + 1 - v);
    std::swap(m[i], m[i + 1]);
  }
}

Simple PermutationGarside::join(Simple a, Simple b) const {
  Perm w0 = perm(delta_);
  Simple m = meet(rank(compose(w0, perm(a))), rank(compose(w0, perm(b))));
  return rank(compose(w0, perm(m)));
}

std::vector<std::size_t> PermutationGarside::atom_word(Simple a) const {
  Perm p = perm(a);
  std::vector<std::size_t> out;
  for (;;) {
    Perm ip = inverse(p);
    std::size_t i = 0;
    while (i + 1 < n_ && ip[i] < ip[i + 1]) ++i;
    if (i + 1 >= n_) return out;
    out.push_back(i);
    for (auto& v : p)
      if (v == i || v == i + 1) v = static_cast<std::uint8_t>(2 * i + 1 - v);
  }
}

// ------------------------------------------------------------------ misc

bool is_type_a_in_order(const CoxeterGraph& g) {
  const std::size_t k = g.rank();
  if (k == 0) return false;
  for (Letter s = 0; s < k; ++s)
    for (Letter t = s + 1; t < k; ++t)
      if (g.label(s, t) != (t == s + 1 ? 3u : 2u)) return false;
  return true;
}

std::shared_ptr<const GarsideStructure> garside_structure_of(const CoxeterGraph& g, bool prefer_permutation,
                                                             const Budgets& budgets) {
  if (!is_spherical(g)) raise(ErrorCode::NotSpherical, "Garside structure needs a spherical graph");
  if (prefer_permutation && is_type_a_in_order(g) && g.rank() + 1 <= 8)
    return std::make_shared<PermutationGarside>(g.rank() + 1, g.vertices());
  return std::make_shared<CoxeterGarside>(g, budgets);
}

ArtinSystem::ArtinSystem(const CoxeterGraph& g, const Budgets& budgets)
    : graph(g), left(Complement::artin(g, Side::Left)), right(Complement::artin(g, Side::Right)) {
  if (is_spherical(g)) garside = garside_structure_of(g, true, budgets);
}

Simple kappa(const GarsideStructure& G, const CoxElement& w) {
  std::vector<std::size_t> atoms(w.word().begin(), w.word().end());
  auto s = G.simple_from_atoms(atoms);
  if (!s) raise(ErrorCode::InternalError, "reduced word is not simple: " + w.to_string());
  return *s;
}

Simple head_delta(const GarsideStructure& G, const std::vector<std::size_t>& word) {
  Simple b = G.identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it >= G.num_atoms()) raise(ErrorCode::OutOfRange, "atom index out of range");
    Simple s = G.atom(*it);
    Simple t = G.meet(G.right_complement(s), b);
    b = *G.product(s, t);
  }
  return b;
}

std::vector<int> braid_permutation(std::size_t n, const SignedWord& word) {
  std::vector<int> p(n);
  for (std::size_t j = 0; j < n; ++j) p[j] = static_cast<int>(j + 1);
  for (int x : word) {
    std::size_t k = static_cast<std::size_t>(std::abs(x));
    if (x == 0 || k >= n) raise(ErrorCode::OutOfRange, "braid letter " + std::to_string(x) + " out of range");
    std::swap(p[k - 1], p[k]);
  }
  return p;
}

SignedWord pure_braid_generator(std::size_t n, std::size_t k, std::size_t l) {
  if (!(1 <= k && k < l && l <= n)) raise(ErrorCode::OutOfRange, "need 1 <= k < l <= n");
  SignedWord w;
  for (std::size_t i = l - 1; i > k; --i) w.push_back(static_cast<int>(i));
  w.push_back(static_cast<int>(k));
  w.push_back(static_cast<int>(k));
  for (std::size_t i = k + 1; i < l; ++i) w.push_back(-static_cast<int>(i));
  return w;
}

SignedWord parse_signed_word(const CoxeterGraph& g, const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  SignedWord w;
  std::string tok;
  while (in >> tok) {
    bool neg = tok[0] == '-';
    if (neg) tok = tok.substr(1);
    int x = static_cast<int>(g.index_of(tok)) + 1;
    w.push_back(neg ? -x : x);
  }
  return w;
}

std::string format_signed_word(const CoxeterGraph& g, const SignedWord& w) {
  std::string out;
  for (int x : w) {
    if (!out.empty()) out += ' ';
    if (x < 0) out += '-';
    out += g.name(static_cast<Letter>(std::abs(x) - 1));
  }
  return out;
}

}  // namespace gk
