#include "garside_kit/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "garside_kit/errors.hpp"

namespace gk {

namespace {

RatPoly cyclotomic(unsigned n) {
  static std::map<unsigned, RatPoly> cache;  // guarded by the field registry lock
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  RatPoly p = RatPoly::monomial(1, n) - RatPoly::constant(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    RatPoly q, r;
    p.divmod(cyclotomic(d), q, r);
    p = q;
  }
  cache.emplace(n, p);
  return p;
}

// D_k(t) = z^k + z^-k written in t = z + z^-1.
std::vector<RatPoly> dickson_table(unsigned upto) {
  std::vector<RatPoly> d;
  d.push_back(RatPoly::constant(2));
  if (upto >= 1) d.push_back(RatPoly::monomial(1, 1));
  for (unsigned k = 2; k <= upto; ++k)
    d.push_back(RatPoly::monomial(1, 1) * d[k - 1] - d[k - 2]);
  return d;
}

struct Interval {
  mpq_class lo, hi;
};

Interval imul(const Interval& a, const Interval& b) {
  mpq_class p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Interval r{p[0], p[0]};
  for (auto& x : p) {
    if (x < r.lo) r.lo = x;
    if (x > r.hi) r.hi = x;
  }
  return r;
}

Interval ieval(const RatPoly& p, const mpq_class& lo, const mpq_class& hi) {
  const auto& c = p.coeffs();
  Interval x{lo, hi};
  Interval acc{c.back(), c.back()};
  for (long i = static_cast<long>(c.size()) - 2; i >= 0; --i) {
    acc = imul(acc, x);
    acc.lo += c[i];
    acc.hi += c[i];
  }
  return acc;
}

int sgn(const mpq_class& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace

CycloField::CycloField(unsigned L) : L_(L) {
  if (L < 2) raise(ErrorCode::InternalError, "cyclotomic modulus must be >= 2");
  unsigned n = 2 * L;
  RatPoly phi = cyclotomic(n);
  unsigned half = static_cast<unsigned>(phi.degree()) / 2;
  auto dk = dickson_table(half);
  RatPoly m = RatPoly::constant(phi.coeff(half));
  for (unsigned k = 1; k <= half; ++k) m = m + dk[k] * phi.coeff(half + k);
  minpoly_ = m.monic();
  if (minpoly_.degree() == 1) return;
  double t0 = 2.0 * std::cos(M_PI / L);
  mpq_class eps(1, 1000000000);
  lo_ = mpq_class(t0) - eps;
  hi_ = mpq_class(t0) + eps;
  sign_lo_ = sgn(minpoly_.eval(lo_));
  if (sign_lo_ == 0 || sign_lo_ == sgn(minpoly_.eval(hi_)))
    raise(ErrorCode::InternalError, "failed to isolate 2cos(pi/L)");
  mpq_class width_target(1);
  width_target /= mpz_class(1) << 80;
  while (hi_ - lo_ > width_target) {
    mpq_class mid = (lo_ + hi_) / 2;
    int s = sgn(minpoly_.eval(mid));
    if (s == sign_lo_) lo_ = mid; else hi_ = mid;
  }
}

std::shared_ptr<const CycloField> CycloField::get(unsigned L) {
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const CycloField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(L);
  if (it != registry.end()) return it->second;
  auto f = std::make_shared<const CycloField>(L);
  registry.emplace(L, f);
  return f;
}

RatPoly CycloField::two_cos_pi_over(unsigned m) const {
  if (m == 0 || L_ % m != 0) raise(ErrorCode::InternalError, "label does not divide modulus");
  auto dk = dickson_table(L_ / m);
  return reduce(dk[L_ / m]);
}

int CycloField::sign(const RatPoly& p) const {
  if (p.is_zero()) return 0;
  if (p.degree() == 0) return sgn(p.coeff(0));
  mpq_class lo = lo_, hi = hi_;
  for (;;) {
    Interval v = ieval(p, lo, hi);
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    mpq_class mid = (lo + hi) / 2;
    if (sgn(minpoly_.eval(mid)) == sign_lo_) lo = mid; else hi = mid;
  }
}

double CycloField::approx(const RatPoly& p) const {
  double t0 = 2.0 * std::cos(M_PI / L_);
  double acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t0 + it->get_d();
  return acc;
}

CycloReal::CycloReal(std::shared_ptr<const CycloField> field, RatPoly p)
    : field_(std::move(field)), p_(field_->reduce(p)) {}

CycloReal::CycloReal(std::shared_ptr<const CycloField> field, const mpq_class& q)
    : field_(std::move(field)), p_(RatPoly::constant(q)) {}

int CycloReal::sign() const { return field_ ? field_->sign(p_) : 0; }

double CycloReal::approx() const { return field_ ? field_->approx(p_) : 0.0; }

CycloReal CycloReal::operator+(const CycloReal& o) const {
  CycloReal r;
  r.field_ = field_ ? field_ : o.field_;
  r.p_ = p_ + o.p_;
  return r;
}

CycloReal CycloReal::operator-(const CycloReal& o) const {
  CycloReal r;
  r.field_ = field_ ? field_ : o.field_;
  r.p_ = p_ - o.p_;
  return r;
}

CycloReal CycloReal::operator-() const {
  CycloReal r;
  r.field_ = field_;
  r.p_ = -p_;
  return r;
}

CycloReal CycloReal::operator*(const CycloReal& o) const {
  CycloReal r;
  r.field_ = field_ ? field_ : o.field_;
  r.p_ = r.field_ ? r.field_->reduce(p_ * o.p_) : p_ * o.p_;
  return r;
}

CycloReal CycloReal::operator*(const mpq_class& k) const {
  CycloReal r;
  r.field_ = field_;
  r.p_ = p_ * k;
  return r;
}

bool CycloReal::lex_less(const CycloReal& o) const {
  const auto& a = p_.coeffs();
  const auto& b = o.p_.coeffs();
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::string CycloReal::to_string() const { return p_.to_string("t"); }

}  // namespace gk
