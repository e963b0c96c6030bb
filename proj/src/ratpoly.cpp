#include "garside_kit/ratpoly.hpp"

#include <sstream>

#include "garside_kit/errors.hpp"

namespace gk {

RatPoly::RatPoly(std::vector<mpq_class> ascending) : c_(std::move(ascending)) {
  trim();
}

RatPoly RatPoly::constant(const mpq_class& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const mpq_class& c, std::size_t degree) {
  std::vector<mpq_class> v(degree + 1);
  v[degree] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::from_descending(const std::vector<mpq_class>& coeffs) {
  return RatPoly(std::vector<mpq_class>(coeffs.rbegin(), coeffs.rend()));
}

std::vector<mpq_class> RatPoly::descending() const {
  return {c_.rbegin(), c_.rend()};
}

mpq_class RatPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : mpq_class(0);
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-() const {
  std::vector<mpq_class> r(c_);
  for (auto& x : r) x = -x;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const mpq_class& k) const {
  std::vector<mpq_class> r(c_);
  for (auto& x : r) x *= k;
  return RatPoly(std::move(r));
}

void RatPoly::divmod(const RatPoly& d, RatPoly& q, RatPoly& r) const {
  if (d.is_zero()) raise(ErrorCode::InternalError, "polynomial division by zero");
  std::vector<mpq_class> rem(c_);
  long dd = d.degree();
  std::vector<mpq_class> quo;
  if (degree() >= dd) quo.resize(degree() - dd + 1);
  for (long i = degree(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    mpq_class f = rem[i] / d.leading();
    quo[i - dd] = f;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
  }
  q = RatPoly(std::move(quo));
  r = RatPoly(std::move(rem));
}

RatPoly RatPoly::operator%(const RatPoly& d) const {
  if (degree() < d.degree()) return *this;
  RatPoly q, r;
  divmod(d, q, r);
  return r;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return RatPoly(std::move(r));
}

mpq_class RatPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  return *this * (mpq_class(1) / leading());
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpq_class a = c_[i];
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      a = abs(a);
    } else if (a < 0 && i > 0) {
      os << "-";
      a = -a;
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace gk
