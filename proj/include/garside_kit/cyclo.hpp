#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "garside_kit/ratpoly.hpp"

namespace gk {

/// The real field Q(t0) with t0 = 2cos(pi/L). Instances are shared and
/// immutable; obtain them through CycloField::get.
class CycloField {
 public:
  static std::shared_ptr<const CycloField> get(unsigned L);

  unsigned modulus() const { return L_; }
  std::size_t degree() const { return minpoly_.coeffs().size() - 1; }
  /// Monic minimal polynomial of t0.
  const RatPoly& minimal_polynomial() const { return minpoly_; }
  /// Representation of 2cos(pi/m) for m dividing L.
  RatPoly two_cos_pi_over(unsigned m) const;
  RatPoly reduce(const RatPoly& p) const { return p % minpoly_; }
  /// Sign of the residue p at t0: -1, 0 or 1.
  int sign(const RatPoly& p) const;
  double approx(const RatPoly& p) const;

  explicit CycloField(unsigned L);

 private:
  unsigned L_;
  RatPoly minpoly_;
  mpq_class lo_, hi_;  // isolating interval for t0, minpoly(lo) and minpoly(hi) differ in sign
  int sign_lo_ = 0;
};

/// Element of a CycloField, stored as a reduced residue polynomial.
class CycloReal {
 public:
  CycloReal() = default;
  CycloReal(std::shared_ptr<const CycloField> field, RatPoly p);
  CycloReal(std::shared_ptr<const CycloField> field, const mpq_class& q);

  const std::shared_ptr<const CycloField>& field() const { return field_; }
  const RatPoly& poly() const { return p_; }

  bool is_zero() const { return p_.is_zero(); }
  int sign() const;
  bool is_rational() const { return p_.degree() <= 0; }
  mpq_class rational_value() const { return p_.coeff(0); }
  double approx() const;

  CycloReal operator+(const CycloReal& o) const;
  CycloReal operator-(const CycloReal& o) const;
  CycloReal operator-() const;
  CycloReal operator*(const CycloReal& o) const;
  CycloReal operator*(const mpq_class& k) const;
  CycloReal& operator+=(const CycloReal& o) { return *this = *this + o; }
  CycloReal& operator-=(const CycloReal& o) { return *this = *this - o; }
  bool operator==(const CycloReal& o) const { return p_ == o.p_; }
  bool operator!=(const CycloReal& o) const { return !(p_ == o.p_); }
  /// Total order by coefficient vector; not the numeric order.
  bool lex_less(const CycloReal& o) const;

  /// e.g. "1/2 + 1/2*t"
  std::string to_string() const;

 private:
  std::shared_ptr<const CycloField> field_;
  RatPoly p_;
};

}  // namespace gk
