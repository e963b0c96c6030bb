#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gk {

/// Dense univariate polynomial over Q. Coefficients are stored lowest degree
/// first; the zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> ascending);
  static RatPoly constant(const mpq_class& c);
  static RatPoly monomial(const mpq_class& c, std::size_t degree);
  /// Coefficients given highest degree first, as in the external format.
  static RatPoly from_descending(const std::vector<mpq_class>& coeffs);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  std::vector<mpq_class> descending() const;
  mpq_class coeff(std::size_t i) const;
  const mpq_class& leading() const { return c_.back(); }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator-() const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const mpq_class& k) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }
  bool operator!=(const RatPoly& o) const { return !(*this == o); }

  /// Euclidean division; throws on division by zero.
  void divmod(const RatPoly& d, RatPoly& q, RatPoly& r) const;
  RatPoly operator%(const RatPoly& d) const;
  RatPoly derivative() const;
  mpq_class eval(const mpq_class& x) const;
  RatPoly monic() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

RatPoly poly_gcd(RatPoly a, RatPoly b);

std::string rational_string(const mpq_class& q);

}  // namespace gk
