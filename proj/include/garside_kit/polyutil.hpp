#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "garside_kit/ratpoly.hpp"

namespace gk {

/// Exact complex rational re + im*i.
struct GaussRational {
  mpq_class re = 0, im = 0;

  GaussRational() = default;
  GaussRational(const mpq_class& r, const mpq_class& i = 0) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRational operator+(const GaussRational& o) const { return {re + o.re, im + o.im}; }
  GaussRational operator-(const GaussRational& o) const { return {re - o.re, im - o.im}; }
  GaussRational operator-() const { return {-re, -im}; }
  GaussRational operator*(const GaussRational& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  GaussRational operator/(const GaussRational& o) const;
  bool operator==(const GaussRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRational& o) const { return !(*this == o); }
  bool operator<(const GaussRational& o) const { return re != o.re ? re < o.re : im < o.im; }
  /// "3", "-1/2*i", "1+2*i".
  std::string to_string() const;
};

/// Accepts "2", "-3/4", "i", "-2i", "1+2i", "1-1/2*i".
GaussRational parse_gauss(const std::string& text);

/// Columns: deg(g) shifted copies of f, then deg(f) shifted copies of g.
std::vector<std::vector<mpq_class>> sylvester_matrix(const RatPoly& f, const RatPoly& g);
/// Throws ConstantPolynomial.
mpq_class sylvester_resultant(const RatPoly& f, const RatPoly& g);
/// Res(f, f') without normalization. Throws DegreeTooLow.
mpq_class discriminant(const RatPoly& f);

/// Polynomials over Q(i), coefficients highest degree first.
using GaussPoly = std::vector<GaussRational>;
GaussRational gauss_resultant(const GaussPoly& f, const GaussPoly& g);
GaussRational gauss_discriminant(const GaussPoly& f);
std::string gauss_poly_string(const GaussPoly& f, const std::string& var = "x");

struct MonicImage {
  GaussPoly coefficients;  // highest degree first, leading 1
  bool repeated = false;   // some point occurs twice
  GaussRational discriminant;  // zero for fewer than two points
};
/// (x - z_1) ... (x - z_n).
MonicImage config_to_monic(const std::vector<GaussRational>& points);

}  // namespace gk
