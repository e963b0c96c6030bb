#include "garside_kit/polyutil.hpp"

#include <regex>
#include <set>

#include "garside_kit/errors.hpp"

namespace gk {

GaussRational GaussRational::operator/(const GaussRational& o) const {
  mpq_class n = o.re * o.re + o.im * o.im;
  if (n == 0) raise(ErrorCode::BadParameter, "division by zero");
  return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

std::string GaussRational::to_string() const {
  if (im == 0) return rational_string(re);
  std::string i_part = abs(im) == 1 ? "i" : rational_string(abs(im)) + "*i";
  if (re == 0) return (im < 0 ? "-" : "") + i_part;
  return rational_string(re) + (im < 0 ? "-" : "+") + i_part;
}

GaussRational parse_gauss(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s += c;
  static const std::regex re_only(R"(([+-]?\d+(?:/\d+)?))");
  static const std::regex im_only(R"(([+-]?)(\d+(?:/\d+)?)?i)");
  static const std::regex both(R"(([+-]?\d+(?:/\d+)?)([+-])(\d+(?:/\d+)?)?i)");
  auto q = [](const std::string& t) {
    mpq_class v(t);
    v.canonicalize();
    return v;
  };
  std::smatch m;
  if (std::regex_match(s, m, re_only)) return {q(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str())};
  if (std::regex_match(s, m, im_only)) {
    mpq_class v = m[2].matched ? q(m[2]) : mpq_class(1);
    return {0, m[1] == "-" ? mpq_class(-v) : v};
  }
  if (std::regex_match(s, m, both)) {
    std::string r = m[1];
    if (r[0] == '+') r = r.substr(1);
    mpq_class v = m[3].matched ? q(m[3]) : mpq_class(1);
    return {q(r), m[2] == "-" ? mpq_class(-v) : v};
  }
  raise(ErrorCode::MalformedSpec, "not a complex rational: " + text);
}

namespace {

template <class F>
bool is_zero_of(const F& x) {
  if constexpr (std::is_same_v<F, mpq_class>)
    return x == 0;
  else
    return x.is_zero();
}

// Descending coefficient lists with a nonzero leading entry.
template <class F>
std::vector<std::vector<F>> sylvester(const std::vector<F>& f, const std::vector<F>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, N = m + n;
  std::vector<std::vector<F>> S(N, std::vector<F>(N, F(0)));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k <= m; ++k) S[j + k][j] = f[k];
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k <= n; ++k) S[j + k][n + j] = g[k];
  return S;
}

template <class F>
F det(std::vector<std::vector<F>> a) {
  const std::size_t n = a.size();
  F d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero_of(a[p][c])) ++p;
    if (p == n) return F(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d = d * a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero_of(a[r][c])) continue;
      F f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] = a[r][k] - f * a[c][k];
    }
  }
  return d;
}

template <class F>
std::vector<F> trimmed(std::vector<F> f) {
  std::size_t i = 0;
  while (i < f.size() && is_zero_of(f[i])) ++i;
  f.erase(f.begin(), f.begin() + static_cast<long>(i));
  return f;
}

template <class F>
std::vector<F> derivative_of(const std::vector<F>& f) {
  std::vector<F> d;
  const std::size_t deg = f.size() - 1;
  for (std::size_t k = 0; k < deg; ++k) d.push_back(f[k] * F(mpq_class(static_cast<long>(deg - k))));
  return d;
}

template <class F>
F resultant_of(std::vector<F> f, std::vector<F> g) {
  f = trimmed(f);
  g = trimmed(g);
  if (f.size() < 2 || g.size() < 2) raise(ErrorCode::ConstantPolynomial, "resultant needs two non-constant polynomials");
  return det(sylvester(f, g));
}

template <class F>
F discriminant_of(std::vector<F> f) {
  f = trimmed(f);
  if (f.size() < 3) raise(ErrorCode::DegreeTooLow, "discriminant needs degree >= 2");
  return resultant_of(f, derivative_of(f));
}

}  // namespace

std::vector<std::vector<mpq_class>> sylvester_matrix(const RatPoly& f, const RatPoly& g) {
  if (f.degree() < 1 || g.degree() < 1) raise(ErrorCode::ConstantPolynomial, "Sylvester matrix needs non-constant polynomials");
  return sylvester(f.descending(), g.descending());
}

mpq_class sylvester_resultant(const RatPoly& f, const RatPoly& g) {
  if (f.degree() < 1 || g.degree() < 1) raise(ErrorCode::ConstantPolynomial, "resultant needs two non-constant polynomials");
  return resultant_of(f.descending(), g.descending());
}

mpq_class discriminant(const RatPoly& f) {
  if (f.degree() < 2) raise(ErrorCode::DegreeTooLow, "discriminant needs degree >= 2");
  return discriminant_of(f.descending());
}

GaussRational gauss_resultant(const GaussPoly& f, const GaussPoly& g) { return resultant_of(f, g); }
GaussRational gauss_discriminant(const GaussPoly& f) { return discriminant_of(f); }

std::string gauss_poly_string(const GaussPoly& f0, const std::string& var) {
  auto f = trimmed(f0);
  if (f.empty()) return "0";
  std::string out;
  const std::size_t deg = f.size() - 1;
  for (std::size_t k = 0; k <= deg; ++k) {
    const auto& c = f[k];
    if (c.is_zero()) continue;
    std::size_t e = deg - k;
    std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
    bool real = c.im == 0;
    bool negative = real && c.re < 0;
    std::string mag;
    if (real) {
      mpq_class a = abs(c.re);
      mag = mono.empty() ? rational_string(a) : (a == 1 ? mono : rational_string(a) + "*" + mono);
    } else {
      mag = mono.empty() ? "(" + c.to_string() + ")" : "(" + c.to_string() + ")*" + mono;
    }
    if (out.empty())
      out = (negative ? "-" : "") + mag;
    else
      out += (negative ? " - " : " + ") + mag;
  }
  return out;
}

MonicImage config_to_monic(const std::vector<GaussRational>& points) {
  MonicImage img;
  img.coefficients = {GaussRational(1)};
  for (auto& z : points) {
    // Multiply by (x - z).
    GaussPoly next(img.coefficients.size() + 1);
    for (std::size_t k = 0; k < img.coefficients.size(); ++k) {
      next[k] = next[k] + img.coefficients[k];
      next[k + 1] = next[k + 1] - img.coefficients[k] * z;
    }
    img.coefficients = std::move(next);
  }
  std::set<GaussRational> seen(points.begin(), points.end());
  img.repeated = seen.size() != points.size();
  if (points.size() >= 2) img.discriminant = gauss_discriminant(img.coefficients);
  return img;
}

}  // namespace gk
