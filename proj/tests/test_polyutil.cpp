#include <doctest.h>

#include <random>

#include "garside_kit/errors.hpp"
#include "garside_kit/polyutil.hpp"

using namespace gk;

namespace {

RatPoly desc(std::vector<mpq_class> c) { return RatPoly::from_descending(c); }

RatPoly random_poly(std::mt19937& rng, std::size_t degree) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<mpq_class> c(degree + 1);
  for (auto& x : c) x = d(rng);
  if (c.back() == 0) c.back() = 1;
  return RatPoly(c);
}

}  // namespace

TEST_CASE("resultant examples") {
  CHECK(sylvester_resultant(desc({1, -1}), desc({1, 0, -1})) == 0);
  CHECK(sylvester_resultant(desc({1, 0}), desc({1, 1})) == 1);
  auto f = desc({1, 0, -1});
  CHECK(sylvester_resultant(f, f.derivative()) == -4);
  auto S = sylvester_matrix(f, f.derivative());
  std::vector<std::vector<mpq_class>> expected{{1, 2, 0}, {0, 0, 2}, {-1, 0, 0}};
  CHECK(S == expected);
  CHECK_THROWS_AS(sylvester_resultant(RatPoly::constant(3), f), Error);
}

TEST_CASE("discriminant examples") {
  // (x-1)^2 (x+2) = x^3 - 3x + 2
  CHECK(discriminant(desc({1, 0, -3, 2})) == 0);
  CHECK(discriminant(desc({1, 0, -1})) == -4);
  CHECK(discriminant(desc({1, 0, 0})) == 0);
  CHECK_THROWS_AS(discriminant(desc({1, 5})), Error);
  // Res(f, f') = -a (b^2 - 4ac) for a quadratic.
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int k = 0; k < 50; ++k) {
    mpq_class a = d(rng), b = d(rng), c = d(rng);
    if (a == 0) continue;
    CHECK(discriminant(desc({a, b, c})) == -a * (b * b - 4 * a * c));
  }
}

TEST_CASE("resultant vanishes exactly on a common factor") {
  std::mt19937 rng(5);
  for (int k = 0; k < 50; ++k) {
    RatPoly f = random_poly(rng, 1 + k % 4), g = random_poly(rng, 1 + (k / 4) % 3);
    if (k % 3 == 0) {
      RatPoly common = random_poly(rng, 1);
      f = f * common;
      g = g * common;
    }
    bool shared = poly_gcd(f, g).degree() >= 1;
    CHECK((sylvester_resultant(f, g) == 0) == shared);
  }
}

TEST_CASE("resultant symmetry") {
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    RatPoly f = random_poly(rng, 1 + k % 4), g = random_poly(rng, 1 + k % 3);
    long mn = f.degree() * g.degree();
    CHECK(sylvester_resultant(f, g) == (mn % 2 == 0 ? 1 : -1) * sylvester_resultant(g, f));
  }
}

TEST_CASE("complex rationals") {
  CHECK(parse_gauss("1+2i") == GaussRational(1, 2));
  CHECK(parse_gauss("-i") == GaussRational(0, -1));
  CHECK(parse_gauss("3/4") == GaussRational(mpq_class(3, 4)));
  CHECK(parse_gauss("1-1/2*i") == GaussRational(1, mpq_class(-1, 2)));
  CHECK_THROWS_AS(parse_gauss("1+"), Error);
  GaussRational z(1, 2);
  CHECK(z * (GaussRational(1) / z) == GaussRational(1));
  CHECK(z.to_string() == "1+2*i");
}

TEST_CASE("configurations to monic polynomials") {
  auto a = config_to_monic({GaussRational(1), GaussRational(2)});
  CHECK(gauss_poly_string(a.coefficients) == "x^2 - 3*x + 2");
  CHECK_FALSE(a.repeated);
  auto b = config_to_monic({GaussRational(0)});
  CHECK(gauss_poly_string(b.coefficients) == "x");
  auto c = config_to_monic({GaussRational(1), GaussRational(1)});
  CHECK(gauss_poly_string(c.coefficients) == "x^2 - 2*x + 1");
  CHECK(c.repeated);
  CHECK(c.discriminant.is_zero());
  auto d = config_to_monic({GaussRational(0, 1), GaussRational(0, -1)});
  CHECK(gauss_poly_string(d.coefficients) == "x^2 + 1");
}

TEST_CASE("discriminant detects repeated points") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int k = 0; k < 200; ++k) {
    std::vector<GaussRational> pts(2 + k % 4);
    for (auto& z : pts) z = GaussRational(d(rng), d(rng));
    auto img = config_to_monic(pts);
    CHECK(img.discriminant.is_zero() == img.repeated);
  }
}
