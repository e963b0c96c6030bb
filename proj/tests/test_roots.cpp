#include <doctest.h>

#include <cmath>
#include <random>

#include "garside_kit/coxeter.hpp"
#include "garside_kit/coxeter_engine.hpp"
#include "garside_kit/errors.hpp"
#include "garside_kit/roots.hpp"

using namespace gk;

namespace {

std::vector<Letter> random_word(std::mt19937& rng, std::size_t rank, std::size_t len) {
  std::uniform_int_distribution<Letter> d(0, static_cast<Letter>(rank - 1));
  std::vector<Letter> w(len);
  for (auto& x : w) x = d(rng);
  return w;
}

// A reduced word of w chosen by stripping random left descents.
std::vector<Letter> random_reduced_word(std::mt19937& rng, const CoxElement& w0) {
  std::vector<Letter> out;
  CoxElement w = w0;
  while (!w.is_identity()) {
    auto d = left_descents(w);
    Letter s = d[std::uniform_int_distribution<std::size_t>(0, d.size() - 1)(rng)];
    out.push_back(s);
    w = multiply(generator(w.graph(), s), w);
  }
  return out;
}

Root combo(const ReflectionRep& R, const std::vector<long>& c) {
  Root r{std::vector<CycloReal>(c.size(), R.zero())};
  for (std::size_t i = 0; i < c.size(); ++i) r.coords[i] = CycloReal(R.field(), mpq_class(c[i]));
  return r;
}

}  // namespace

TEST_CASE("cyclotomic fields") {
  for (unsigned L : {2u, 3u, 4u, 5u, 6u, 8u, 10u, 12u, 14u, 30u}) {
    auto F = CycloField::get(L);
    unsigned phi = 0;
    for (unsigned k = 1; k <= 2 * L; ++k) phi += std::gcd(k, 2 * L) == 1;
    CHECK(F->degree() == phi / 2);
    CycloReal t(F, RatPoly({0, 1}));
    CHECK(std::abs(t.approx() - 2 * std::cos(M_PI / L)) < 1e-12);
    double m = 0, x = 2 * std::cos(M_PI / L), pw = 1;
    for (auto& k : F->minimal_polynomial().coeffs()) {
      m += k.get_d() * pw;
      pw *= x;
    }
    CHECK(std::abs(m) < 1e-9);
  }
  auto F5 = CycloField::get(5);
  CHECK(F5->minimal_polynomial() == RatPoly({-1, -1, 1}));
  CHECK(F5->two_cos_pi_over(5) == RatPoly({0, 1}));
  CHECK(F5->two_cos_pi_over(1) == RatPoly::constant(-2));
}

TEST_CASE("cyclotomic arithmetic and signs") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> c(-4, 4);
  for (unsigned L : {8u, 10u, 14u, 30u}) {
    auto F = CycloField::get(L);
    for (int k = 0; k < 100; ++k) {
      std::vector<mpq_class> a, b;
      for (std::size_t i = 0; i < F->degree(); ++i) {
        a.emplace_back(c(rng), 1 + std::abs(c(rng)));
        b.emplace_back(c(rng));
      }
      CycloReal x(F, RatPoly(a)), y(F, RatPoly(b));
      CHECK(std::abs((x * y).approx() - x.approx() * y.approx()) < 1e-6);
      CHECK(std::abs((x - y).approx() - (x.approx() - y.approx())) < 1e-9);
      double v = (x - y).approx();
      if (std::abs(v) > 1e-9) CHECK((x - y).sign() == (v > 0 ? 1 : -1));
      CHECK((x - x).sign() == 0);
    }
  }
  // 2cos(pi/5)^2 = 2cos(pi/5) + 1, so this difference is exactly zero.
  auto F = CycloField::get(10);
  CycloReal t(F, F->two_cos_pi_over(5));
  CHECK((t * t - t - CycloReal(F, 1)).is_zero());
}

TEST_CASE("bilinear form examples") {
  auto A = bilinear_form(builtin_graph("A2"));
  CHECK(A[0][0].rational_value() == 1);
  CHECK(A[0][1].is_rational());
  CHECK(A[0][1].rational_value() == mpq_class(-1, 2));
  auto inf = bilinear_form(parse_graph(R"({"vertices":["a","b"],"edges":[["a","b","inf"]]})"));
  CHECK(inf[0][1].rational_value() == -1);
  CHECK_FALSE(is_positive_definite(inf));
  CHECK(determinant(inf).is_zero());
  auto B = bilinear_form(builtin_graph("B2"));
  CHECK_FALSE(B[0][1].is_rational());
  auto two = B[0][1] * mpq_class(-2);
  CHECK((two * two).rational_value() == 2);
  CHECK(is_positive_definite(A));
  CHECK(determinant(A).rational_value() == mpq_class(3, 4));
  CHECK_FALSE(is_positive_definite(bilinear_form(builtin_graph("affA2"))));
}

TEST_CASE("reflections") {
  auto g = builtin_graph("A2");
  auto R = ReflectionRep::of(g);
  auto e1 = R->simple_root(0), e2 = R->simple_root(1);
  CHECK(R->reflect(0, e1) == -e1);
  CHECK(R->reflect(0, e2) == combo(*R, {1, 1}));
  auto a1a1 = ReflectionRep::of(builtin_graph("A1+A1"));
  CHECK(a1a1->reflect(0, a1a1->simple_root(1)) == a1a1->simple_root(1));
  CHECK(act(identity_element(g), e1) == e1);
  CHECK(act(reduce_word(g, {0, 1}), e1) == e2);
  CHECK(act(longest_element(g), e1) == -e2);
  CHECK(act(longest_element(g), e2) == -e1);
}

TEST_CASE("action properties") {
  std::mt19937 rng(21);
  for (auto name : {"A3", "B3", "H3", "affA2", "I2(7)"}) {
    auto g = builtin_graph(name);
    auto R = ReflectionRep::of(g);
    for (int k = 0; k < 50; ++k) {
      auto u = reduce_word(g, random_word(rng, g.rank(), 7));
      auto v = reduce_word(g, random_word(rng, g.rank(), 7));
      std::vector<long> c1, c2;
      for (std::size_t i = 0; i < g.rank(); ++i) {
        c1.push_back(static_cast<long>(rng() % 5) - 2);
        c2.push_back(static_cast<long>(rng() % 5) - 2);
      }
      auto x = combo(*R, c1), y = combo(*R, c2);
      CHECK(act(multiply(u, v), x) == act(u, act(v, x)));
      CHECK(R->inner(act(u, x), act(u, y)) == R->inner(x, y));
      for (Letter s = 0; s < g.rank(); ++s) CHECK(R->reflect(s, R->reflect(s, x)) == x);
      if (!u.is_identity()) CHECK(R->act(random_reduced_word(rng, u), x) == act(u, x));
    }
  }
}

TEST_CASE("positive roots") {
  struct Count {
    const char* name;
    std::size_t n;
  };
  for (auto c : {Count{"A1", 1}, Count{"A2", 3}, Count{"A4", 10}, Count{"B3", 9}, Count{"D4", 12}, Count{"F4", 24},
                 Count{"H3", 15}, Count{"H4", 60}, Count{"I2(7)", 7}, Count{"E6", 36}}) {
    auto g = builtin_graph(c.name);
    auto roots = positive_roots(g);
    CHECK_MESSAGE(roots.size() == c.n, c.name);
    auto R = ReflectionRep::of(g);
    for (auto& f : roots) {
      CHECK(f.sign() == 1);
      CHECK(R->inner(f, f).rational_value() == 1);
    }
    if (std::string(c.name) != "E6") CHECK(roots.size() == longest_element(g).length());
  }
  auto a2 = positive_roots(builtin_graph("A2"));
  auto R = ReflectionRep::of(builtin_graph("A2"));
  CHECK(std::find(a2.begin(), a2.end(), combo(*R, {1, 1})) != a2.end());
  CHECK_THROWS_AS(positive_roots(builtin_graph("affA2")), Error);
  CHECK(positive_roots(builtin_graph("affA2"), 4).size() > 3);
}

TEST_CASE("every orbit root has a sign") {
  for (auto name : {"A4", "B4", "D4", "F4", "H4", "A2+I2(5)"})
    for (auto& f : positive_roots(builtin_graph(name))) CHECK(f.sign() != 0);
  std::mt19937 rng(31);
  auto g = builtin_graph("affA2");
  auto R = ReflectionRep::of(g);
  for (int k = 0; k < 500; ++k) {
    auto w = reduce_word(g, random_word(rng, 3, 1 + k % 12));
    for (Letter s = 0; s < 3; ++s) CHECK(act(w, R->simple_root(s)).sign() != 0);
  }
}

TEST_CASE("inversion sets have the length of the element") {
  for (auto name : {"A3", "B3", "H3"}) {
    auto g = builtin_graph(name);
    for (auto& w : enumerate_group(g, 100)) CHECK(inversion_set(w).size() == w.length());
  }
  auto a2 = builtin_graph("A2");
  CHECK(inversion_set(identity_element(a2)).empty());
  auto R = ReflectionRep::of(a2);
  CHECK(inversion_set(generator(a2, 0)) == std::vector<Root>{R->simple_root(0)});
  CHECK(inversion_set(longest_element(a2)).size() == 3);

  std::mt19937 rng(17);
  auto aff = builtin_graph("affA2");
  std::size_t sampled = 0;
  while (sampled < 200) {
    auto w = reduce_word(aff, random_word(rng, 3, 1 + rng() % 14));
    if (w.length() > 12) continue;
    ++sampled;
    CHECK(inversion_set(w).size() == w.length());
  }
}

TEST_CASE("root serialization") {
  auto R = ReflectionRep::of(builtin_graph("H3"));
  auto j = R->root_to_json(R->simple_root(0));
  CHECK(j.find("\"1\"") != std::string::npos);
}
