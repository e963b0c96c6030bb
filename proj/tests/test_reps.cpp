#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "garside_kit/artin.hpp"
#include "garside_kit/errors.hpp"
#include "garside_kit/free_group.hpp"
#include "garside_kit/lkb.hpp"
#include "oracles.hpp"

using namespace gk;

namespace {

FreeWord w(const std::string& s) { return parse_free_word(s); }

// Naive stack-free reduction: repeatedly delete the first cancelling pair.
std::vector<int> reduce_by_deletion(std::vector<int> v) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] == -v[i + 1]) {
        v.erase(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
  }
  return v;
}

std::vector<int> random_free(std::mt19937& rng, int rank, std::size_t len) {
  std::uniform_int_distribution<int> d(1, rank);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> v(len);
  for (auto& x : v) x = sign(rng) ? d(rng) : -d(rng);
  return v;
}

TwoVarPoly P(const std::string& y_poly) { return TwoVarPoly::in_y(parse_poly(y_poly)); }

}  // namespace

TEST_CASE("artin representation examples") {
  CHECK(artin_rep_apply(2, {1}, w("x1")) == w("x1^-1 x2 x1"));
  CHECK(artin_rep_apply(2, {1}, w("x2")) == w("x1"));
  CHECK(artin_rep_apply(3, {}, w("x2 x3")) == w("x2 x3"));
  CHECK(artin_rep_apply(3, {1, -1}, w("x2")) == w("x2"));
  CHECK_THROWS_AS(artin_rep_apply(3, {3}, w("x1")), Error);
  CHECK(w("x1^-1 x2 x1").to_string() == "x1^-1 x2 x1");
}

TEST_CASE("artin representation respects braid relations") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int i = 1; i < static_cast<int>(n); ++i)
      for (int j = i + 1; j < static_cast<int>(n); ++j) {
        if (j == i + 1)
          CHECK(artin_rep(n, {i, j, i}) == artin_rep(n, {j, i, j}));
        else
          CHECK(artin_rep(n, {i, j}) == artin_rep(n, {j, i}));
      }
    for (int i = 1; i < static_cast<int>(n); ++i) CHECK(artin_rep(n, {i, -i}) == FreeEndo::identity(n));
  }
}

TEST_CASE("artin representation is a homomorphism") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = oracle::random_signed(rng, 3, 6), b = oracle::random_signed(rng, 3, 6);
    SignedWord ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(artin_rep(4, ab) == artin_rep(4, a).compose(artin_rep(4, b)));
  }
}

TEST_CASE("image membership") {
  CHECK(artin_image_membership(3, FreeEndo::identity(3)));
  CHECK(artin_image_membership(3, artin_rep(3, {1, 2, 1})));
  CHECK_FALSE(artin_image_membership(3, FreeEndo({w("x1^-1"), w("x2^-1"), w("x3^-1")})));
  CHECK_FALSE(artin_image_membership(2, FreeEndo({w("x2"), w("x1")})));
  // Fixes x2 x1, but the images are not conjugates of generators.
  CHECK_FALSE(artin_image_membership(2, FreeEndo({w("x1 x1"), w("x2 x1^-1")})));
  CHECK_THROWS_AS(artin_image_membership(3, FreeEndo::identity(2)), Error);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto beta = oracle::random_signed(rng, 3, 1 + trial % 12);
    CHECK(artin_image_membership(4, artin_rep(4, beta)));
  }
}

TEST_CASE("rho_D examples and relations") {
  CHECK(rho_D_apply(3, {1}, w("y2")) == w("y1^-1 y2"));
  CHECK(rho_D_apply(3, {2}, w("y2")) == w("y2 y1^-1 y2"));
  CHECK(rho_D_apply(4, {}, w("y3 y1")) == w("y3 y1"));
  CHECK_THROWS_AS(rho_D_apply(3, {5}, w("y1")), Error);
  for (std::size_t n = 2; n <= 6; ++n) {
    auto id = FreeEndo::identity(n - 1);
    for (int i = 1; i < static_cast<int>(n); ++i) {
      CHECK(rho_D(n, {i, -i}) == id);
      CHECK(rho_D(n, {-i, i}) == id);
      for (int j = i + 1; j < static_cast<int>(n); ++j) {
        if (j == i + 1)
          CHECK(rho_D(n, {i, j, i}) == rho_D(n, {j, i, j}));
        else
          CHECK(rho_D(n, {i, j}) == rho_D(n, {j, i}));
      }
    }
  }
}

TEST_CASE("semidirect products") {
  for (std::size_t n = 2; n <= 8; ++n) {
    auto r = semidirect_relation_check(SemidirectKind::B, n);
    CHECK(r.ok());
    CHECK(r.relations_checked == n * (n - 1) / 2);
    CHECK(r.graph.rank() == n);
  }
  for (std::size_t n = 4; n <= 8; ++n) {
    auto r = semidirect_relation_check(SemidirectKind::D, n);
    CHECK(r.ok());
    CHECK(r.relations_checked == n * (n - 1) / 2);
  }
  CHECK(semidirect_relation_check(SemidirectKind::B, 2).graph.label(0, 1) == 4);
  CHECK_THROWS_AS(semidirect_relation_check(SemidirectKind::B, 9), Error);
}

TEST_CASE("abelian characters") {
  auto g = builtin_graph("B3");
  auto chi = b_type_character(3);
  CHECK(abelian_character(g, chi, {1, 1, 2}) == 2);
  CHECK(abelian_character(g, chi, {}) == 0);
  CHECK(abelian_character(g, chi, {1, 2, -1}) == 0);
  CHECK_THROWS_AS(abelian_character(builtin_graph("A3"), {{0, 1}, {1, 0}, {2, 0}}, {1}), Error);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = oracle::random_signed(rng, 3, 7), b = oracle::random_signed(rng, 3, 5);
    SignedWord ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(abelian_character(g, chi, ab) == abelian_character(g, chi, a) + abelian_character(g, chi, b));
  }
}

TEST_CASE("free reduction") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    auto u = random_free(rng, 3, 10), v = random_free(rng, 3, 10);
    std::vector<int> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(free_reduce(uv) == free_reduce(u) * free_reduce(v));
    CHECK(free_reduce(uv).letters() == reduce_by_deletion(uv));
  }
  CHECK(cyclic_reduce(w("x1 x2 x1^-1")) == w("x2"));
  CHECK(free_conjugate(w("x1 x2 x3"), w("x3 x1 x2")));
  CHECK_FALSE(free_conjugate(w("x1 x2"), w("x2^-1 x1")));
}

TEST_CASE("LKB basis and phi examples") {
  auto B = lkb_basis(builtin_graph("A2"));
  REQUIRE(B.size() == 3);
  CHECK(B.root_string(2) == "(1,1)");
  auto phi1 = lkb_phi_matrix(B, 0);
  const std::size_t e1 = 0, e2 = 1, e12 = 2;
  for (std::size_t r = 0; r < 3; ++r) CHECK(phi1[r][e1].is_zero());
  CHECK(phi1[e2][e2] == P("1 - y"));
  CHECK(phi1[e12][e2] == TwoVarPoly(1));
  CHECK(phi1[e1][e2].is_zero());
  CHECK(phi1[e2][e12] == TwoVarPoly::y());
  CHECK(phi1[e12][e12].is_zero());

  CHECK(lkb_basis(builtin_graph("A3")).size() == 6);
  CHECK(lkb_basis(builtin_graph("D4")).size() == 12);
  CHECK(lkb_basis(builtin_graph("E6")).size() == 36);
  CHECK_THROWS_AS(lkb_basis(builtin_graph("B3")), Error);
  CHECK_THROWS_AS(lkb_basis(builtin_graph("affA2")), Error);
}

TEST_CASE("phi satisfies the Artin relations") {
  for (auto name : {"A2", "A3", "D4"}) {
    auto B = lkb_basis(builtin_graph(name));
    auto v = validate_lkb(B, lkb_matrices(B, nullptr));
    CHECK_MESSAGE(v.relations_ok(), name);
    CHECK_FALSE(v.invertible());
  }
}

TEST_CASE("zero T table is degenerate") {
  auto B = lkb_basis(builtin_graph("A2"));
  TTable T(2, std::vector<RatPoly>(3));
  CHECK(lkb_Phi_matrix(B, 0, T) == lkb_phi_matrix(B, 0));
  auto v = validate_lkb(B, lkb_matrices(B, &T));
  CHECK(v.relations_ok());
  CHECK_FALSE(v.invertible());
  CHECK_THROWS_AS(lkb_Phi_matrix(B, 0, TTable(1)), Error);
}

TEST_CASE("determinant against cofactor expansion") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> c(-2, 2);
  auto rnd = [&] {
    return TwoVarPoly(static_cast<long>(c(rng))) + TwoVarPoly(static_cast<long>(c(rng))) * TwoVarPoly::x() +
           TwoVarPoly(static_cast<long>(c(rng))) * TwoVarPoly::y();
  };
  std::function<TwoVarPoly(const PolyMatrix&)> cofactor = [&](const PolyMatrix& m) {
    if (m.size() == 1) return m[0][0];
    TwoVarPoly d;
    for (std::size_t j = 0; j < m.size(); ++j) {
      PolyMatrix minor;
      for (std::size_t i = 1; i < m.size(); ++i) {
        std::vector<TwoVarPoly> row;
        for (std::size_t k = 0; k < m.size(); ++k)
          if (k != j) row.push_back(m[i][k]);
        minor.push_back(row);
      }
      TwoVarPoly t = m[0][j] * cofactor(minor);
      d += j % 2 == 0 ? t : -t;
    }
    return d;
  };
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + trial % 5;
    PolyMatrix m(n, std::vector<TwoVarPoly>(n));
    for (auto& row : m)
      for (auto& e : row)
        if (c(rng) != 0) e = rnd();
    CHECK(determinant(m) == cofactor(m));
  }
}

TEST_CASE("T-table solver") {
  {
    auto g = builtin_graph("A1");
    auto T = solve_T_table(g, 0);
    CHECK(T[0][0] == RatPoly::constant(1));
    auto B = lkb_basis(g);
    CHECK(validate_lkb(B, lkb_matrices(B, &T)).invertible());
  }
  for (auto g : {CoxeterGraph({"a", "b"}, {}), builtin_graph("A2"), builtin_graph("A3")}) {
    auto name = g.to_json();
    auto T = solve_T_table(g, 2);
    auto B = lkb_basis(g);
    auto v = validate_lkb(B, lkb_matrices(B, &T));
    CHECK_MESSAGE(v.relations_ok(), name);
    CHECK_MESSAGE(v.invertible(), name);
    // Round trip through the text format.
    CHECK(read_T_table(B, write_T_table(B, T)) == T);
  }
  CHECK_THROWS_AS(solve_T_table(builtin_graph("A4"), 2), Error);
  CHECK_THROWS_AS(solve_T_table(builtin_graph("A2"), 4), Error);
}

TEST_CASE("a T table with the wrong sign breaks a relation") {
  auto g = builtin_graph("A2");
  auto B = lkb_basis(g);
  auto T = solve_T_table(g, 2);
  T[1][0] = T[1][0] + RatPoly::constant(1);
  auto v = validate_lkb(B, lkb_matrices(B, &T));
  REQUIRE(v.violated.size() == 1);
  CHECK(v.violated[0] == std::pair<Letter, Letter>{0, 1});
}

TEST_CASE("injectivity scan") {
  auto g = builtin_graph("A2");
  auto B = lkb_basis(g);
  auto T = solve_T_table(g, 2);
  auto good = injectivity_scan(g, lkb_matrices(B, &T), 5);
  CHECK(good.collision_count == 0);
  std::size_t expected = 1;
  for (std::size_t len = 1; len <= 5; ++len) {
    std::set<std::set<oracle::Word>> classes;
    for (std::size_t code = 0; code < (1u << len); ++code) {
      oracle::Word word;
      for (std::size_t i = 0; i < len; ++i) word.push_back((code >> i) & 1);
      classes.insert(oracle::monoid_class(g, word));
    }
    expected += classes.size();
  }
  CHECK(good.elements == expected);
  auto bare = injectivity_scan(g, lkb_matrices(B, nullptr), 5);
  CHECK(bare.collision_count > 0);
  CHECK(injectivity_scan(g, lkb_matrices(B, &T), 0).elements == 1);
}

TEST_CASE("polynomial text format") {
  CHECK(parse_poly("y^2 - 2*y + 1") == RatPoly({1, -2, 1}));
  CHECK(parse_poly("-3") == RatPoly::constant(-3));
  CHECK(parse_poly("1/2*y") == RatPoly({0, mpq_class(1, 2)}));
  CHECK_THROWS_AS(parse_poly("y^"), Error);
  CHECK((TwoVarPoly::x() * P("y - 1")).to_string() == "x*y - x");
}

TEST_CASE("injectivity scan on A3") {
  auto g = builtin_graph("A3");
  auto B = lkb_basis(g);
  auto T = solve_T_table(g, 2);
  auto rep = injectivity_scan(g, lkb_matrices(B, &T), 4);
  CHECK(rep.collision_count == 0);
  CHECK(rep.elements > 1);
}
