#include <doctest.h>

#include <random>

#include "garside_kit/coxeter_engine.hpp"
#include "garside_kit/errors.hpp"
#include "garside_kit/homology.hpp"
#include "garside_kit/presentation.hpp"
#include "garside_kit/ratpoly.hpp"

using namespace gk;

namespace {

CohomologyGroup Z(std::size_t r, std::vector<long> torsion = {}) {
  CohomologyGroup h;
  h.free_rank = r;
  for (long t : torsion) h.torsion.emplace_back(t);
  return h;
}

std::vector<CohomologyGroup> H(const std::string& name) { return integer_cohomology(builtin_graph(name)); }

// Poincare polynomial of W_T from the word-reduction enumerator.
RatPoly poincare(const CoxeterGraph& g, Subset T) {
  auto sub = g.induced(subset_letters(T));
  std::vector<mpq_class> c;
  for (auto& w : enumerate_group(sub, 1000)) {
    if (c.size() <= w.length()) c.resize(w.length() + 1);
    c[w.length()] += 1;
  }
  return RatPoly(c);
}

// Sum of (-1)^lg(u) over minimal coset representatives of W_T / W_K,
// from the factorization W_T(q) = W^K(q) W_K(q).
long alternating_coset_count(const CoxeterGraph& g, Subset T, Subset K) {
  RatPoly q, r;
  poincare(g, T).divmod(poincare(g, K), q, r);
  REQUIRE(r.is_zero());
  return q.eval(-1).get_num().get_si();
}

CoxeterGraph permuted(const CoxeterGraph& g, const std::vector<Letter>& order) { return g.induced(order); }

}  // namespace

TEST_CASE("coset minima examples") {
  auto g = builtin_graph("A2");
  auto d = coset_minima(g, subset_of({0}), reduce_word(g, {1, 0}));
  CHECK(d.minimum == reduce_word(g, {1}));
  CHECK(d.remainder == reduce_word(g, {0}));
  auto w = reduce_word(g, {0, 1, 0});
  CHECK(coset_minima(g, 0, w).minimum == w);
  CHECK(coset_minima(g, 0, w).remainder.is_identity());
  CHECK(coset_minima(g, 3, w).minimum.is_identity());
  CHECK(coset_minima(g, 3, w).remainder == w);
}

TEST_CASE("coset minima factor additively") {
  for (auto name : {"A3", "B3", "H3"}) {
    auto g = builtin_graph(name);
    for (auto& w : enumerate_group(g, 100))
      for (Subset T = 0; T < 8; ++T) {
        auto d = coset_minima(g, T, w);
        CHECK(multiply(d.minimum, d.remainder) == w);
        CHECK(d.minimum.length() + d.remainder.length() == w.length());
        for (Letter s : right_descents(d.minimum)) CHECK_FALSE((T >> s & 1));
        for (Letter s : d.remainder.word()) CHECK((T >> s & 1));
      }
  }
}

TEST_CASE("boundary examples") {
  auto a1 = boundary_matrices(builtin_graph("A1"));
  REQUIRE(a1.symbolic[1].size() == 1);
  auto& e = a1.symbolic[1][0];
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms[0].coefficient == 1);
  CHECK(e.terms[0].word.empty());
  CHECK(e.terms[1].coefficient == -1);
  CHECK(e.terms[1].word == std::vector<Letter>{0});
  CHECK(a1.integer[1][0][0] == 0);
  CHECK(a1.integer[0].empty());

  auto a2 = boundary_matrices(builtin_graph("A2"));
  for (auto& b : a2.symbolic[2])
    if (b.to == subset_of({0})) {
      // u in W_S with no right descent s1: 1, s2, s1 s2.
      CHECK(b.terms.size() == 3);
      CHECK(b.integer() == -1);  // second vertex: outer sign -1
    }
}

TEST_CASE("integer boundaries against Poincare polynomials") {
  for (auto name : {"A3", "B3", "H3", "F4", "I2(5)", "A1+A2"}) {
    auto g = builtin_graph(name);
    auto c = boundary_matrices(g);
    for (std::size_t q = 1; q < c.cells.size(); ++q)
      for (std::size_t col = 0; col < c.cells[q].size(); ++col) {
        Subset T = c.cells[q][col];
        auto letters = subset_letters(T);
        for (std::size_t j = 0; j < letters.size(); ++j) {
          Subset K = T & ~(Subset{1} << letters[j]);
          std::size_t row = static_cast<std::size_t>(
              std::find(c.cells[q - 1].begin(), c.cells[q - 1].end(), K) - c.cells[q - 1].begin());
          long expected = (j % 2 == 0 ? 1 : -1) * alternating_coset_count(g, T, K);
          CHECK(c.integer[q][row][col] == expected);
        }
      }
  }
}

TEST_CASE("smith normal form") {
  CHECK(smith_invariants({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) ==
        std::vector<mpz_class>{2, 6, 12});
  CHECK(smith_invariants({{0, 0}, {0, 0}}).empty());
  CHECK(smith_invariants({{4, 0}, {0, 6}}) == std::vector<mpz_class>{2, 12});

  // Determinant check: product of invariants equals |det| for random nonsingular matrices.
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m(3, std::vector<mpz_class>(3));
    for (auto& row : m)
      for (auto& x : row) x = d(rng);
    mpz_class det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    auto inv = smith_invariants(m);
    if (det == 0) {
      CHECK(inv.size() < 3);
      continue;
    }
    REQUIRE(inv.size() == 3);
    CHECK(inv[0] * inv[1] * inv[2] == abs(det));
    CHECK(inv[1] % inv[0] == 0);
    CHECK(inv[2] % inv[1] == 0);
  }
}

TEST_CASE("cohomology table rows") {
  CHECK(H("I2(5)") == std::vector<CohomologyGroup>{Z(1), Z(1), Z(0)});
  CHECK(H("I2(7)") == std::vector<CohomologyGroup>{Z(1), Z(1), Z(0)});
  CHECK(H("I2(6)") == std::vector<CohomologyGroup>{Z(1), Z(2), Z(1)});
  CHECK(H("I2(8)") == std::vector<CohomologyGroup>{Z(1), Z(2), Z(1)});
  CHECK(H("H3") == std::vector<CohomologyGroup>{Z(1), Z(1), Z(1), Z(1)});
  CHECK(H("F4") == std::vector<CohomologyGroup>{Z(1), Z(2), Z(2), Z(2), Z(1)});
  CHECK(H("H4") == std::vector<CohomologyGroup>{Z(1), Z(1), Z(0), Z(1, {2}), Z(1)});
  CHECK(H("H4")[3].to_string() == "Z x Z_2");
}

TEST_CASE("E6 needs the opt-in flag") {
  CHECK_THROWS_AS(H("E6"), Error);
  CHECK_THROWS_AS(H("E7"), Error);
  CHECK_THROWS_AS(H("affA2"), Error);
}

TEST_CASE("braid group cohomology") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto h = H("A" + std::to_string(n - 1));
    REQUIRE(h.size() == n);
    CHECK(h[0] == Z(1));
    CHECK(h[1] == Z(1));
    for (std::size_t q = 2; q < n; ++q) CHECK(h[q].free_rank == 0);
  }
  // B_4 and B_5: equal in every degree (H^4 of B_4 is zero).
  auto b4 = H("A3"), b5 = H("A4");
  b4.push_back(Z(0));
  CHECK(b4 == b5);
  CHECK(b5[3] == Z(0, {2}));
  CHECK(b5[4].is_zero());
}

TEST_CASE("cohomology does not depend on the vertex order") {
  auto g = builtin_graph("A3");
  auto base = integer_cohomology(g);
  std::vector<Letter> order{0, 1, 2};
  while (std::next_permutation(order.begin(), order.end())) CHECK(integer_cohomology(permuted(g, order)) == base);
  auto b3 = builtin_graph("B3");
  CHECK(integer_cohomology(permuted(b3, {2, 0, 1})) == integer_cohomology(b3));
}

TEST_CASE("abelianization") {
  CHECK(abelianization(builtin_graph("A4")).rank == 1);
  CHECK(abelianization(builtin_graph("A1")).rank == 1);
  CHECK(abelianization(builtin_graph("B3")).rank == 2);
  CHECK(abelianization(builtin_graph("affA2")).rank == 1);
  CHECK(abelianization(CoxeterGraph({"a", "b"}, {{"a", "b", kInfinity}})).rank == 2);
  for (auto name : {"A3", "B3", "D4", "F4", "H3", "I2(6)", "I2(5)", "A1+A2", "B4"}) {
    auto g = builtin_graph(name);
    auto a = abelianization(g);
    CHECK(a.torsion.empty());
    CHECK(a.rank == integer_cohomology(g)[1].free_rank);
  }
}

TEST_CASE("resolution squares to zero") {
  for (auto name : {"A1", "A2", "A3", "B2", "B3", "H3", "I2(5)"}) {
    auto r = verify_resolution(builtin_graph(name));
    CHECK_MESSAGE(r.integer_ok, name);
    CHECK_MESSAGE(r.group_ring_ok, name);
  }
  CHECK_THROWS_AS(verify_resolution(builtin_graph("A5")), Error);
}

TEST_CASE("parallel boundaries match") {
  HomologyOptions opts;
  opts.budgets.jobs = 3;
  auto g = builtin_graph("F4");
  auto a = boundary_matrices(g, opts), b = boundary_matrices(g);
  CHECK(a.integer == b.integer);
}

TEST_CASE("poset examples") {
  HatCoxPoset a1(builtin_graph("A1"));
  CHECK(a1.size() == 4);
  HatCoxPoset a2(builtin_graph("A2"));
  CHECK(a2.size() == 24);
  CHECK(a2.quotient_cells().size() == 4);
  std::size_t vertices = 0;
  for (auto& c : a2.cells())
    if (a2.dimension(c) == 0) ++vertices;
  CHECK(vertices == 6);
}

TEST_CASE("poset order axioms and the W-action") {
  for (auto name : {"A2", "A3", "B3", "A1+A1+A1"}) {
    HatCoxPoset P(builtin_graph(name));
    const auto& cells = P.cells();
    const std::size_t N = cells.size();
    std::vector<std::vector<bool>> le(N, std::vector<bool>(N));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) le[i][j] = P.leq(cells[i], cells[j]);
    bool reflexive = true, antisymmetric = true, transitive = true;
    for (std::size_t i = 0; i < N; ++i) {
      reflexive = reflexive && le[i][i];
      for (std::size_t j = 0; j < N; ++j) {
        if (i != j && le[i][j] && le[j][i]) antisymmetric = false;
        if (!le[i][j]) continue;
        for (std::size_t k = 0; k < N && transitive; ++k)
          if (le[j][k] && !le[i][k]) transitive = false;
      }
    }
    CHECK_MESSAGE(reflexive, name);
    CHECK_MESSAGE(antisymmetric, name);
    CHECK_MESSAGE(transitive, name);

    bool preserved = true, free_action = true;
    for (std::uint32_t u = 1; u < P.group_order(); ++u)
      for (std::size_t i = 0; i < N; ++i) {
        auto ui = P.act(u, cells[i]);
        if (ui.w == cells[i].w) free_action = false;
        for (std::size_t j = 0; j < N; j += 3)
          if (le[i][j] != P.leq(ui, P.act(u, cells[j]))) preserved = false;
      }
    CHECK_MESSAGE(preserved, name);
    CHECK_MESSAGE(free_action, name);

    const std::size_t n = P.graph().rank();
    std::vector<std::size_t> by_dim(n + 1, 0);
    for (auto& c : cells) ++by_dim[P.dimension(c)];
    std::size_t binom = 1;
    for (std::size_t q = 0; q <= n; ++q) {
      CHECK(by_dim[q] == P.group_order() * binom);
      binom = binom * (n - q) / (q + 1);
    }
  }
}

TEST_CASE("faces are exactly the covering cells") {
  HatCoxPoset P(builtin_graph("A3"));
  for (auto& c : P.cells()) {
    auto f = P.facets(c);
    std::size_t expected = 0;
    for (auto& d : P.cells())
      if (P.dimension(d) + 1 == P.dimension(c) && P.leq(c, d)) ++expected;
    CHECK(f.size() == expected);
    for (auto& d : f) CHECK(P.leq(c, d));
  }
}

TEST_CASE("two-cell boundaries are the Artin relators") {
  for (auto name : {"A3", "B3", "H3", "I2(5)", "A1+A2"}) {
    auto g = builtin_graph(name);
    HatCoxPoset P(g);
    auto pres = artin_presentation(g);
    for (Letter s = 0; s < g.rank(); ++s)
      for (Letter t = s + 1; t < g.rank(); ++t) {
        auto w = P.two_cell_boundary(s, t);
        CHECK(std::find(pres.relators.begin(), pres.relators.end(), w) != pres.relators.end());
      }
  }
}

TEST_CASE("cohomology export") {
  auto h = H("H4");
  auto j = cohomology_json("H4", h);
  CHECK(j.find("\"group\":\"Z x Z_2\"") != std::string::npos);
  auto t = cohomology_table({{"H3", H("H3")}, {"H4", h}});
  CHECK(t.find("H^4") != std::string::npos);
  CHECK(t.find("Z x Z_2") != std::string::npos);
}
