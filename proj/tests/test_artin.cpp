#include <doctest.h>

#include <random>

#include "garside_kit/artin.hpp"
#include "garside_kit/errors.hpp"
#include "garside_kit/presentation.hpp"
#include "oracles.hpp"

using namespace gk;

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) c[j] = a[static_cast<std::size_t>(b[j] - 1)];
  return c;
}

std::vector<std::size_t> atoms_of(const std::vector<Letter>& w) { return {w.begin(), w.end()}; }

}  // namespace

TEST_CASE("kappa examples") {
  auto g = builtin_graph("A2");
  auto G = garside_structure_of(g);
  auto s12 = reduce_word(g, {0, 1});
  CHECK(G->atom_word(kappa(*G, s12)) == std::vector<std::size_t>{0, 1});
  CHECK(kappa(*G, identity_element(g)) == G->identity());
  CHECK(kappa(*G, longest_element(g)) == G->delta());
  CHECK(G->norm(G->delta()) == 3);
}

TEST_CASE("head_delta examples and brute force") {
  auto g = builtin_graph("A2");
  auto G = garside_structure_of(g);
  CHECK(G->atom_word(head_delta(*G, {0, 0, 1})) == std::vector<std::size_t>{0});
  CHECK(head_delta(*G, {1}) == G->atom(1));
  CHECK(head_delta(*G, {1, 0, 1}) == G->delta());

  std::mt19937 rng(7);
  for (const char* name : {"A3", "B3"}) {
    auto h = builtin_graph(name);
    auto H = garside_structure_of(h);
    for (int it = 0; it < 40; ++it) {
      auto w = oracle::random_positive(rng, 3, 1 + rng() % 6);
      CHECK(head_delta(*H, w) == oracle::head_by_enumeration(*H, h, w));
    }
  }
}

TEST_CASE("structure sizes") {
  auto A2 = garside_structure_of(builtin_graph("A2"));
  CHECK(A2->num_simples() == 6);
  CHECK(A2->norm(A2->delta()) == 3);
  auto A1 = garside_structure_of(builtin_graph("A1"));
  CHECK(A1->num_simples() == 2);
  CHECK(A1->delta() == A1->atom(0));
  auto H3 = garside_structure_of(builtin_graph("H3"));
  CHECK(H3->num_simples() == 120);
  CHECK(H3->norm(H3->delta()) == 15);
  CHECK_THROWS_AS(garside_structure_of(builtin_graph("affA2")), Error);
}

TEST_CASE("braid permutation and pure braid generators") {
  CHECK(braid_permutation(3, {1, -2, 1}) == std::vector<int>{3, 2, 1});
  CHECK(braid_permutation(3, {}) == std::vector<int>{1, 2, 3});
  CHECK(braid_permutation(4, pure_braid_generator(4, 1, 3)) == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(braid_permutation(3, {3}), Error);

  CHECK(pure_braid_generator(3, 1, 2) == SignedWord{1, 1});
  CHECK(pure_braid_generator(3, 1, 3) == SignedWord{2, 1, 1, -2});
  CHECK(pure_braid_generator(4, 2, 4) == SignedWord{3, 2, 2, -3});
  CHECK_THROWS_AS(pure_braid_generator(3, 2, 2), Error);
}

TEST_CASE("property: theta is a homomorphism onto Sym_n") {
  std::mt19937 rng(8);
  for (int it = 0; it < 300; ++it) {
    auto u = oracle::random_signed(rng, 4, rng() % 8), v = oracle::random_signed(rng, 4, rng() % 8);
    SignedWord uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(braid_permutation(5, uv) == compose(braid_permutation(5, u), braid_permutation(5, v)));
  }
  auto G = garside_structure_of(builtin_graph("A3"));
  std::set<std::vector<int>> image;
  for (Simple s = 0; s < G->num_simples(); ++s) {
    SignedWord w;
    for (auto a : G->atom_word(s)) w.push_back(static_cast<int>(a) + 1);
    image.insert(braid_permutation(4, w));
  }
  CHECK(image.size() == 24);
  auto P = braid_presentation(6);
  for (auto& r : P.relators) CHECK(braid_permutation(6, r) == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("property: order embedding of the weak order in A3") {
  auto g = builtin_graph("A3");
  auto els = enumerate_group(g, 100);
  REQUIRE(els.size() == 24);
  for (auto& v : els) {
    auto cls = oracle::monoid_class(g, atoms_of(v.word()));
    for (auto& u : els) CHECK(weak_le(u, v) == oracle::class_has_prefix(cls, atoms_of(u.word())));
  }
}

TEST_CASE("property: delta recursion") {
  std::mt19937 rng(9);
  for (const char* name : {"A3", "B3"}) {
    auto G = garside_structure_of(builtin_graph(name));
    for (int it = 0; it < 1000; ++it) {
      auto a = oracle::random_positive(rng, 3, rng() % 6), b = oracle::random_positive(rng, 3, rng() % 6);
      auto ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      auto adb = a;
      auto hb = G->atom_word(head_delta(*G, b));
      adb.insert(adb.end(), hb.begin(), hb.end());
      CHECK(head_delta(*G, ab) == head_delta(*G, adb));
    }
  }
}

TEST_CASE("property: Delta conjugation and Delta powers") {
  std::mt19937 rng(10);
  auto G = garside_structure_of(builtin_graph("A3"));
  for (int it = 0; it < 200; ++it) {
    auto w = oracle::random_positive(rng, 3, 1 + rng() % 8);
    SignedWord sw;
    for (auto x : w) sw.push_back(static_cast<int>(x) + 1);
    auto a = delta_normal_form(*G, sw);
    auto c = conjugate(*G, a, inverse(*G, delta_power(*G, 1)));  // Delta a Delta^-1
    CHECK(c.delta_power >= 0);
    long long r = static_cast<long long>(w.size());
    CHECK(left_le(*G, a, delta_power(*G, r)));
  }
}

TEST_CASE("permutation fast path agrees with the Coxeter engine") {
  auto g = builtin_graph("A3");
  PermutationGarside P(4);
  CoxeterGarside C(g);
  REQUIRE(P.num_simples() == C.num_simples());
  auto to_c = [&](Simple p) { return *C.simple_from_atoms(P.atom_word(p)); };
  std::set<Simple> hit;
  for (Simple p = 0; p < P.num_simples(); ++p) {
    Simple c = to_c(p);
    hit.insert(c);
    CHECK(P.atom_word(p) == C.atom_word(c));
    CHECK(P.norm(p) == C.norm(c));
    CHECK(to_c(P.tau(p)) == C.tau(c));
    CHECK(to_c(P.left_complement(p)) == C.left_complement(c));
    CHECK(to_c(P.right_complement(p)) == C.right_complement(c));
  }
  CHECK(hit.size() == 24);
  CHECK(to_c(P.delta()) == C.delta());
  std::mt19937 rng(12);
  for (int it = 0; it < 1000; ++it) {
    Simple a = static_cast<Simple>(rng() % 24), b = static_cast<Simple>(rng() % 24);
    CHECK(to_c(P.meet(a, b)) == C.meet(to_c(a), to_c(b)));
    CHECK(to_c(P.join(a, b)) == C.join(to_c(a), to_c(b)));
    auto pp = P.product(a, b);
    auto cp = C.product(to_c(a), to_c(b));
    REQUIRE(pp.has_value() == cp.has_value());
    if (pp) CHECK(to_c(*pp) == *cp);
  }
}

TEST_CASE("presentations") {
  auto B3 = braid_presentation(3);
  REQUIRE(B3.relators.size() == 1);
  CHECK(B3.relators[0] == SignedWord{1, 2, 1, -2, -1, -2});
  CHECK(verify_relators(Presentation{}, [](const SignedWord&) { return false; }).ok());

  for (std::size_t n = 2; n <= 6; ++n) {
    auto G = garside_structure_of(builtin_graph("A" + std::to_string(n - 1)));
    auto rep = verify_relators(braid_presentation(n), [&](const SignedWord& w) { return word_problem_nf(*G, w); });
    CHECK(rep.ok());
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    auto G = garside_structure_of(builtin_graph("A" + std::to_string(n - 1)));
    auto P = pure_braid_presentation(n);
    std::vector<SignedWord> images;
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t l = k + 1; l <= n; ++l) images.push_back(pure_braid_generator(n, k, l));
    auto rep = verify_relators(P, [&](const SignedWord& w) { return word_problem_nf(*G, substitute(w, images)); });
    CHECK(rep.ok());
    for (auto& r : P.relators) CHECK(braid_permutation(n, substitute(r, images)) == braid_permutation(n, {}));
  }
  // A wrong relator is reported.
  Presentation bad = braid_presentation(3);
  bad.relators.push_back({1, 2, -1, -2});
  auto G3 = garside_structure_of(builtin_graph("A2"));
  auto rep = verify_relators(bad, [&](const SignedWord& w) { return word_problem_nf(*G3, w); }, 2);
  CHECK(rep.failures == std::vector<std::size_t>{1});

  auto g = builtin_graph("B3");
  auto A = artin_presentation(g);
  CHECK(A.relators.size() == 3);
  auto GB = garside_structure_of(g);
  CHECK(verify_relators(A, [&](const SignedWord& w) { return word_problem_nf(*GB, w); }).ok());
  auto C = coxeter_presentation(g);
  CHECK(verify_relators(C, [&](const SignedWord& w) {
          std::vector<Letter> l;
          for (int x : w) l.push_back(static_cast<Letter>(std::abs(x) - 1));
          return reduce_word(g, l).is_identity();
        }).ok());
}

TEST_CASE("mapping class group presentations") {
  auto P110 = mcg_presentation(1, 1, 0);
  CHECK(P110.count("extra") == 0);
  CHECK(P110.generators == std::vector<std::string>{"x0", "y1"});
  auto P100 = mcg_presentation(1, 0, 0);
  REQUIRE(P100.count("extra") == 1);
  CHECK(P100.relator_string(P100.relators.size() - 1) == "x0 y1 x0 y1 x0 y1 x0 y1 x0 y1 x0 y1");

  // Gamma(1,1,0) is A2, so its Artin group is B_3.
  auto g = mcg_graph(1, 1, 0);
  CHECK(spherical_type(g, {0, 1}) == "A2");
  // Parabolic subgraphs named by the relations are spherical of the expected types.
  auto g2 = mcg_graph(3, 2, 2);
  auto type = [&](std::vector<std::string> X) {
    std::vector<Letter> sub;
    for (auto& x : X) sub.push_back(g2.index_of(x));
    std::sort(sub.begin(), sub.end());
    return spherical_type(g2, sub);
  };
  CHECK(type({"y1", "y2", "y3", "z"}) == "A4");
  CHECK(type({"x0", "y1", "y2", "y3", "z"}) == "A5");
  CHECK(type({"y1", "y2", "y3", "y4", "y5", "z"}) == "E6");
  CHECK(type({"x0", "y1", "y2", "y3", "y4", "y5", "z"}) == "E7");
  CHECK(type({"x1", "x2", "y1", "v1"}) == "B4");
  CHECK(type({"x0", "x1", "y1", "y2", "y3", "z"}) == "D6");
  CHECK(type({"x0", "x1", "x2", "y1"}) == "D4");

  // Every extra relator is a word in declared generators; the families fire
  // under their side conditions.
  for (int gg = 1; gg <= 3; ++gg)
    for (int r = 0; r <= 3; ++r)
      for (int n = 0; n <= 3; ++n) {
        auto P = mcg_presentation(gg, r, n);
        CHECK(P.relators.size() == P.tags.size());
        for (auto& rel : P.relators)
          for (int x : rel) CHECK(static_cast<std::size_t>(std::abs(x)) <= P.generators.size());
        if (gg >= 2 || (r == 0 && (n >= 1 || gg == 1))) CHECK(P.count("extra") > 0);
      }
  CHECK_THROWS_AS(mcg_presentation(0, 1, 0), Error);
  try {
    mcg_graph(1, 1, 0, "/nonexistent");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingGraphAsset);
  }
}
