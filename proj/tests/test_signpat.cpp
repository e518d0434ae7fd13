#include <doctest.h>

#include "sns2/compound.hpp"
#include "sns2/polyio.hpp"
#include "sns2/signpat.hpp"
#include "support.hpp"

using namespace sns2;

using testsupport::pattern_from_index;
using testsupport::random_pattern;

TEST_SUITE("signpat") {

TEST_CASE("parse") {
  SignPattern a = parse_pattern("+ -\n+ 0\n");
  CHECK(a.size() == 2);
  CHECK(a(0, 0) == 1);
  CHECK(a(0, 1) == -1);
  CHECK(a(1, 0) == 1);
  CHECK(a(1, 1) == 0);
  SignPattern z = parse_pattern("0");
  CHECK(z.size() == 1);
  CHECK(z.nonzeros() == 0);
  CHECK_THROWS_AS(parse_pattern("+ x"), Error);
  CHECK_THROWS_AS(parse_pattern("+ -\n+"), Error);
  CHECK_THROWS_AS(parse_pattern(""), Error);
  CHECK(pattern_from_json(to_json(a)) == a);
  CHECK(parse_pattern(to_text(a)) == a);
}

TEST_CASE("symbolic matrix numbers nonzeros row-major") {
  SignPattern a = parse_pattern("+ -\n+ 0");
  PolyMatrix m = symbolic_matrix(a);
  CHECK(m.arity() == 3);
  CHECK(m(0, 0) == parse_poly("X1", 3));
  CHECK(m(0, 1) == parse_poly("-X2", 3));
  CHECK(m(1, 0) == parse_poly("X3", 3));
  CHECK(m(1, 1).is_zero());
}

TEST_CASE("cycles of the intro 2-pattern") {
  auto cs = enumerate_cycles(digraph(parse_pattern("+ -\n+ 0")));
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].vertices == std::vector<std::size_t>{0});
  CHECK(cs[0].odd());
  CHECK(cs[1].vertices == std::vector<std::size_t>{0, 1});
  CHECK(cs[1].odd());
  CHECK(enumerate_cycles(digraph(SignPattern(4))).empty());
}

TEST_CASE("cycle counts of complete digraphs") {
  // sum_k C(n,k) (k-1)!: 1 -> 1, 2 -> 3, 3 -> 8, 4 -> 24.
  const std::size_t expect[] = {0, 1, 3, 8, 24, 89};
  for (std::size_t n = 1; n <= 5; ++n) {
    SignPattern p(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p.set(i, j, 1);
    CHECK(enumerate_cycles(digraph(p)).size() == expect[n]);
  }
}

TEST_CASE("hoopings of two positive loops") {
  SignPattern p = parse_pattern("+ 0\n0 +");
  CHECK(minor_sum_via_hoopings(p, 2) == parse_poly("X1*X2", 2));
  CHECK(minor_sum_via_hoopings(parse_pattern("0 +\n0 0"), 2).is_zero());
}

TEST_CASE("exnz cycle census matches its minor sums") {
  SignPattern p = parse_pattern("0 + 0 0\n0 0 + 0\n+ 0 0 +\n0 - 0 0");
  MinorSums j = minor_sums(symbolic_matrix(p));
  CHECK(j.J(1).is_zero());
  CHECK(j.J(2).is_zero());
  CHECK(j.J(3) == parse_poly("X2*(X1*X3 - X4*X5)", 5));
  CHECK(j.J(4).is_zero());
  auto cycles = enumerate_cycles(digraph(p));
  std::size_t two = 0;
  for (const auto& c : cycles) two += c.length() == 2;
  CHECK(j.J(2).size() == two);
  for (std::size_t i = 1; i <= 4; ++i) CHECK(minor_sum_via_hoopings(p, i) == j.J(i));
}

TEST_CASE("property: hooping sums equal minor sums on every 3-pattern") {
  for (std::uint64_t id = 0; id < 19683; ++id) {
    SignPattern p = pattern_from_index(3, id);
    MinorSums j = minor_sums(symbolic_matrix(p));
    for (std::size_t i = 1; i <= 3; ++i) REQUIRE(minor_sum_via_hoopings(p, i) == j.J(i));
  }
}

TEST_CASE("property: hooping sums equal minor sums on random 4- and 5-patterns") {
  std::mt19937_64 rng(41);
  for (std::size_t n = 4; n <= 5; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      SignPattern p = random_pattern(rng, n, 1 + trial % 3);
      MinorSums j = minor_sums(symbolic_matrix(p));
      auto cycles = enumerate_cycles(digraph(p));
      auto hs = hoopings(n, cycles);
      for (std::size_t i = 1; i <= n; ++i) {
        MultiPoly h = minor_sum_via_hoopings(p, i);
        CHECK(h == j.J(i));
        std::size_t count = 0;
        for (const auto& x : hs) count += static_cast<std::size_t>(std::popcount(x.mask)) == i;
        CHECK(count == j.J(i).size());
      }
    }
  }
}

TEST_CASE("weakly reversible core") {
  SignPattern sc = parse_pattern("0 + 0\n0 0 +\n+ 0 0");
  CHECK(weakly_reversible_core(sc) == sc);
  SignPattern one = parse_pattern("0 +\n0 0");
  CHECK(weakly_reversible_core(one) == SignPattern(2));
  SignPattern ex = parse_pattern(
      "+ + + + +\n0 0 - - +\n0 0 0 - +\n0 0 0 0 +\n+ 0 0 0 0");
  SignPattern core = weakly_reversible_core(ex);
  std::vector<long> dropped;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (ex(i, j) != 0 && core(i, j) == 0) dropped.push_back(ex.variable_of(i, j) + 1);
  // Oracle: arc j -> i lies on a cycle iff i reaches j (Warshall closure).
  std::vector<std::vector<bool>> reach(5, std::vector<bool>(5, false));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) reach[j][i] = ex(i, j) != 0;
  for (std::size_t k = 0; k < 5; ++k)
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = 0; b < 5; ++b)
        if (reach[a][k] && reach[k][b]) reach[a][b] = true;
  std::vector<long> expected;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (ex(i, j) != 0 && i != j && !reach[i][j]) expected.push_back(ex.variable_of(i, j) + 1);
  CHECK(dropped == expected);
  // The pattern is strongly connected, so nothing is dropped.
  CHECK(dropped.empty());
  CHECK(det2(symbolic_matrix_in(core, ex)) == det2(symbolic_matrix(ex)));
}

TEST_CASE("property: weakly reversible core is idempotent and preserves det2") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 2 + trial % 4;
    SignPattern p = random_pattern(rng, n, 2 + trial % 3);
    SignPattern c = weakly_reversible_core(p);
    CHECK(weakly_reversible_core(c) == c);
    CHECK(is_subpattern(c, p));
    CHECK(det2(symbolic_matrix_in(c, p)) == det2(symbolic_matrix(p)));
  }
}

TEST_CASE("bipartite cycle test") {
  CHECK_FALSE(is_bipartite_cyclewise(parse_pattern("+ 0\n0 0")));
  CHECK(is_bipartite_cyclewise(parse_pattern("0 +\n+ 0")));
  CHECK(det2(symbolic_matrix(parse_pattern("0 +\n+ 0"))).is_zero());
}

TEST_CASE("transforms") {
  std::mt19937_64 rng(43);
  SignPattern p = random_pattern(rng, 4);
  CHECK(negate(negate(p)) == p);
  CHECK(transpose(transpose(p)) == p);
  CHECK(subpattern(p, {}) == p);
  SignPattern a = parse_pattern("+ -\n+ 0");
  CHECK(resign(a, {{0, 1}}) == parse_pattern("+ +\n+ 0"));
  CHECK_THROWS_AS(resign(a, {{2, 0}}), Error);
  CHECK(is_subpattern(subpattern(p, {{0, 0}, {1, 2}}), p));
}

TEST_CASE("isomorphism") {
  std::mt19937_64 rng(44);
  SignPattern p = random_pattern(rng, 5);
  CHECK(are_isomorphic(p, p));
  CHECK(are_isomorphic(p, transpose(p)));
  CHECK_FALSE(are_isomorphic(parse_pattern("+"), parse_pattern("-")));
  CHECK_THROWS_AS(are_isomorphic(SignPattern(9), SignPattern(9)), Error);
}

TEST_CASE("property: relabelled patterns are isomorphic with equal det2 census") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 3 + trial % 3;
    SignPattern p = random_pattern(rng, n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SignPattern q(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q.set(i, j, p(perm[i], perm[j]));
    if (trial % 2) q = transpose(q);
    CHECK(are_isomorphic(p, q));
    CHECK(term_census(det2(symbolic_matrix(p))) == term_census(det2(symbolic_matrix(q))));
  }
}

}
