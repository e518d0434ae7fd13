#include <doctest.h>

#include "sns2/compound.hpp"
#include "sns2/polyio.hpp"
#include "sns2/rules.hpp"
#include "support.hpp"

using namespace sns2;
using testsupport::load_matrix;
using testsupport::load_pattern;
using testsupport::pattern_from_index;
using testsupport::random_pattern;
using testsupport::property_p_samples;

namespace {

MultiPoly det2_of(const SignPattern& p) { return qn_from_minor_sums(minor_sums(symbolic_matrix(p))); }

const char* V(Verdict v) { return to_string(v); }

bool sampled_sign_ok(const MultiPoly& d, int sign, std::uint64_t seed, int points) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < points; ++k) {
    auto x = testsupport::random_positive_point(rng, d.arity());
    int s = sign_at(d, x);
    if (s * sign < 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("rules") {

TEST_CASE("example 1 triangle pattern is positive") {
  Classification2 c = classify(load_pattern("ex1"));
  CHECK(std::string(V(c.verdict)) == "Positive");
  REQUIRE(c.find("prop33"));
  CHECK(c.find("prop33")->data["verdict"] == "Positive");
}

TEST_CASE("exnz is nonpositive, not negative, nonzero") {
  SignPattern p = load_pattern("exnz");
  Classification2 c = classify(p);
  CHECK(c.verdict == Verdict::NonpositiveNonzero);
  CHECK(c.mixed_terms);
  CHECK(c.mixed_vertices == false);
  REQUIRE(c.find("qn_term_signs"));
  CHECK(c.find("qn_term_signs")->data["claim"] == "det2 <= 0");
  // det2 vanishes at a positive point: x1 x3 = x4 x5.
  std::vector<Rational> x{1, 1, 1, 1, 1};
  CHECK(evaluate(det2_of(p), x) == 0);
}

TEST_CASE("exmixed is negative") {
  Classification2 c = classify(load_pattern("exmixed"));
  CHECK(c.verdict == Verdict::Negative);
  CHECK(c.mixed_vertices == false);
  REQUIRE(c.find("qn_term_signs"));
  CHECK(c.find("qn_term_signs")->data["claim"] == "det2 < 0");
}

TEST_CASE("bipartite example is zero") {
  SignPattern p = load_pattern("bipartite6");
  REQUIRE(rule_bipartite(p).has_value());
  Classification2 c = classify(p);
  CHECK(c.verdict == Verdict::Zero);
  CHECK(c.find("bipartite_zero"));
  CHECK_FALSE(rule_bipartite(parse_pattern("+ 0\n0 0")).has_value());
  REQUIRE(rule_bipartite(parse_pattern("0 +\n+ 0")).has_value());
  CHECK(classify(parse_pattern("0 +\n+ 0")).verdict == Verdict::Zero);
}

TEST_CASE("ex4b fires property P") {
  SignPattern p = load_pattern("ex4b");
  MultiPoly d = det2_of(p);
  CHECK(d.size() == 194);
  CHECK(term_census(d).negative == 8);
  auto e = rule_prop44(p);
  REQUIRE(e.has_value());
  CHECK(e->data["loops"] == 4);
  Classification2 c = classify(p);
  CHECK(c.find("prop44_P"));
  CHECK((c.verdict == Verdict::Positive || c.verdict == Verdict::NonnegativeNonzero));
  CHECK(sampled_sign_ok(d, 1, 7, 200));
}

TEST_CASE("property P negative cases") {
  // Triangle present.
  CHECK_FALSE(rule_prop44(parse_pattern("0 + 0 0\n0 0 + 0\n+ 0 0 0\n0 0 0 0")).has_value());
  // Even loop.
  CHECK_FALSE(rule_prop44(parse_pattern("- 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0")).has_value());
  CHECK_THROWS_AS(rule_prop44(SignPattern(3)), Error);
}

TEST_CASE("exbasic fires lemma 1") {
  SignPattern p = load_pattern("exbasic");
  MinorSums j = minor_sums(symbolic_matrix(p));
  MultiPoly d = qn_from_minor_sums(j);
  CHECK(term_census(d).negative == 38);
  CHECK(term_census(d).positive == 3);
  auto f = rule_five_pattern_lemmas(j);
  CHECK(f[0].fired);
  CHECK(f[0].data["case"] == "i");
  CHECK(sign_of_expression(j.J(2)) == Sign3::Negative);
  for (long k : {1, 3, 4, 5}) CHECK(sign_of_expression(j.J(k)) == Sign3::Positive);
  Classification2 c = classify(p);
  CHECK(c.verdict == Verdict::Negative);
  CHECK(c.find("lem5pat1"));
}

TEST_CASE("exharder fires lemma 3") {
  SignPattern p = load_pattern("exharder");
  MinorSums j = minor_sums(symbolic_matrix(p));
  MultiPoly d = qn_from_minor_sums(j);
  CHECK(term_census(d).negative == 91);
  CHECK(term_census(d).positive == 13);
  CHECK(sign_of_expression(j.J(1) * j.J(4) - j.J(2) * j.J(3)) == Sign3::Positive);
  auto f = rule_five_pattern_lemmas(j);
  CHECK(f[2].fired);
  Classification2 c = classify(p);
  CHECK(c.find("lem5pat3"));
  CHECK((c.verdict == Verdict::NonpositiveNonzero || c.verdict == Verdict::Negative));
  CHECK(sampled_sign_ok(d, -1, 8, 200));
}

TEST_CASE("zero 5-pattern fires no lemma") {
  MinorSums j = minor_sums(symbolic_matrix(SignPattern(5)));
  for (const auto& f : rule_five_pattern_lemmas(j)) CHECK_FALSE(f.fired);
  CHECK(classify(SignPattern(5)).verdict == Verdict::Zero);
}

TEST_CASE("obstructions") {
  auto has = [](const std::vector<ObstructionFinding>& fs, const char* rule, bool nn, bool np) {
    for (const auto& f : fs)
      if (f.rule == rule && f.not_nonnegative == nn && f.not_nonpositive == np) return true;
    return false;
  };
  // 4-pattern with a triangle.
  SignPattern tri = parse_pattern("0 + 0 0\n0 0 + 0\n+ 0 0 0\n0 0 0 0");
  CHECK(has(rule_cycle_obstructions(tri), "obstruction_mod8", true, false));
  CHECK(det2_of(tri) == -(minor_sums(symbolic_matrix(tri)).J(3).pow(2)));
  // Pure 5-cycle: det2 = -J5^2.
  SignPattern c5(5);
  for (std::size_t i = 0; i < 5; ++i) c5.set((i + 1) % 5, i, 1);
  CHECK(has(rule_cycle_obstructions(c5), "obstruction_mod8", true, false));
  CHECK(det2_of(c5) == -(minor_sums(symbolic_matrix(c5)).J(5).pow(2)));
  // Loop at a vertex of a 4-cycle, fifth vertex empty: q5 = -J1^2 J4^2.
  SignPattern l4(5);
  for (std::size_t i = 0; i < 4; ++i) l4.set((i + 1) % 4, i, 1);
  l4.set(0, 0, 1);
  MinorSums j = minor_sums(symbolic_matrix(l4));
  CHECK(det2_of(l4) == -(j.J(1).pow(2) * j.J(4).pow(2)));
  CHECK(has(rule_cycle_obstructions(l4), "obstruction_loop_4cycle", true, false));
  // n = 6 (2 mod 4): nothing from the mod-8 list.
  CHECK(rule_cycle_obstructions(load_pattern("obstruct6")).empty());
}

TEST_CASE("obstruction 6-pattern is indefinite") {
  for (int s = 0; s < 8; ++s) {
    SignPattern p = load_pattern("obstruct6");
    if (s & 1) p.set(1, 1, -1);
    if (s & 2) p.set(3, 3, -1);
    if (s & 4) p.set(0, 2, -1);
    Classification2 c = classify(p);
    CHECK(c.verdict == Verdict::Indefinite);
  }
}

TEST_CASE("8-pattern gives q8 = alpha^4 beta^2 gamma^2") {
  std::mt19937_64 rng(81);
  SignPattern base = load_pattern("ex8pat");
  for (int trial = 0; trial < 50; ++trial) {
    SignPattern p = base;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t k = 0; k < 8; ++k)
        if (p(i, k) && rng() % 2) p.set(i, k, -1);
    MinorSums j = minor_sums(symbolic_matrix(p));
    REQUIRE(j.J(3).size() == 1);
    REQUIRE(j.J(4).size() == 2);
    REQUIRE(j.J(7).size() == 1);
    MultiPoly alpha = j.J(3);
    MultiPoly t0 = MultiPoly::monomial(j.J(4).terms()[0].monomial, j.J(4).terms()[0].coeff);
    MultiPoly t1 = j.J(4) - t0;
    // J7 = alpha * gamma picks out gamma.
    bool zero_is_gamma = alpha * t0 == j.J(7);
    MultiPoly gamma = zero_is_gamma ? t0 : t1, beta = zero_is_gamma ? t1 : t0;
    CHECK(alpha * gamma == j.J(7));
    CHECK(qn_from_minor_sums(j) == alpha.pow(4) * beta.pow(2) * gamma.pow(2));
  }
}

TEST_CASE("prop33 examples") {
  CHECK(rule_prop33(parse_pattern("+ 0 0\n0 - 0\n0 0 0")).verdict == Verdict::Indefinite);
  // Inside (3e): a loop and a disjoint 2-cycle.
  CHECK(rule_prop33(parse_pattern("+ 0 0\n0 0 +\n0 - 0")).verdict == Verdict::Zero);
  // Positive loops and an even (3b), no triangle.
  SignPattern pos = parse_pattern("+ + 0\n- + 0\n0 0 0");
  CHECK(rule_prop33(pos).verdict == Verdict::Positive);
  CHECK(direct_term_verdict(det2_of(pos)) == Verdict::Positive);
  CHECK_THROWS_AS(rule_prop33(SignPattern(4)), Error);
}

TEST_CASE("exhaustive 3-pattern census: prop33 equals the term-sign verdict") {
  std::size_t disagreements = 0;
  std::array<std::size_t, 7> counts{};
  for (std::uint64_t id = 0; id < 19683; ++id) {
    SignPattern p = pattern_from_index(3, id);
    Verdict r = rule_prop33(p).verdict;
    Verdict d = direct_term_verdict(det2_of(p));
    disagreements += r != d;
    ++counts[static_cast<int>(r)];
  }
  CHECK(disagreements == 0);
  CHECK(counts[static_cast<int>(Verdict::Positive)] == counts[static_cast<int>(Verdict::Negative)]);
}

TEST_CASE("2-pattern taxonomy over all 81 patterns") {
  for (std::uint64_t id = 0; id < 81; ++id) {
    SignPattern p = pattern_from_index(2, id);
    int pos = (p(0, 0) > 0) + (p(1, 1) > 0), neg = (p(0, 0) < 0) + (p(1, 1) < 0);
    Verdict expect = pos + neg == 0 ? Verdict::Zero
                     : neg == 0     ? Verdict::Positive
                     : pos == 0     ? Verdict::Negative
                                    : Verdict::Indefinite;
    Classification2 c = classify(p);
    CHECK(c.verdict == expect);
    if (c.verdict == Verdict::Indefinite) CHECK(c.witness.has_value());
  }
}

TEST_CASE("prop44 staged difference identity") {
  auto samples = property_p_samples(25, 91);
  REQUIRE(samples.size() == 25);
  for (const SignPattern& p : samples) {
    auto stages = prop44_stages(p);
    CHECK(stages.front().pattern == SignPattern(4));
    CHECK(stages.back().pattern == p);
    for (std::size_t s = 0; s + 1 < stages.size(); ++s) {
      if (stages[s + 1].kind == "loops") continue;
      PolyMatrix a = symbolic_matrix_in(stages[s].pattern, p), b = symbolic_matrix_in(stages[s + 1].pattern, p);
      MinorSums ja = minor_sums(a), jb = minor_sums(b);
      const auto& st = stages[s + 1];
      auto al = st.has_alpha ? st.alpha : std::pair<std::size_t, std::size_t>{0, 1};
      auto be = st.has_alpha ? st.beta : std::pair<std::size_t, std::size_t>{2, 3};
      const std::size_t ar = a.arity();
      MultiPoly J1a = b(al.first, al.first) + b(al.second, al.second);
      MultiPoly J1b = b(be.first, be.first) + b(be.second, be.second);
      MultiPoly Ca(ar), Cb(ar);
      if (st.has_alpha) Ca = -(b(al.first, al.second) * b(al.second, al.first));
      if (st.has_beta) Cb = -(b(be.first, be.second) * b(be.second, be.first));
      MultiPoly R = ja.J(4) + Ca * Cb - jb.J(4);
      MultiPoly J1 = ja.J(1), J2 = ja.J(2), J3 = ja.J(3);
      MultiPoly diff = (Ca - Cb).pow(2) * J1a * J1b + (J1b * Ca + J1a * Cb) * (J1 * J2 - J3) +
                       (Ca * J1a + Cb * J1b) * J3 + J1.pow(2) * R;
      CHECK(jb.J(2) == J2 + Ca + Cb);
      CHECK(qn_from_minor_sums(jb) - qn_from_minor_sums(ja) == diff);
    }
    CHECK(sampled_sign_ok(det2_of(p), 1, 5, 50));
  }
}

TEST_CASE("sign_of_expression") {
  CHECK(sign_of_expression(parse_poly("X1 - X2", 2)) == Sign3::Indefinite);
  CHECK(sign_of_expression(MultiPoly(2)) == Sign3::Zero);
  CHECK(sign_of_expression(parse_poly("-X1*X2", 2)) == Sign3::Negative);
  CHECK(sign_of_expression(parse_poly("X1^2 - X1*X2 + X2^2", 2), {0, 1}) == Sign3::Unknown);
}

TEST_CASE("property: minor sums of sign patterns are never Unknown") {
  std::mt19937_64 rng(92);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 3 + trial % 3;
    SignPattern p = trial < 150 ? pattern_from_index(3, rng() % 19683) : random_pattern(rng, n);
    MinorSums j = minor_sums(symbolic_matrix(p));
    for (const auto& s : j.sums) {
      CHECK(sign_of_expression(s, {0, 1}) != Sign3::Unknown);
      // Every term is a vertex: 0/1 exponents on the hyperplane sum = i.
      if (!s.is_zero()) CHECK(newton_polytope(s).vertex_count() == s.size());
    }
  }
}

TEST_CASE("property: fired semidefinite rules survive sampled evaluation") {
  std::mt19937_64 rng(93);
  int fired = 0;
  std::vector<SignPattern> corpus;
  for (const char* name : {"ex1", "exnz", "exmixed", "ex4b", "ex4c", "exbasic", "exharder", "bipartite6"})
    corpus.push_back(load_pattern(name));
  for (int trial = 0; trial < 200; ++trial) corpus.push_back(random_pattern(rng, 4 + trial % 2, 2 + trial % 3));
  for (std::size_t trial = 0; trial < corpus.size(); ++trial) {
    const SignPattern& p = corpus[trial];
    Classification2 c = classify(p, {2000, 1});
    MultiPoly d = det2_of(p);
    int sign = 0;
    if (c.verdict == Verdict::Positive || c.verdict == Verdict::NonnegativeNonzero) sign = 1;
    if (c.verdict == Verdict::Negative || c.verdict == Verdict::NonpositiveNonzero) sign = -1;
    if (c.verdict == Verdict::Zero) CHECK(d.is_zero());
    if (c.verdict == Verdict::Indefinite) CHECK((c.witness.has_value() || c.mixed_vertices == true));
    if (!sign) continue;
    ++fired;
    CHECK(sampled_sign_ok(d, sign, trial, 40));
  }
  CHECK(fired >= 15);
}

TEST_CASE("property: inheritance of indefiniteness to superpatterns") {
  std::mt19937_64 rng(94);
  int seen = 0;
  for (int trial = 0; trial < 150; ++trial) {
    SignPattern big = random_pattern(rng, 4, 1);
    std::vector<Entry> zero;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (big(i, j) && rng() % 2) zero.push_back({i, j});
    SignPattern small = subpattern(big, zero);
    Classification2 cs = classify(small, {2000, 1});
    if (cs.verdict != Verdict::Indefinite || !cs.witness) continue;
    ++seen;
    Verdict vb = classify(big, {2000, 1}).verdict;
    CHECK((vb == Verdict::Indefinite || vb == Verdict::Unresolved));
  }
  CHECK(seen > 10);
}

TEST_CASE("property: isomorphic patterns classify identically") {
  std::mt19937_64 rng(95);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 3 + trial % 2;
    SignPattern p = random_pattern(rng, n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SignPattern q(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q.set(i, j, p(perm[i], perm[j]));
    CHECK(classify(p).verdict == classify(q).verdict);
  }
}

TEST_CASE("ex4a matrix: J4 = 0 and det2 = J3 (J1 J2 - J3)") {
  Det2Data d = compute_det2(load_matrix("ex4a"));
  CHECK(d.det2.size() == 203);
  CHECK(d.det2.is_homogeneous());
  CHECK(d.det2.degree() == 6);
  CHECK(d.j.J(4).is_zero());
  CHECK(d.det2 == d.j.J(3) * (d.j.J(1) * d.j.J(2) - d.j.J(3)));
  CHECK(d.det2 == det2(d.matrix));
  FactorFinding f = jn_zero_factor(d.j);
  REQUIRE(f.applies);
  CHECK(f.data["factorization"] == "J3 * (-J3 + J1*J2)");
}

TEST_CASE("ex5CRN matrix: J5 = 0 factorization") {
  Det2Data d = compute_det2(load_matrix("ex5CRN"));
  CHECK(d.det2.size() == 531);
  CHECK(d.det2.degree() == 10);
  CHECK(d.det2.is_homogeneous());
  CHECK(d.j.J(5).is_zero());
  FactorFinding f = jn_zero_factor(d.j);
  REQUIRE(f.applies);
  // q5 with J5 = 0 is J4 * (J1*J2*J3 - J1^2*J4 - J3^2) = -J4 (J1^2 J4 - J3 (J1 J2 - J3)).
  CHECK(f.cofactor_j == parse_poly("J1*J2*J3 - J1^2*J4 - J3^2", 5));
  CHECK(d.det2 == d.j.J(4) * (d.j.J(1) * d.j.J(2) * d.j.J(3) - d.j.J(1).pow(2) * d.j.J(4) - d.j.J(3).pow(2)));
  Classification2 c = classify_matrix(d);
  CHECK(c.find("jn_zero_factor"));
}

TEST_CASE("zero matrix is Zero") {
  CHECK(classify_matrix(compute_det2(load_matrix("zero3"))).verdict == Verdict::Zero);
}

}
