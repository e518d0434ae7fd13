#include <doctest.h>

#include "sns2/certs.hpp"
#include "sns2/signpat.hpp"
#include "support.hpp"

using namespace sns2;

namespace {

ConeCertificate bundled(const char* name) {
  return certificate_from_json(Json::parse(testsupport::read_data(std::string("certs/") + name + ".cert.json")));
}

MultiPoly bump(const MultiPoly& p, std::size_t idx) {
  std::vector<Term> t(p.terms().begin(), p.terms().end());
  t[idx].coeff += 1;
  return MultiPoly::from_terms(p.arity(), std::move(t));
}

}  // namespace

TEST_SUITE("certs") {

TEST_CASE("bundled lemma certificates verify exactly") {
  for (const char* name : {"lemma2", "lemma3"}) {
    ConeCertificate c = bundled(name);
    CertResult r = verify_certificate(c);
    CHECK(r.pass);
    CHECK(r.residual.is_zero());
    CHECK(r.multiplier_checked);
    CHECK(c.claim == CertClaim::Nonpos);
  }
  CHECK(bundled("lemma2").target == bridge_polynomial(BridgeScheme::Lemma2));
  CHECK(bundled("lemma3").target == bridge_polynomial(BridgeScheme::Lemma3));
}

TEST_CASE("every single-coefficient perturbation fails") {
  for (const char* name : {"lemma2", "lemma3"}) {
    const ConeCertificate c = bundled(name);
    for (std::size_t i = 0; i < c.target.size(); ++i) {
      ConeCertificate d = c;
      d.target = bump(c.target, i);
      CertResult r = verify_certificate(d);
      CHECK_FALSE(r.pass);
      CHECK_FALSE(r.residual.is_zero());
    }
    for (std::size_t i = 0; i < c.multiplier.size(); ++i) {
      ConeCertificate d = c;
      d.multiplier = bump(c.multiplier, i);
      CHECK_FALSE(verify_certificate(d).pass);
    }
    for (std::size_t t = 0; t < c.terms.size(); ++t) {
      for (std::size_t i = 0; i < c.terms[t].sqrt_num.size(); ++i) {
        ConeCertificate d = c;
        d.terms[t].sqrt_num = bump(c.terms[t].sqrt_num, i);
        CertResult r = verify_certificate(d);
        CHECK_FALSE(r.pass);
        CHECK_FALSE(r.residual.is_zero());
      }
      ConeCertificate d = c;
      d.terms[t].weight += 1;
      CHECK_FALSE(verify_certificate(d).pass);
    }
  }
}

TEST_CASE("passing certificates hold at sampled positive points") {
  std::mt19937_64 rng(51);
  for (const char* name : {"lemma2", "lemma3"}) {
    ConeCertificate c = bundled(name);
    REQUIRE(verify_certificate(c).pass);
    for (int k = 0; k < 100; ++k) {
      auto x = testsupport::random_positive_point(rng, 4);
      REQUIRE(evaluate(c.multiplier, x) > 0);
      CHECK(evaluate(c.target, x) <= 0);
    }
  }
}

TEST_CASE("claims, rational square roots and errors") {
  Json j = Json::parse(R"({"arity":1,"claim":"strict-pos","target":"X1^2 + 1","multiplier":"1",
    "terms":[{"weight":4,"sqrt":[["1/2",[1]]],"monomial":[0]},{"sqrt":"1","monomial":[0]}]})");
  ConeCertificate c = certificate_from_json(j);
  CHECK(verify_certificate(c).pass);
  CHECK(certificate_from_json(to_json(c)).terms.size() == 2);
  CHECK(verify_certificate(certificate_from_json(to_json(c))).pass);
  // Strict claim without a constant square term.
  ConeCertificate s = c;
  s.target = parse_poly("X1^2", 1);
  s.terms.pop_back();
  CHECK_FALSE(verify_certificate(s).pass);
  s.claim = CertClaim::Nonneg;
  CHECK(verify_certificate(s).pass);
  ConeCertificate e = c;
  e.terms.clear();
  CHECK_THROWS_AS(verify_certificate(e), Error);
  ConeCertificate a = c;
  a.target = parse_poly("X1*X2", 2);
  CHECK_THROWS_AS(verify_certificate(a), Error);
  CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"arity":1})")), Error);
  CHECK_THROWS_AS(cert_claim_from_string("maybe"), Error);
}

TEST_CASE("substitution bridges hold for symbolic minor sums") {
  MinorSums j = symbolic_minor_sums(5);
  for (auto s : {BridgeScheme::Lemma2, BridgeScheme::Lemma3}) {
    BridgeResult r = substitution_bridge(j, s);
    CHECK(r.holds);
    CHECK(r.denominator == parse_poly("X1^2*X3^2", 5));
  }
  BridgeResult z = substitution_bridge(minor_sums(symbolic_matrix(SignPattern(5))), BridgeScheme::Lemma2);
  CHECK(z.holds);
  CHECK(z.denominator.is_zero());
  CHECK_THROWS_AS(substitution_bridge(symbolic_minor_sums(4), BridgeScheme::Lemma2), Error);
}

}
