#include "sns2/certs.hpp"

namespace sns2 {

const char* to_string(CertClaim c) {
  switch (c) {
    case CertClaim::Nonneg: return "nonneg";
    case CertClaim::Nonpos: return "nonpos";
    case CertClaim::StrictPos: return "strict-pos";
    case CertClaim::StrictNeg: return "strict-neg";
  }
  return "?";
}

CertClaim cert_claim_from_string(std::string_view s) {
  if (s == "nonneg") return CertClaim::Nonneg;
  if (s == "nonpos") return CertClaim::Nonpos;
  if (s == "strict-pos") return CertClaim::StrictPos;
  if (s == "strict-neg") return CertClaim::StrictNeg;
  throw Error(ErrorCode::Parse, "unknown certificate claim '" + std::string(s) + "'");
}

namespace {

// Polynomial with rational coefficients, returned as numerator / denominator.
void rational_poly_from_json(const Json& j, std::size_t arity, MultiPoly& num, Integer& den) {
  den = 1;
  if (!j.is_array()) {
    num = poly_from_json(j, arity);
    return;
  }
  std::vector<std::pair<Rational, Monomial>> raw;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_array() || t[1].size() != arity)
      throw Error(ErrorCode::Parse, "certificate term must be [coeff, [exponents]]");
    std::vector<Exp> e;
    for (const Json& x : t[1]) {
      if (!x.is_number_unsigned() || x.get<unsigned>() > 255) throw Error(ErrorCode::Parse, "bad exponent");
      e.push_back(static_cast<Exp>(x.get<unsigned>()));
    }
    Rational c = rational_from_json(t[0]);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    raw.emplace_back(c, Monomial(std::move(e)));
  }
  std::vector<Term> terms;
  for (auto& [c, m] : raw) {
    Rational scaled = c * den;
    terms.push_back({std::move(m), scaled.get_num()});
  }
  num = MultiPoly::from_terms(arity, std::move(terms));
}

std::vector<CertTerm> terms_from_json(const Json& arr, std::size_t arity) {
  if (!arr.is_array()) throw Error(ErrorCode::Parse, "certificate terms must be a list");
  std::vector<CertTerm> out;
  for (const Json& t : arr) {
    if (!t.is_object() || !t.contains("sqrt") || !t.contains("monomial"))
      throw Error(ErrorCode::Parse, "certificate term needs sqrt and monomial");
    CertTerm ct;
    rational_poly_from_json(t["sqrt"], arity, ct.sqrt_num, ct.sqrt_den);
    const Json& m = t["monomial"];
    if (!m.is_array() || m.size() != arity) throw Error(ErrorCode::ArityMismatch, "monomial length differs from arity");
    std::vector<Exp> e;
    for (const Json& x : m) {
      if (!x.is_number_unsigned() || x.get<unsigned>() > 255) throw Error(ErrorCode::Parse, "bad exponent");
      e.push_back(static_cast<Exp>(x.get<unsigned>()));
    }
    ct.monomial = Monomial(std::move(e));
    if (t.contains("weight")) ct.weight = rational_from_json(t["weight"]);
    if (ct.weight <= 0) throw Error(ErrorCode::InvalidArgument, "certificate weights must be positive");
    out.push_back(std::move(ct));
  }
  return out;
}

Json terms_to_json(const std::vector<CertTerm>& terms) {
  Json arr = Json::array();
  for (const auto& t : terms) {
    Json o;
    if (t.weight != 1) o["weight"] = rational_to_json(t.weight);
    if (t.sqrt_den == 1) {
      o["sqrt"] = to_text(t.sqrt_num);
    } else {
      Json list = Json::array();
      for (const Term& s : t.sqrt_num.terms()) {
        auto e = s.monomial.exponents();
        list.push_back(Json::array({rational_to_json(Rational(s.coeff, t.sqrt_den)),
                                    std::vector<unsigned>(e.begin(), e.end())}));
      }
      o["sqrt"] = list;
    }
    auto e = t.monomial.exponents();
    o["monomial"] = std::vector<unsigned>(e.begin(), e.end());
    arr.push_back(o);
  }
  return arr;
}

int claim_sign(CertClaim c) { return c == CertClaim::Nonneg || c == CertClaim::StrictPos ? 1 : -1; }

bool strict_claim(CertClaim c) { return c == CertClaim::StrictPos || c == CertClaim::StrictNeg; }

}  // namespace

ConeCertificate certificate_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "certificate must be a JSON object");
  for (const char* key : {"arity", "claim", "target", "multiplier", "terms"})
    if (!j.contains(key)) throw Error(ErrorCode::Parse, std::string("certificate is missing '") + key + "'");
  if (!j["arity"].is_number_unsigned() || j["arity"].get<std::size_t>() == 0)
    throw Error(ErrorCode::Parse, "certificate arity must be a positive integer");
  if (!j["claim"].is_string()) throw Error(ErrorCode::Parse, "certificate claim must be a string");
  ConeCertificate c;
  c.arity = j["arity"].get<std::size_t>();
  c.claim = cert_claim_from_string(j["claim"].get<std::string>());
  c.target = poly_from_json(j["target"], c.arity);
  c.multiplier = poly_from_json(j["multiplier"], c.arity);
  c.terms = terms_from_json(j["terms"], c.arity);
  if (j.contains("multiplier_terms")) c.multiplier_terms = terms_from_json(j["multiplier_terms"], c.arity);
  return c;
}

Json to_json(const ConeCertificate& c) {
  Json j;
  j["arity"] = c.arity;
  j["claim"] = to_string(c.claim);
  j["target"] = to_text(c.target);
  j["multiplier"] = to_text(c.multiplier);
  if (!c.multiplier_terms.empty()) j["multiplier_terms"] = terms_to_json(c.multiplier_terms);
  j["terms"] = terms_to_json(c.terms);
  return j;
}

MultiPoly expand_terms(std::size_t arity, const std::vector<CertTerm>& terms, Integer& scale) {
  scale = 1;
  for (const auto& t : terms) {
    if (t.sqrt_num.arity() != arity || t.monomial.arity() != arity)
      throw Error(ErrorCode::ArityMismatch, "certificate term arity mismatch");
    Integer d2 = t.sqrt_den * t.sqrt_den * t.weight.get_den();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d2.get_mpz_t());
  }
  MultiPoly sum(arity);
  for (const auto& t : terms) {
    // scale * weight / den^2 is an integer by construction.
    Integer f = scale / (t.sqrt_den * t.sqrt_den * t.weight.get_den()) * t.weight.get_num();
    sum += MultiPoly::monomial(t.monomial, f) * t.sqrt_num.pow(2);
  }
  return sum;
}

CertResult verify_certificate(const ConeCertificate& c) {
  if (c.terms.empty()) throw Error(ErrorCode::InvalidArgument, "certificate has an empty decomposition");
  if (c.target.arity() != c.arity || c.multiplier.arity() != c.arity)
    throw Error(ErrorCode::ArityMismatch, "certificate polynomials disagree with its arity");
  CertResult r;
  MultiPoly sum = expand_terms(c.arity, c.terms, r.scale);
  r.residual = c.multiplier * c.target * (r.scale * claim_sign(c.claim)) - sum;
  r.multiplier_residual = MultiPoly(c.arity);
  if (!c.multiplier_terms.empty()) {
    Integer ms;
    MultiPoly msum = expand_terms(c.arity, c.multiplier_terms, ms);
    r.multiplier_residual = c.multiplier * ms - msum;
    r.multiplier_checked = r.multiplier_residual.is_zero();
  }
  if (!r.residual.is_zero()) {
    r.reason = "decomposition does not match sign * multiplier * target";
  } else if (c.multiplier.is_zero()) {
    r.reason = "multiplier is zero";
  } else if (!c.multiplier_terms.empty() && !r.multiplier_checked) {
    r.reason = "multiplier decomposition does not match the multiplier";
  } else if (strict_claim(c.claim) &&
             std::none_of(c.terms.begin(), c.terms.end(), [](const CertTerm& t) {
               return t.monomial.is_one() && t.sqrt_num.is_constant() && !t.sqrt_num.is_zero();
             })) {
    r.reason = "strict claim needs a nonzero constant square term";
  } else {
    r.pass = true;
  }
  return r;
}

MultiPoly bridge_polynomial(BridgeScheme s) {
  return s == BridgeScheme::Lemma2
             ? parse_poly("3*X1*X3*X4 + 2*X2*X3*X4 - X1*X2*X4 - X2^2*X4 - X1^3 - X1^2*X2 - X3^2*X4 - X3*X4^2", 4)
             : parse_poly("3*X1*X3*X4 + 2*X2*X3*X4 - X3^2*X4 - X1^2*X3 - X1*X2*X4 - X2^2*X4 - X1*X4^2 - X2*X4^2", 4);
}

BridgeResult substitution_bridge(const MinorSums& j, BridgeScheme s) {
  if (j.n != 5) throw Error(ErrorCode::UnsupportedSize, "substitution bridge needs n = 5");
  const MultiPoly J1 = j.J(1), J2 = j.J(2), J3 = j.J(3), J4 = j.J(4), J5 = j.J(5);
  BridgeResult r;
  r.P = bridge_polynomial(s);
  const MultiPoly alpha = J1 * J2 * J3, delta = J3.pow(2);
  if (s == BridgeScheme::Lemma2)
    r.values = {alpha, J1 * (J5 - J2 * J3), J1.pow(2) * J4, delta};
  else
    r.values = {alpha, J1 * (J1 * J4 - J2 * J3), J1 * J5, delta};
  r.denominator = J1.pow(2) * J3.pow(2);
  r.holds = r.denominator * qn_from_minor_sums(j) == compose(r.P, r.values);
  return r;
}

}  // namespace sns2
