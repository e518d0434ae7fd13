#pragma once

// Exact checks of weighted square-times-monomial certificates.

#include <string>
#include <vector>

#include "sns2/compound.hpp"
#include "sns2/polyio.hpp"

namespace sns2 {

enum class CertClaim { Nonneg, Nonpos, StrictPos, StrictNeg };

const char* to_string(CertClaim c);
CertClaim cert_claim_from_string(std::string_view s);

// weight * (sqrt_num / sqrt_den)^2 * X^monomial, weight a positive rational.
struct CertTerm {
  MultiPoly sqrt_num{1};
  Integer sqrt_den = 1;
  Rational weight = 1;
  Monomial monomial{1};
};

struct ConeCertificate {
  std::size_t arity = 1;
  CertClaim claim = CertClaim::Nonneg;
  MultiPoly target{1};
  MultiPoly multiplier{1};
  std::vector<CertTerm> terms;
  // Decomposition of the multiplier itself; empty when not supplied.
  std::vector<CertTerm> multiplier_terms;
};

ConeCertificate certificate_from_json(const Json& j);
Json to_json(const ConeCertificate& c);

struct CertResult {
  bool pass = false;
  // sign * multiplier * target - sum of terms, scaled by the common denominator.
  MultiPoly residual{1};
  Integer scale = 1;
  bool multiplier_checked = false;  // multiplier_terms present and matching
  MultiPoly multiplier_residual{1};
  std::string reason;
};

// Sum of weight * sqrt^2 * X^m scaled by `scale` so that it is integral.
MultiPoly expand_terms(std::size_t arity, const std::vector<CertTerm>& terms, Integer& scale);

CertResult verify_certificate(const ConeCertificate& c);

enum class BridgeScheme { Lemma2, Lemma3 };

struct BridgeResult {
  MultiPoly P{4};                 // in alpha, beta, gamma, delta = X1..X4
  std::vector<MultiPoly> values;  // alpha..delta in the minor-sum variables
  MultiPoly denominator{1};       // J1^2 J3^2
  bool holds = false;             // denominator * q5 == P(alpha, ..., delta)
};

MultiPoly bridge_polynomial(BridgeScheme s);
BridgeResult substitution_bridge(const MinorSums& j, BridgeScheme s);

}  // namespace sns2
