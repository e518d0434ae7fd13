#pragma once

// Second additive compound, minor-sums and the banded determinant q_n.

#include <vector>

#include "sns2/polycore.hpp"

namespace sns2 {

// Index pairs (i, j), i < j, in lexicographic order; 0-based.
std::vector<std::pair<std::size_t, std::size_t>> compound_basis(std::size_t n);

PolyMatrix second_additive_compound(const PolyMatrix& m);

MultiPoly det2(const PolyMatrix& m);

struct MinorSums {
  std::size_t n = 0;
  std::size_t arity = 1;
  std::vector<MultiPoly> sums;  // sums[i - 1] = J_i

  // J_k with J_0 = 1 and J_k = 0 outside 0..n.
  MultiPoly J(long k) const;
};

MinorSums minor_sums(const PolyMatrix& m);

// J_i is the fresh variable X_i of arity n.
MinorSums symbolic_minor_sums(std::size_t n);

PolyMatrix script_M(const MinorSums& j);
MultiPoly qn_from_minor_sums(const MinorSums& j);

// q_n in the fresh variables J_1..J_n.
MultiPoly symbolic_qn(std::size_t n);

// When J_n vanishes the last row of script_M is (0, ..., 0, J_{n-1}), so
// q_n = J_{n-1} * cofactor. Returns that cofactor (the leading block's determinant).
MultiPoly qn_cofactor_when_jn_zero(const MinorSums& j);

// Coefficients in t = mu^2, lowest degree first.
using TPoly = std::vector<MultiPoly>;

struct BivariatePair {
  TPoly phat;  // J_n + t J_{n-2} + t^2 J_{n-4} + ...
  TPoly qhat;  // J_{n-1} + t J_{n-3} + ...
};

BivariatePair phat_qhat(const MinorSums& j);

// Sylvester resultant in t using the trimmed degrees of both inputs.
MultiPoly sylvester_resultant(const TPoly& p, const TPoly& q, std::size_t arity);
MultiPoly sylvester_resultant_mu(const BivariatePair& pair, std::size_t arity);

}  // namespace sns2
