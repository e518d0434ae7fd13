#pragma once

// Dense two-phase simplex over exact rationals with Bland's rule.
//
//   minimize c.x  subject to  A x = b,  x >= 0.

#include <vector>

#include "sns2/polycore.hpp"

namespace sns2 {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational objective;
  // When infeasible: y with y.A <= 0 columnwise and y.b > 0.
  std::vector<Rational> farkas;
  std::size_t pivots = 0;
};

LpResult solve_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c);

}  // namespace sns2
