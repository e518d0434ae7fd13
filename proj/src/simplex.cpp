#include "sns2/simplex.hpp"

namespace sns2 {

namespace {

struct Tableau {
  std::size_t m, n;  // constraint rows, original columns
  std::vector<std::vector<Rational>> t;  // m rows of n + m + 1 (last = rhs)
  std::vector<Rational> z;               // reduced costs; z.back() = -objective
  std::vector<std::size_t> basis;
  std::size_t pivots = 0;

  std::size_t rhs() const { return n + m; }

  void pivot(std::size_t r, std::size_t col) {
    Rational inv = 1 / t[r][col];
    for (auto& v : t[r]) {
      if (v != 0) v *= inv;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][col] == 0) continue;
      Rational f = t[i][col];
      for (std::size_t j = 0; j <= rhs(); ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
    }
    if (z[col] != 0) {
      Rational f = z[col];
      for (std::size_t j = 0; j <= rhs(); ++j)
        if (t[r][j] != 0) z[j] -= f * t[r][j];
    }
    basis[r] = col;
    ++pivots;
  }

  // Bland's rule over the original columns; false when optimal, throws never.
  // Returns 0 = optimal, 1 = pivoted, 2 = unbounded.
  int step(const std::vector<bool>& skip_row) {
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (z[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == n) return 0;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (skip_row[i] || t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs()] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return 2;
    pivot(leave, enter);
    return 1;
  }
};

}  // namespace

LpResult solve_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw Error(ErrorCode::InvalidArgument, "LP: b length differs from row count");
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "LP: ragged constraint matrix");
  }

  Tableau tb;
  tb.m = m;
  tb.n = n;
  tb.t.assign(m, std::vector<Rational>(n + m + 1));
  tb.z.assign(n + m + 1, Rational(0));
  tb.basis.resize(m);
  std::vector<int> flip(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) flip[i] = -1;
    for (std::size_t j = 0; j < n; ++j) tb.t[i][j] = flip[i] * a[i][j];
    tb.t[i][n + i] = 1;
    tb.t[i][n + m] = flip[i] * b[i];
    tb.basis[i] = n + i;
  }
  // Phase 1: minimize the sum of artificials.
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) tb.z[j] -= tb.t[i][j];
  for (std::size_t i = 0; i < m; ++i) tb.z[n + m] -= tb.t[i][n + m];

  std::vector<bool> skip(m, false);
  while (tb.step(skip) == 1) {
  }

  LpResult res;
  if (tb.z[n + m] != 0) {
    res.status = LpStatus::Infeasible;
    res.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) res.farkas[i] = flip[i] * (1 - tb.z[n + i]);
    res.pivots = tb.pivots;
    return res;
  }

  // Drive zero-level artificials out; rows with nothing to pivot on are redundant.
  for (std::size_t i = 0; i < m; ++i) {
    if (tb.basis[i] < n) continue;
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (tb.t[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col == n) skip[i] = true;
    else tb.pivot(i, col);
  }

  // Phase 2 reduced costs.
  for (std::size_t j = 0; j <= n + m; ++j) tb.z[j] = j < n ? c[j] : Rational(0);
  for (std::size_t i = 0; i < m; ++i) {
    if (skip[i]) continue;
    const Rational& cb = c[tb.basis[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j <= n + m; ++j)
      if (tb.t[i][j] != 0) tb.z[j] -= cb * tb.t[i][j];
  }
  int s;
  while ((s = tb.step(skip)) == 1) {
  }
  res.pivots = tb.pivots;
  if (s == 2) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (!skip[i] && tb.basis[i] < n) res.x[tb.basis[i]] = tb.t[i][n + m];
  res.objective = -tb.z[n + m];
  return res;
}

}  // namespace sns2
