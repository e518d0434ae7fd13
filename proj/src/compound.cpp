#include "sns2/compound.hpp"

#include <bit>

namespace sns2 {

std::vector<std::pair<std::size_t, std::size_t>> compound_basis(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.emplace_back(i, j);
  return b;
}

PolyMatrix second_additive_compound(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "second additive compound needs n >= 2");
  const auto basis = compound_basis(n);
  PolyMatrix c(basis.size(), m.arity());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const auto [i, j] = basis[a];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto [k, l] = basis[b];
      if (a == b) {
        c.set(a, b, m(i, i) + m(j, j));
        continue;
      }
      const std::size_t pi[2] = {i, j}, pk[2] = {k, l};
      int shared = (i == k) + (i == l) + (j == k) + (j == l);
      if (shared != 1) continue;
      int upos = (i == k || i == l) ? 1 : 0;
      int vpos = (k == i || k == j) ? 1 : 0;
      const MultiPoly& e = m(pi[upos], pk[vpos]);
      if (e.is_zero()) continue;
      c.set(a, b, upos == vpos ? e : -e);
    }
  }
  return c;
}

MultiPoly det2(const PolyMatrix& m) { return determinant(second_additive_compound(m)); }

MultiPoly MinorSums::J(long k) const {
  if (k == 0) return MultiPoly::constant(arity, 1);
  if (k < 0 || k > static_cast<long>(n)) return MultiPoly(arity);
  return sums[k - 1];
}

MinorSums minor_sums(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "minor sums of an empty matrix");
  if (n > 30) throw Error(ErrorCode::UnsupportedSize, "minor sums limited to n <= 30");
  MinorSums out;
  out.n = n;
  out.arity = m.arity();
  out.sums.assign(n, MultiPoly(m.arity()));
  if (m.is_constant()) {
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
      std::vector<std::size_t> idx;
      for (std::uint64_t r = s; r; r &= r - 1) idx.push_back(std::countr_zero(r));
      std::vector<std::vector<Integer>> a(idx.size(), std::vector<Integer>(idx.size()));
      for (std::size_t x = 0; x < idx.size(); ++x)
        for (std::size_t y = 0; y < idx.size(); ++y)
          if (!m(idx[x], idx[y]).is_zero()) a[x][y] = m(idx[x], idx[y]).terms()[0].coeff;
      out.sums[idx.size() - 1] += MultiPoly::constant(m.arity(), integer_determinant(std::move(a)));
    }
    return out;
  }
  LaplaceExpander ex(m);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    out.sums[std::popcount(s) - 1] += ex.minor(s, s);
  }
  return out;
}

MinorSums symbolic_minor_sums(std::size_t n) {
  MinorSums out;
  out.n = n;
  out.arity = n;
  for (std::size_t i = 0; i < n; ++i) out.sums.push_back(MultiPoly::variable(n, i));
  return out;
}

PolyMatrix script_M(const MinorSums& j) {
  if (j.n < 2) throw Error(ErrorCode::InvalidArgument, "script_M needs n >= 2");
  const std::size_t s = j.n - 1;
  PolyMatrix m(s, j.arity);
  for (std::size_t r = 1; r <= s; ++r)
    for (std::size_t c = 1; c <= s; ++c)
      m.set(r - 1, c - 1, j.J(2 * static_cast<long>(r) - static_cast<long>(c)));
  return m;
}

MultiPoly qn_from_minor_sums(const MinorSums& j) { return determinant(script_M(j)); }

MultiPoly symbolic_qn(std::size_t n) { return qn_from_minor_sums(symbolic_minor_sums(n)); }

MultiPoly qn_cofactor_when_jn_zero(const MinorSums& j) {
  if (j.n < 2) throw Error(ErrorCode::InvalidArgument, "q_n needs n >= 2");
  if (j.n == 2) return MultiPoly::constant(j.arity, 1);
  PolyMatrix full = script_M(j);
  std::vector<std::size_t> lead(j.n - 2);
  for (std::size_t i = 0; i < lead.size(); ++i) lead[i] = i;
  return determinant(full.principal(lead));
}

BivariatePair phat_qhat(const MinorSums& j) {
  if (j.n < 2) throw Error(ErrorCode::InvalidArgument, "phat/qhat need n >= 2");
  BivariatePair out;
  const long n = static_cast<long>(j.n);
  for (long m = 0; n - 2 * m >= 0; ++m) out.phat.push_back(j.J(n - 2 * m));
  for (long m = 0; n - 1 - 2 * m >= 0; ++m) out.qhat.push_back(j.J(n - 1 - 2 * m));
  return out;
}

namespace {

int trimmed_degree(const TPoly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[d].is_zero()) --d;
  return d;
}

}  // namespace

MultiPoly sylvester_resultant(const TPoly& p, const TPoly& q, std::size_t arity) {
  const int dp = trimmed_degree(p), dq = trimmed_degree(q);
  if (dp < 0 && dq < 0) {
    throw Error(ErrorCode::ZeroPolynomial, "resultant of two zero polynomials is undefined");
  }
  if (dp < 0 || dq < 0) {
    // Res(0, q) is 1 for a nonzero constant q and 0 otherwise.
    int other = dp < 0 ? dq : dp;
    return MultiPoly::constant(arity, other == 0 ? 1 : 0);
  }
  const std::size_t s = static_cast<std::size_t>(dp + dq);
  if (s == 0) return MultiPoly::constant(arity, 1);
  PolyMatrix syl(s, arity);
  // Rows hold coefficients from the leading one down.
  for (int r = 0; r < dq; ++r)
    for (int k = 0; k <= dp; ++k)
      if (!p[dp - k].is_zero()) syl.set(r, r + k, p[dp - k]);
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dq; ++k)
      if (!q[dq - k].is_zero()) syl.set(dq + r, r + k, q[dq - k]);
  return determinant(syl);
}

MultiPoly sylvester_resultant_mu(const BivariatePair& pair, std::size_t arity) {
  return sylvester_resultant(pair.phat, pair.qhat, arity);
}

}  // namespace sns2
