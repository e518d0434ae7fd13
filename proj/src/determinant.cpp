#include <bit>
#include <unordered_map>

#include "sns2/polycore.hpp"

namespace sns2 {

namespace {

struct MaskPair {
  std::uint64_t rows, cols;
  bool operator==(const MaskPair&) const = default;
};

struct MaskPairHash {
  std::size_t operator()(const MaskPair& k) const {
    std::uint64_t h = k.rows * 0x9E3779B97F4A7C15ull;
    h ^= k.cols + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Position of bit `b` among the set bits of `mask`.
int rank_in(std::uint64_t mask, int b) {
  return std::popcount(mask & ((std::uint64_t{1} << b) - 1));
}

}  // namespace

struct LaplaceExpander::Impl {
  const PolyMatrix& m;
  std::unordered_map<MaskPair, MultiPoly, MaskPairHash> cache;

  explicit Impl(const PolyMatrix& mat) : m(mat) {}

  bool nz(int i, int j) const { return !m(i, j).is_zero(); }

  MultiPoly compute(std::uint64_t rows, std::uint64_t cols) {
    const int k = std::popcount(rows);
    if (k == 0) return MultiPoly::constant(m.arity(), 1);
    if (k == 1) return m(std::countr_zero(rows), std::countr_zero(cols));
    if (k == 2) {
      int r0 = std::countr_zero(rows), r1 = 63 - std::countl_zero(rows);
      int c0 = std::countr_zero(cols), c1 = 63 - std::countl_zero(cols);
      MultiPoly a = nz(r0, c0) && nz(r1, c1) ? m(r0, c0) * m(r1, c1) : MultiPoly(m.arity());
      if (nz(r0, c1) && nz(r1, c0)) a -= m(r0, c1) * m(r1, c0);
      return a;
    }

    // Line with the fewest nonzeros; rows before columns on ties, then lowest index.
    int best = -1, best_count = k + 1;
    bool best_is_row = true;
    for (std::uint64_t r = rows; r; r &= r - 1) {
      int i = std::countr_zero(r), count = 0;
      for (std::uint64_t c = cols; c; c &= c - 1) count += nz(i, std::countr_zero(c));
      if (count < best_count) best = i, best_count = count, best_is_row = true;
    }
    for (std::uint64_t c = cols; c; c &= c - 1) {
      int j = std::countr_zero(c), count = 0;
      for (std::uint64_t r = rows; r; r &= r - 1) count += nz(std::countr_zero(r), j);
      if (count < best_count) best = j, best_count = count, best_is_row = false;
    }
    MultiPoly total(m.arity());
    if (best_count == 0) return total;

    if (best_is_row) {
      const int i = best, pi = rank_in(rows, i);
      for (std::uint64_t c = cols; c; c &= c - 1) {
        int j = std::countr_zero(c);
        if (!nz(i, j)) continue;
        MultiPoly sub = minor(rows & ~(std::uint64_t{1} << i), cols & ~(std::uint64_t{1} << j));
        if (sub.is_zero()) continue;
        MultiPoly t = m(i, j) * sub;
        if ((pi + rank_in(cols, j)) % 2) total -= t; else total += t;
      }
    } else {
      const int j = best, pj = rank_in(cols, j);
      for (std::uint64_t r = rows; r; r &= r - 1) {
        int i = std::countr_zero(r);
        if (!nz(i, j)) continue;
        MultiPoly sub = minor(rows & ~(std::uint64_t{1} << i), cols & ~(std::uint64_t{1} << j));
        if (sub.is_zero()) continue;
        MultiPoly t = m(i, j) * sub;
        if ((pj + rank_in(rows, i)) % 2) total -= t; else total += t;
      }
    }
    return total;
  }

  MultiPoly minor(std::uint64_t rows, std::uint64_t cols) {
    if (std::popcount(rows) <= 2) return compute(rows, cols);
    MaskPair key{rows, cols};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    MultiPoly v = compute(rows, cols);
    cache.emplace(key, v);
    return v;
  }
};

LaplaceExpander::LaplaceExpander(const PolyMatrix& m) : impl_(std::make_unique<Impl>(m)) {
  if (m.size() > 64) throw Error(ErrorCode::UnsupportedSize, "Laplace expansion limited to side 64");
}

LaplaceExpander::~LaplaceExpander() = default;

MultiPoly LaplaceExpander::minor(std::uint64_t rows, std::uint64_t cols) {
  if (std::popcount(rows) != std::popcount(cols)) {
    throw Error(ErrorCode::InvalidArgument, "minor needs equally many rows and columns");
  }
  std::uint64_t all = impl_->m.size() == 64 ? ~std::uint64_t{0}
                                            : (std::uint64_t{1} << impl_->m.size()) - 1;
  if ((rows | cols) & ~all) throw Error(ErrorCode::IndexOutOfRange, "minor index out of range");
  return impl_->minor(rows, cols);
}

std::size_t LaplaceExpander::cache_size() const { return impl_->cache.size(); }

Integer integer_determinant(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

MultiPoly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "determinant of an empty matrix");
  if (m.is_constant()) {
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!m(i, j).is_zero()) a[i][j] = m(i, j).terms()[0].coeff;
    return MultiPoly::constant(m.arity(), integer_determinant(std::move(a)));
  }
  LaplaceExpander ex(m);
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return ex.minor(all, all);
}

}  // namespace sns2
