#include "sns2/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "sns2/simplex.hpp"

namespace sns2 {

std::size_t NewtonPolytope::vertex_count() const {
  return static_cast<std::size_t>(std::count(vertex.begin(), vertex.end(), true));
}

namespace {

// LP over the convex-combination system; returns the Farkas vector when infeasible.
LpResult hull_lp(const std::vector<const std::vector<Exp>*>& pts, const std::vector<Exp>& target) {
  const std::size_t k = target.size();
  // Coordinates that vanish everywhere give trivial rows.
  std::vector<std::size_t> live;
  for (std::size_t d = 0; d < k; ++d) {
    bool any = target[d] != 0;
    for (const auto* p : pts) any = any || (*p)[d] != 0;
    if (any) live.push_back(d);
  }
  std::vector<std::vector<Rational>> a(live.size() + 1, std::vector<Rational>(pts.size()));
  std::vector<Rational> b(live.size() + 1);
  for (std::size_t r = 0; r < live.size(); ++r) {
    for (std::size_t i = 0; i < pts.size(); ++i) a[r][i] = (*pts[i])[live[r]];
    b[r] = target[live[r]];
  }
  for (std::size_t i = 0; i < pts.size(); ++i) a[live.size()][i] = 1;
  b[live.size()] = 1;
  LpResult res = solve_lp(a, b, std::vector<Rational>(pts.size(), Rational(0)));
  if (res.status == LpStatus::Infeasible) {
    // Expand the separating functional back to all coordinates (last entry is the offset).
    std::vector<Rational> w(k + 1, Rational(0));
    for (std::size_t r = 0; r < live.size(); ++r) w[live[r]] = res.farkas[r];
    w[k] = res.farkas[live.size()];
    res.farkas = std::move(w);
  }
  return res;
}

std::vector<Integer> integer_direction(const std::vector<Rational>& w, std::size_t k) {
  Integer l = 1;
  for (std::size_t i = 0; i < k; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w[i].get_den_mpz_t());
  std::vector<Integer> out(k);
  Integer g = 0;
  for (std::size_t i = 0; i < k; ++i) {
    out[i] = w[i].get_num() * (l / w[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace

bool in_convex_hull(const std::vector<std::vector<Exp>>& points, const std::vector<Exp>& target) {
  if (points.empty()) return false;
  std::vector<const std::vector<Exp>*> ptrs;
  for (const auto& p : points) {
    if (p.size() != target.size()) throw Error(ErrorCode::ArityMismatch, "hull test dimension mismatch");
    ptrs.push_back(&p);
  }
  return hull_lp(ptrs, target).status != LpStatus::Infeasible;
}

namespace {

// Decides vertex status point by point, sharing a cheap prefilter.
class VertexOracle {
 public:
  explicit VertexOracle(const MultiPoly& p) : k_(p.arity()) {
    for (const Term& t : p.terms()) {
      auto e = t.monomial.exponents();
      points_.emplace_back(e.begin(), e.end());
    }
    const std::size_t m = points_.size();
    state_.assign(m, kUnknown);
    direction_.assign(m, {});
    // A unique maximizer of any linear functional is a vertex.
    std::mt19937_64 rng(0x5eed);
    std::vector<std::int64_t> dots(m);
    const std::size_t trials = 4 * k_ + 24 + std::min<std::size_t>(2 * m, kMaxRandomTrials);
    for (std::size_t trial = 0; trial < trials; ++trial) {
      std::vector<std::int32_t> w(k_);
      if (trial < 2 * k_) {
        w[trial / 2] = trial % 2 ? -1 : 1;
      } else {
        for (auto& x : w) x = static_cast<std::int32_t>(rng() % 201) - 100;
      }
      for (std::size_t i = 0; i < m; ++i) dots[i] = kernels::dot(points_[i], w);
      auto best = std::max_element(dots.begin(), dots.end());
      if (std::count(dots.begin(), dots.end(), *best) != 1) continue;
      std::size_t i = static_cast<std::size_t>(best - dots.begin());
      if (state_[i] != kUnknown) continue;
      state_[i] = kVertex;
      direction_[i].assign(w.begin(), w.end());
    }
    sum_.assign(k_, 0);
    for (const auto& pt : points_)
      for (std::size_t c = 0; c < k_; ++c) sum_[c] += pt[c];
  }

  std::size_t size() const { return points_.size(); }

  bool is_vertex(std::size_t j) {
    if (state_[j] == kUnknown) state_[j] = decide(j) ? kVertex : kInterior;
    return state_[j] == kVertex;
  }

  NewtonPolytope finish() {
    NewtonPolytope np;
    np.arity = k_;
    for (std::size_t j = 0; j < size(); ++j) np.vertex.push_back(is_vertex(j));
    np.points = std::move(points_);
    np.direction = std::move(direction_);
    return np;
  }

  const std::vector<Integer>& direction(std::size_t j) const { return direction_[j]; }
  bool known_vertex(std::size_t j) const { return state_[j] == kVertex; }

 private:
  enum State : std::uint8_t { kUnknown, kVertex, kInterior };
  static constexpr std::size_t kMaxRandomTrials = 256;

  // Direction from the centroid towards j, if j uniquely maximizes it.
  bool centroid_direction(std::size_t j) {
    const std::size_t m = points_.size();
    std::vector<std::int32_t> w(k_);
    for (std::size_t c = 0; c < k_; ++c) {
      std::int64_t v = static_cast<std::int64_t>(m) * points_[j][c] - sum_[c];
      if (std::abs(v) >= (1 << 20)) return false;
      w[c] = static_cast<std::int32_t>(v);
    }
    const std::int64_t target = kernels::dot(points_[j], w);
    for (std::size_t i = 0; i < m; ++i)
      if (i != j && kernels::dot(points_[i], w) >= target) return false;
    direction_[j].assign(w.begin(), w.end());
    return true;
  }

  bool decide(std::size_t j) {
    const std::size_t m = points_.size();
    if (m > 1 && centroid_direction(j)) return true;
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < m; ++i)
      if (i != j) others.push_back(i);
    if (others.empty()) {
      direction_[j].assign(k_, Integer(0));
      return true;
    }
    // Try the nearest points first; feasibility there already settles it.
    std::vector<long> dist(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t c = 0; c < k_; ++c) dist[i] += std::abs(int(points_[i][c]) - int(points_[j][c]));
    std::stable_sort(others.begin(), others.end(), [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
    std::vector<const std::vector<Exp>*> ptrs;
    std::size_t used = 0;
    for (std::size_t near = 3 * (k_ + 1); near < others.size(); near *= 3) {
      for (; used < near; ++used) ptrs.push_back(&points_[others[used]]);
      LpResult r = hull_lp(ptrs, points_[j]);
      if (r.status != LpStatus::Infeasible) return false;
      // The functional separating j from its neighbours may separate it from everything.
      std::vector<Integer> w = integer_direction(r.farkas, k_);
      if (separates(w, j)) {
        direction_[j] = std::move(w);
        return true;
      }
    }
    for (; used < others.size(); ++used) ptrs.push_back(&points_[others[used]]);
    LpResult full = hull_lp(ptrs, points_[j]);
    if (full.status != LpStatus::Infeasible) return false;
    direction_[j] = integer_direction(full.farkas, k_);
    return true;
  }

  bool separates(const std::vector<Integer>& w, std::size_t j) const {
    auto dot = [&](std::size_t i) {
      Integer s = 0;
      for (std::size_t c = 0; c < k_; ++c)
        if (points_[i][c]) s += w[c] * points_[i][c];
      return s;
    };
    const Integer target = dot(j);
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (i != j && dot(i) >= target) return false;
    return true;
  }

  std::size_t k_;
  std::vector<std::vector<Exp>> points_;
  std::vector<State> state_;
  std::vector<std::vector<Integer>> direction_;
  std::vector<std::int64_t> sum_;
};

}  // namespace

NewtonPolytope newton_polytope(const MultiPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Newton polytope of the zero polynomial");
  return VertexOracle(p).finish();
}

std::optional<MixedVertexCertificate> mixed_vertex_certificate(const MultiPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "mixed vertices of the zero polynomial");
  if (!term_census(p).mixed()) return std::nullopt;
  VertexOracle oracle(p);
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < p.size(); ++i) (p.terms()[i].coeff > 0 ? pos : neg).push_back(i);
  // The rarer sign first: if none of its terms is a vertex, we are done.
  auto& first = pos.size() <= neg.size() ? pos : neg;
  auto& second = pos.size() <= neg.size() ? neg : pos;
  auto find_vertex = [&](const std::vector<std::size_t>& idx) -> std::optional<std::size_t> {
    for (std::size_t i : idx)
      if (oracle.known_vertex(i)) return i;
    for (std::size_t i : idx)
      if (oracle.is_vertex(i)) return i;
    return std::nullopt;
  };
  auto a = find_vertex(first);
  if (!a) return std::nullopt;
  auto b = find_vertex(second);
  if (!b) return std::nullopt;
  MixedVertexCertificate c;
  c.positive_term = &first == &pos ? *a : *b;
  c.negative_term = &first == &pos ? *b : *a;
  c.positive_direction = oracle.direction(c.positive_term);
  c.negative_direction = oracle.direction(c.negative_term);
  return c;
}

MultiPoly face_polynomial(const MultiPoly& p, std::span<const Rational> v) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "face of the zero polynomial");
  if (v.size() != p.arity()) throw Error(ErrorCode::ArityMismatch, "face direction length mismatch");
  std::vector<Rational> vals;
  vals.reserve(p.size());
  for (const Term& t : p.terms()) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (t.monomial[i]) s += v[i] * t.monomial[i];
    vals.push_back(s);
  }
  const Rational best = *std::max_element(vals.begin(), vals.end());
  std::vector<Term> kept;
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (vals[i] == best) kept.push_back(p.terms()[i]);
  return MultiPoly::from_terms(p.arity(), std::move(kept));
}

bool mixed_vertices(const MultiPoly& p, const NewtonPolytope& np) {
  bool pos = false, neg = false;
  for (std::size_t i = 0; i < np.points.size(); ++i) {
    if (!np.vertex[i]) continue;
    if (p.terms()[i].coeff > 0) pos = true;
    else neg = true;
  }
  return pos && neg;
}

bool mixed_vertices(const MultiPoly& p) { return mixed_vertex_certificate(p).has_value(); }

int sign_at(const MultiPoly& p, std::span<const Rational> point) { return sgn(evaluate(p, point)); }

namespace {

// Sign of p along X_i = (num_i / den) * 2^(s * w_i), computed in integers.
class CurveSigner {
 public:
  explicit CurveSigner(const MultiPoly& p) : p_(p), maxdeg_(p.degree()) {}

  int sign(const std::vector<Integer>& num, const Integer& den, const std::vector<std::int32_t>& w,
           unsigned s) {
    const std::size_t k = p_.arity();
    std::vector<std::vector<Integer>> pw(k);
    std::vector<std::int64_t> shift;
    shift.reserve(p_.size());
    std::int64_t lo = 0;
    bool first = true;
    for (const Term& t : p_.terms()) {
      std::int64_t d = w.empty() ? 0 : kernels::dot(t.monomial.exponents(), w) * s;
      shift.push_back(d);
      if (first || d < lo) lo = d;
      first = false;
    }
    Integer total = 0, term;
    std::vector<Integer> dcache{Integer(1)};
    for (std::size_t idx = 0; idx < p_.size(); ++idx) {
      const Term& t = p_.terms()[idx];
      term = t.coeff;
      for (std::size_t i = 0; i < k; ++i) {
        unsigned e = t.monomial[i];
        if (e == 0) continue;
        auto& c = pw[i];
        if (c.empty()) c.push_back(1);
        while (c.size() <= e) c.push_back(c.back() * num[i]);
        term *= c[e];
      }
      unsigned de = static_cast<unsigned>(maxdeg_) - t.monomial.degree();
      while (dcache.size() <= de) dcache.push_back(dcache.back() * den);
      term *= dcache[de];
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(shift[idx] - lo));
      total += term;
    }
    return sgn(total);
  }

 private:
  const MultiPoly& p_;
  int maxdeg_;
};

std::vector<Rational> curve_point(const std::vector<Integer>& num, const Integer& den,
                                  const std::vector<std::int32_t>& w, unsigned s) {
  std::vector<Rational> x(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    x[i] = Rational(num[i], den);
    x[i].canonicalize();
    long e = w.empty() ? 0 : static_cast<long>(w[i]) * s;
    if (e > 0) mpq_mul_2exp(x[i].get_mpq_t(), x[i].get_mpq_t(), e);
    if (e < 0) mpq_div_2exp(x[i].get_mpq_t(), x[i].get_mpq_t(), -e);
  }
  return x;
}

}  // namespace

std::optional<SignWitness> indefiniteness_witness(const MultiPoly& p, std::size_t budget,
                                                  std::uint64_t seed) {
  if (p.is_zero() || !term_census(p).mixed()) return std::nullopt;
  const std::size_t k = p.arity();
  CurveSigner signer(p);
  std::mt19937_64 rng(seed);
  std::size_t used = 0;
  std::optional<std::vector<Rational>> pos, neg;

  auto record = [&](int sg, const std::vector<Integer>& num, const Integer& den,
                    const std::vector<std::int32_t>& w, unsigned s) {
    if (sg > 0 && !pos) pos = curve_point(num, den, w, s);
    if (sg < 0 && !neg) neg = curve_point(num, den, w, s);
  };
  auto try_curve = [&](const std::vector<Integer>& num, const Integer& den,
                       const std::vector<std::int32_t>& w, unsigned s) {
    if (used >= budget) return 0;
    ++used;
    int sg = signer.sign(num, den, w, s);
    record(sg, num, den, w, s);
    return sg;
  };

  std::vector<Integer> ones(k, Integer(1));
  const Integer one = 1;
  try_curve(ones, one, {}, 0);

  // Pushing towards a vertex makes its term dominate.
  auto push = [&](const std::vector<Integer>& dir, int want) {
    std::vector<std::int32_t> w(k);
    for (std::size_t c = 0; c < k; ++c) {
      if (!dir[c].fits_sint_p() || abs(dir[c]) > 4096) return;
      w[c] = static_cast<std::int32_t>(dir[c].get_si());
    }
    std::int64_t wmax = 1;
    for (auto x : w) wmax = std::max<std::int64_t>(wmax, std::abs(x));
    const std::int64_t reach = wmax * std::max(p.degree(), 1);
    for (unsigned s = 1; s <= 256 && reach * s <= 65536 && used < budget; s *= 2)
      if (try_curve(ones, one, w, s) == want) break;
  };
  // Cheap random points first; the vertex certificate needs LPs.
  auto draw = [&](std::uint64_t lim) { return static_cast<long>(rng() % lim) + 1; };
  auto random_round = [&](std::size_t count) {
    for (std::size_t r = 0; r < count && used < budget && !(pos && neg); ++r) {
      std::vector<Integer> num(k);
      const unsigned scale = static_cast<unsigned>(rng() % 12);
      for (auto& x : num) x = draw(std::uint64_t{1} << (rng() % (scale + 1)));
      Integer den = draw(16);
      if (rng() % 3 == 0) {
        // Random face direction pushed out along the curve.
        std::vector<std::int32_t> w(k);
        for (auto& x : w) x = static_cast<std::int32_t>(rng() % 7) - 3;
        unsigned s = 1u << (rng() % 7);
        try_curve(num, den, w, s);
      } else {
        try_curve(num, den, {}, 0);
      }
    }
  };
  random_round(std::min<std::size_t>(budget / 8, 256));
  if (!(pos && neg) && used < budget && p.size() <= 4096) {
    if (auto cert = mixed_vertex_certificate(p)) {
      if (!pos) push(cert->positive_direction, 1);
      if (!neg) push(cert->negative_direction, -1);
    }
  }
  random_round(budget);
  if (!(pos && neg)) return std::nullopt;
  SignWitness out;
  out.positive_point = *pos;
  out.negative_point = *neg;
  out.positive_value = evaluate(p, out.positive_point);
  out.negative_value = evaluate(p, out.negative_point);
  if (!(out.positive_value > 0 && out.negative_value < 0)) {
    throw Error(ErrorCode::Inconsistency, "fast sign evaluation disagrees with exact evaluation");
  }
  return out;
}

}  // namespace sns2
