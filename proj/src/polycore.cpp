#include "sns2/polycore.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace sns2 {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ArityMismatch: return "arity_mismatch";
    case ErrorCode::IndexOutOfRange: return "index_out_of_range";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::ZeroPolynomial: return "zero_polynomial";
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::UnsupportedSize: return "unsupported_size";
    case ErrorCode::ExponentOverflow: return "exponent_overflow";
    case ErrorCode::Inconsistency: return "inconsistency";
  }
  return "unknown";
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, unsigned power) {
  if (index >= arity) {
    throw Error(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(index) +
                                                " outside arity " + std::to_string(arity));
  }
  if (power > 0xFFu) throw Error(ErrorCode::ExponentOverflow, "exponent above 255");
  Monomial m(arity);
  m.exps_[index] = static_cast<Exp>(power);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (arity() != other.arity()) {
    throw Error(ErrorCode::ArityMismatch, "monomial arity mismatch");
  }
  Monomial out(arity());
  if (!kernels::add(exps_, other.exps_, out.exps_)) {
    throw Error(ErrorCode::ExponentOverflow, "exponent above 255");
  }
  return out;
}

std::size_t Monomial::hash() const {
  // FNV-1a
  std::uint64_t h = 1469598103934665603ull;
  for (Exp e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

int compare_grlex(const Monomial& a, const Monomial& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  return kernels::compare_lex(a.exponents(), b.exponents());
}

void require_same_arity(const MultiPoly& p, const MultiPoly& q) {
  if (p.arity() != q.arity()) {
    throw Error(ErrorCode::ArityMismatch, "polynomial arity mismatch: " +
                                              std::to_string(p.arity()) + " vs " +
                                              std::to_string(q.arity()));
  }
}

MultiPoly MultiPoly::constant(std::size_t arity, const Integer& c) {
  MultiPoly p(arity);
  if (c != 0) p.terms_.push_back({Monomial(arity), c});
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index, const Integer& c) {
  MultiPoly p(arity);
  if (c != 0) p.terms_.push_back({Monomial::variable(arity, index), c});
  return p;
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Integer& c) {
  MultiPoly p(m.arity());
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t arity, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.monomial.arity() != arity) {
      throw Error(ErrorCode::ArityMismatch, "term arity does not match polynomial arity");
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_grlex(a.monomial, b.monomial) < 0;
  });
  MultiPoly p(arity);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  // Ascending graded order puts the highest degree last.
  return static_cast<int>(terms_.back().monomial.degree());
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

Integer MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
    return compare_grlex(t.monomial, x) < 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void MultiPoly::merge_in(const MultiPoly& other, int sign) {
  require_same_arity(*this, other);
  if (other.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = other.terms_.begin(), be = other.terms_.end();
  while (a != ae || b != be) {
    int c = a == ae ? 1 : b == be ? -1 : compare_grlex(a->monomial, b->monomial);
    if (c < 0) {
      out.push_back(std::move(*a++));
    } else if (c > 0) {
      out.push_back({b->monomial, sign > 0 ? b->coeff : Integer(-b->coeff)});
      ++b;
    } else {
      Integer s = sign > 0 ? Integer(a->coeff + b->coeff) : Integer(a->coeff - b->coeff);
      if (s != 0) out.push_back({std::move(a->monomial), std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  merge_in(other, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  merge_in(other, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (Term& t : terms_) t.coeff *= c;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_arity(a, b);
  MultiPoly out(a.arity_);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.size() == 1 || b.size() == 1) {
    // Multiplying by a single term preserves the order.
    const MultiPoly& one = a.size() == 1 ? a : b;
    const MultiPoly& many = a.size() == 1 ? b : a;
    const Term& t = one.terms_[0];
    out.terms_.reserve(many.size());
    for (const Term& s : many.terms_) out.terms_.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    return out;
  }
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) {
      Monomial m = s.monomial * t.monomial;
      auto [it, inserted] = acc.try_emplace(std::move(m));
      mpz_addmul(it->second.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.push_back({m, std::move(c)});
  }
  std::sort(out.terms_.begin(), out.terms_.end(), [](const Term& x, const Term& y) {
    return compare_grlex(x.monomial, y.monomial) < 0;
  });
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(arity_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

TermCensus term_census(const MultiPoly& p) {
  TermCensus c;
  for (const Term& t : p.terms()) {
    if (t.coeff > 0) {
      ++c.positive;
    } else {
      ++c.negative;
    }
  }
  return c;
}

Rational evaluate(const MultiPoly& p, std::span<const Rational> point) {
  if (point.size() != p.arity()) {
    throw Error(ErrorCode::ArityMismatch, "evaluation point has length " +
                                              std::to_string(point.size()) + ", expected " +
                                              std::to_string(p.arity()));
  }
  // Powers are cached per variable up to the largest exponent used.
  std::vector<std::vector<Rational>> powers(point.size());
  Rational total = 0;
  for (const Term& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(1);
      while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
      v *= cache[e];
    }
    total += v;
  }
  total.canonicalize();
  return total;
}

MultiPoly substitute_zero_and_resign(const MultiPoly& p, std::span<const std::size_t> zero_vars,
                                     std::span<const std::size_t> flip_vars) {
  for (std::size_t v : zero_vars) {
    if (v >= p.arity()) throw Error(ErrorCode::IndexOutOfRange, "zero-set index out of range");
  }
  for (std::size_t v : flip_vars) {
    if (v >= p.arity()) throw Error(ErrorCode::IndexOutOfRange, "flip-set index out of range");
  }
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    bool killed = std::any_of(zero_vars.begin(), zero_vars.end(),
                              [&](std::size_t v) { return t.monomial[v] != 0; });
    if (killed) continue;
    unsigned flips = 0;
    for (std::size_t v : flip_vars) flips += t.monomial[v];
    out.push_back({t.monomial, flips % 2 ? Integer(-t.coeff) : t.coeff});
  }
  // Order is preserved; no two surviving terms share a monomial.
  return MultiPoly::from_terms(p.arity(), std::move(out));
}

MultiPoly compose(const MultiPoly& p, std::span<const MultiPoly> values) {
  if (values.size() != p.arity()) {
    throw Error(ErrorCode::ArityMismatch, "compose: expected one value per variable");
  }
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "compose: no values");
  const std::size_t arity = values[0].arity();
  for (const MultiPoly& v : values) {
    if (v.arity() != arity) throw Error(ErrorCode::ArityMismatch, "compose: mixed value arities");
  }
  std::vector<std::vector<MultiPoly>> powers(values.size());
  MultiPoly total(arity);
  for (const Term& t : p.terms()) {
    MultiPoly term = MultiPoly::constant(arity, t.coeff);
    for (std::size_t i = 0; i < values.size(); ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(MultiPoly::constant(arity, 1));
      while (cache.size() <= e) cache.push_back(cache.back() * values[i]);
      term = term * cache[e];
    }
    total += term;
  }
  return total;
}

MultiPoly embed(const MultiPoly& p, std::size_t new_arity, std::size_t offset) {
  if (offset + p.arity() > new_arity) {
    throw Error(ErrorCode::ArityMismatch, "embed: target arity too small");
  }
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& t : p.terms()) {
    std::vector<Exp> e(new_arity, 0);
    for (std::size_t i = 0; i < p.arity(); ++i) e[offset + i] = static_cast<Exp>(t.monomial[i]);
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return MultiPoly::from_terms(new_arity, std::move(out));
}

PolyMatrix::PolyMatrix(std::size_t n, std::size_t arity)
    : n_(n), arity_(arity), entries_(n * n, MultiPoly(arity)) {}

PolyMatrix PolyMatrix::from_integers(const std::vector<std::vector<long>>& rows) {
  const std::size_t n = rows.size();
  PolyMatrix m(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorCode::InvalidArgument, "matrix is not square");
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, MultiPoly::constant(1, rows[i][j]));
  }
  return m;
}

void PolyMatrix::set(std::size_t i, std::size_t j, MultiPoly p) {
  if (i >= n_ || j >= n_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  if (p.arity() != arity_) throw Error(ErrorCode::ArityMismatch, "matrix entry arity mismatch");
  entries_[i * n_ + j] = std::move(p);
}

bool PolyMatrix::is_constant() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const MultiPoly& p) { return p.is_constant(); });
}

PolyMatrix PolyMatrix::negated() const {
  PolyMatrix m = *this;
  for (MultiPoly& p : m.entries_) p = -p;
  return m;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix m(n_, arity_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m.entries_[j * n_ + i] = entries_[i * n_ + j];
  return m;
}

PolyMatrix PolyMatrix::principal(std::span<const std::size_t> idx) const {
  PolyMatrix m(idx.size(), arity_);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) m.entries_[a * idx.size() + b] = (*this)(idx[a], idx[b]);
  return m;
}

}  // namespace sns2
