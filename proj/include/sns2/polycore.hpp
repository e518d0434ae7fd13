#pragma once

// Exact sparse multivariate polynomials over the integers.
//
// Terms are kept in graded-lexicographic order (ascending: lower total degree
// first, ties broken by comparing exponents from X1 onwards). No zero
// coefficient is ever stored, so structural equality is mathematical equality.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sns2/error.hpp"
#include "sns2/kernels.hpp"

namespace sns2 {

using Integer = mpz_class;
using Rational = mpq_class;
using kernels::Exp;

class Monomial {
 public:
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exp> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t arity, std::size_t index, unsigned power = 1);

  std::size_t arity() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exp> exponents() const { return exps_; }
  std::uint32_t degree() const { return kernels::degree(exps_); }
  bool is_one() const { return degree() == 0; }

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

  std::size_t hash() const;

 private:
  std::vector<Exp> exps_;
};

// Negative if a precedes b in graded-lex order.
int compare_grlex(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_grlex(a, b) < 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Integer coeff;

  bool operator==(const Term& other) const = default;
};

class MultiPoly {
 public:
  explicit MultiPoly(std::size_t arity = 1) : arity_(arity) {}

  static MultiPoly constant(std::size_t arity, const Integer& c);
  static MultiPoly variable(std::size_t arity, std::size_t index, const Integer& c = 1);
  static MultiPoly monomial(const Monomial& m, const Integer& c = 1);
  // Merges like terms, drops zeros and sorts.
  static MultiPoly from_terms(std::size_t arity, std::vector<Term> terms);

  std::size_t arity() const { return arity_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Integer coefficient(const Monomial& m) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Integer& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Integer& c) { return a *= c; }
  friend MultiPoly operator*(const Integer& c, MultiPoly a) { return a *= c; }

  bool operator==(const MultiPoly& other) const = default;

  MultiPoly pow(unsigned e) const;

 private:
  void merge_in(const MultiPoly& other, int sign);

  std::size_t arity_;
  std::vector<Term> terms_;
};

void require_same_arity(const MultiPoly& p, const MultiPoly& q);

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);

struct TermCensus {
  std::size_t positive = 0;
  std::size_t negative = 0;

  bool mixed() const { return positive > 0 && negative > 0; }
  bool operator==(const TermCensus&) const = default;
};

TermCensus term_census(const MultiPoly& p);

Rational evaluate(const MultiPoly& p, std::span<const Rational> point);

// Variable indices are 0-based. A variable listed in both sets is zeroed.
MultiPoly substitute_zero_and_resign(const MultiPoly& p, std::span<const std::size_t> zero_vars,
                                     std::span<const std::size_t> flip_vars);

// p(values[0], ..., values[k-1]); all values share one arity, which becomes the result's.
MultiPoly compose(const MultiPoly& p, std::span<const MultiPoly> values);

// Re-embeds p into a larger variable set: variable i maps to variable offset + i.
MultiPoly embed(const MultiPoly& p, std::size_t new_arity, std::size_t offset = 0);

class PolyMatrix {
 public:
  PolyMatrix(std::size_t n, std::size_t arity);

  static PolyMatrix from_integers(const std::vector<std::vector<long>>& rows);

  std::size_t size() const { return n_; }
  std::size_t arity() const { return arity_; }

  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, MultiPoly p);

  bool is_constant() const;
  PolyMatrix negated() const;
  PolyMatrix transposed() const;
  // Principal submatrix on the rows/columns listed (ascending).
  PolyMatrix principal(std::span<const std::size_t> idx) const;

  bool operator==(const PolyMatrix&) const = default;

 private:
  std::size_t n_;
  std::size_t arity_;
  std::vector<MultiPoly> entries_;
};

// Memoized Laplace expansion over sub-blocks of one matrix (side <= 64). Minors
// are keyed on (row-set, column-set) bitmasks so principal minors computed
// through the same expander share their sub-minors.
class LaplaceExpander {
 public:
  explicit LaplaceExpander(const PolyMatrix& m);
  ~LaplaceExpander();
  LaplaceExpander(const LaplaceExpander&) = delete;
  LaplaceExpander& operator=(const LaplaceExpander&) = delete;

  MultiPoly minor(std::uint64_t rows, std::uint64_t cols);
  std::size_t cache_size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

MultiPoly determinant(const PolyMatrix& m);

// Fraction-free elimination over integer matrices.
Integer integer_determinant(std::vector<std::vector<Integer>> a);

}  // namespace sns2
