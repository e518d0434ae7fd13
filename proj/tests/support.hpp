#pragma once

// Generators and brute-force oracles shared by the test binaries.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <numeric>
#include <random>
#include <vector>

#include "sns2/polycore.hpp"
#include "sns2/polyio.hpp"
#include "sns2/rules.hpp"
#include "sns2/signpat.hpp"

namespace testsupport {

using sns2::Integer;
using sns2::Monomial;
using sns2::MultiPoly;
using sns2::PolyMatrix;
using sns2::Rational;
using sns2::Term;

inline MultiPoly random_poly(std::mt19937_64& rng, std::size_t arity, int max_terms, int max_exp,
                             int max_coeff) {
  std::uniform_int_distribution<int> nterms(0, max_terms), e(0, max_exp), c(-max_coeff, max_coeff);
  std::vector<Term> terms;
  int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    std::vector<sns2::Exp> ex(arity);
    for (auto& x : ex) x = static_cast<sns2::Exp>(e(rng));
    terms.push_back({Monomial(std::move(ex)), c(rng)});
  }
  return MultiPoly::from_terms(arity, std::move(terms));
}

inline PolyMatrix random_poly_matrix(std::mt19937_64& rng, std::size_t n, std::size_t arity,
                                     double density) {
  std::bernoulli_distribution keep(density);
  PolyMatrix m(n, arity);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (keep(rng)) m.set(i, j, random_poly(rng, arity, 2, 1, 3));
  return m;
}

inline PolyMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::vector<long>> rows(n, std::vector<long>(n));
  for (auto& r : rows)
    for (auto& x : r) x = d(rng);
  return PolyMatrix::from_integers(rows);
}

// Leibniz expansion; the independent determinant oracle.
inline MultiPoly permutation_determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly total(m.arity());
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    MultiPoly t = MultiPoly::constant(m.arity(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !t.is_zero(); ++i) t = t * m(i, perm[i]);
    total += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<Rational> random_positive_point(std::mt19937_64& rng, std::size_t k, int hi = 9) {
  std::uniform_int_distribution<int> d(1, hi);
  std::vector<Rational> p(k);
  for (auto& x : p) {
    x = Rational(d(rng), d(rng));
    x.canonicalize();
  }
  return p;
}

inline sns2::SignPattern random_pattern(std::mt19937_64& rng, std::size_t n, int zero_weight = 1) {
  sns2::SignPattern p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int r = static_cast<int>(rng() % (2 + zero_weight));
      p.set(i, j, r == 0 ? 1 : r == 1 ? -1 : 0);
    }
  return p;
}

// Base-3 digits of id, row-major, mapped to -1, 0, +1.
inline sns2::SignPattern pattern_from_index(std::size_t n, std::uint64_t id) {
  sns2::SignPattern p(n);
  for (std::size_t k = 0; k < n * n; ++k, id /= 3) p.set(k / n, k % n, static_cast<int>(id % 3) - 1);
  return p;
}

inline std::string read_data(const std::string& rel) {
  std::ifstream in(std::string(SNS2_DATA_DIR) + "/" + rel);
  if (!in) throw std::runtime_error("missing data file " + rel);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline sns2::SignPattern load_pattern(const std::string& name) {
  return sns2::parse_pattern(read_data("patterns/" + name + ".pat"));
}

inline sns2::PolyMatrix load_matrix(const std::string& name) {
  return sns2::matrix_from_json(sns2::Json::parse(read_data("matrices/" + name + ".json")));
}

// Samples property-P 4-patterns that contain at least one 2-cycle.
inline std::vector<sns2::SignPattern> property_p_samples(std::size_t want, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<sns2::SignPattern> out;
  for (int trial = 0; trial < 200000 && out.size() < want; ++trial) {
    sns2::SignPattern p(4);
    for (std::size_t i = 0; i < 4; ++i) {
      if (rng() % 3) p.set(i, i, 1);  // loops must be odd: positive
      for (std::size_t j = i + 1; j < 4; ++j) {
        switch (rng() % 4) {
          case 0: break;
          case 1:  // odd 2-cycle
            p.set(i, j, 1);
            p.set(j, i, -1);
            break;
          case 2: p.set(i, j, rng() % 2 ? 1 : -1); break;
          default: p.set(j, i, rng() % 2 ? 1 : -1); break;
        }
      }
    }
    if (rng() % 2) p = sns2::resign(p, {{static_cast<std::size_t>(rng() % 4), static_cast<std::size_t>(rng() % 4)}});
    bool two = false;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) two = two || (p(i, j) && p(j, i));
    if (two && sns2::has_property_p(p)) out.push_back(p);
  }
  return out;
}

}  // namespace testsupport
