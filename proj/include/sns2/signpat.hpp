#pragma once

// Sign patterns and their signed digraphs.
//
// Nonzero entry M_ij is the arc j -> i. Variables X_r are numbered row-major
// over the nonzero entries, starting at X1.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sns2/polycore.hpp"
#include "sns2/polyio.hpp"

namespace sns2 {

class SignPattern {
 public:
  SignPattern() = default;
  explicit SignPattern(std::size_t n) : n_(n), s_(n * n, 0) {}
  static SignPattern from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t size() const { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return s_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, int s);
  std::size_t nonzeros() const;
  // 0-based variable index of entry (i, j), or -1 for a zero entry.
  long variable_of(std::size_t i, std::size_t j) const;

  bool operator==(const SignPattern&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int8_t> s_;
};

using Entry = std::pair<std::size_t, std::size_t>;

SignPattern parse_pattern(std::string_view text);
std::string to_text(const SignPattern& p);
SignPattern pattern_from_json(const Json& j);
Json to_json(const SignPattern& p);

// Arity is max(1, nonzeros).
PolyMatrix symbolic_matrix(const SignPattern& p);
// Numbers the entries of `sub` by their positions in `ambient`; sub must lie inside ambient.
PolyMatrix symbolic_matrix_in(const SignPattern& sub, const SignPattern& ambient);

struct Arc {
  std::size_t from, to;
  int sign;
};

struct SignedDigraph {
  std::size_t n = 0;
  std::vector<Arc> arcs;  // sorted by (from, to)
  std::vector<std::int8_t> adj;  // adj[from * n + to] = sign or 0

  int sign(std::size_t from, std::size_t to) const { return adj[from * n + to]; }
};

SignedDigraph digraph(const SignPattern& p);

struct Cycle {
  std::vector<std::size_t> vertices;  // smallest first; arcs run v[k] -> v[k+1]
  int parity = 1;                     // -1 when odd: an odd number of positive arcs
  std::uint32_t mask = 0;

  std::size_t length() const { return vertices.size(); }
  bool odd() const { return parity < 0; }
  // Arcs as pattern entries (row, column) = (to, from).
  std::vector<Entry> entries() const;
};

std::vector<Cycle> enumerate_cycles(const SignedDigraph& g);

struct Hooping {
  std::vector<std::size_t> cycles;  // indices into the cycle list
  std::uint32_t mask = 0;
  int sign = 1;  // sign of the contributed term in J_|mask|
};

// Every hooping (at least one cycle) over the given cycle list.
std::vector<Hooping> hoopings(std::size_t n, const std::vector<Cycle>& cycles);

MultiPoly minor_sum_via_hoopings(const SignPattern& p, std::size_t i);

SignPattern weakly_reversible_core(const SignPattern& p);

bool is_bipartite_cyclewise(const SignedDigraph& g);
bool is_bipartite_cyclewise(const SignPattern& p);

SignPattern negate(const SignPattern& p);
SignPattern transpose(const SignPattern& p);
SignPattern resign(const SignPattern& p, const std::vector<Entry>& entries);
SignPattern subpattern(const SignPattern& p, const std::vector<Entry>& zero_entries);
// small is obtained from big by zeroing some entries.
bool is_subpattern(const SignPattern& small, const SignPattern& big);

inline constexpr std::size_t kMaxIsomorphismSize = 8;
bool are_isomorphic(const SignPattern& p, const SignPattern& q);

}  // namespace sns2
