#include "sns2/signpat.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <sstream>

namespace sns2 {

SignPattern SignPattern::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorCode::Parse, "empty sign pattern");
  SignPattern p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::Parse, "row " + std::to_string(i + 1) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) p.set(i, j, rows[i][j]);
  }
  return p;
}

void SignPattern::set(std::size_t i, std::size_t j, int s) {
  if (i >= n_ || j >= n_) throw Error(ErrorCode::IndexOutOfRange, "pattern index out of range");
  if (s < -1 || s > 1) throw Error(ErrorCode::InvalidArgument, "pattern entries must be -1, 0 or 1");
  s_[i * n_ + j] = static_cast<std::int8_t>(s);
}

std::size_t SignPattern::nonzeros() const {
  return static_cast<std::size_t>(std::count_if(s_.begin(), s_.end(), [](int v) { return v != 0; }));
}

long SignPattern::variable_of(std::size_t i, std::size_t j) const {
  if (s_[i * n_ + j] == 0) return -1;
  long r = 0;
  for (std::size_t k = 0; k < i * n_ + j; ++k) r += s_[k] != 0;
  return r;
}

SignPattern parse_pattern(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      if (tok == "+" || tok == "1" || tok == "+1") row.push_back(1);
      else if (tok == "-" || tok == "-1") row.push_back(-1);
      else if (tok == "0") row.push_back(0);
      else
        throw Error(ErrorCode::Parse, "bad token '" + tok + "' on line " + std::to_string(lineno));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return SignPattern::from_rows(rows);
}

std::string to_text(const SignPattern& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) out += ' ';
      out += p(i, j) > 0 ? '+' : p(i, j) < 0 ? '-' : '0';
    }
    out += '\n';
  }
  return out;
}

SignPattern pattern_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("signs") || !j["signs"].is_array()) {
    throw Error(ErrorCode::Parse, "pattern JSON needs a \"signs\" array");
  }
  std::vector<std::vector<int>> rows;
  for (const Json& r : j["signs"]) {
    if (!r.is_array()) throw Error(ErrorCode::Parse, "pattern rows must be arrays");
    std::vector<int> row;
    for (const Json& v : r) {
      if (!v.is_number_integer() || v.get<long>() < -1 || v.get<long>() > 1) {
        throw Error(ErrorCode::Parse, "pattern entries must be -1, 0 or 1");
      }
      row.push_back(v.get<int>());
    }
    rows.push_back(std::move(row));
  }
  SignPattern p = SignPattern::from_rows(rows);
  if (j.contains("n") && (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != p.size())) {
    throw Error(ErrorCode::Parse, "\"n\" does not match the number of rows");
  }
  return p;
}

Json to_json(const SignPattern& p) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < p.size(); ++j) r.push_back(p(i, j));
    rows.push_back(r);
  }
  Json out;
  out["n"] = p.size();
  out["signs"] = rows;
  return out;
}

PolyMatrix symbolic_matrix(const SignPattern& p) { return symbolic_matrix_in(p, p); }

PolyMatrix symbolic_matrix_in(const SignPattern& sub, const SignPattern& ambient) {
  if (sub.size() != ambient.size()) throw Error(ErrorCode::InvalidArgument, "pattern sizes differ");
  const std::size_t n = sub.size();
  const std::size_t arity = std::max<std::size_t>(1, ambient.nonzeros());
  PolyMatrix m(n, arity);
  long r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (ambient(i, j) == 0) {
        if (sub(i, j) != 0) throw Error(ErrorCode::InvalidArgument, "entry outside the ambient pattern");
        continue;
      }
      if (sub(i, j) != 0) m.set(i, j, MultiPoly::variable(arity, r, sub(i, j)));
      ++r;
    }
  }
  return m;
}

SignedDigraph digraph(const SignPattern& p) {
  SignedDigraph g;
  g.n = p.size();
  g.adj.assign(g.n * g.n, 0);
  for (std::size_t from = 0; from < g.n; ++from) {
    for (std::size_t to = 0; to < g.n; ++to) {
      int s = p(to, from);
      if (s == 0) continue;
      g.arcs.push_back({from, to, s});
      g.adj[from * g.n + to] = static_cast<std::int8_t>(s);
    }
  }
  return g;
}

std::vector<Entry> Cycle::entries() const {
  std::vector<Entry> e;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    std::size_t from = vertices[k], to = vertices[(k + 1) % vertices.size()];
    e.emplace_back(to, from);
  }
  return e;
}

std::vector<Cycle> enumerate_cycles(const SignedDigraph& g) {
  if (g.n > 32) throw Error(ErrorCode::UnsupportedSize, "cycle enumeration limited to 32 vertices");
  std::vector<Cycle> out;
  std::vector<std::size_t> path;
  // Each cycle is found once, anchored at its smallest vertex.
  auto dfs = [&](auto&& self, std::size_t start, std::size_t v, std::uint32_t seen, int positives) -> void {
    for (std::size_t w = start; w < g.n; ++w) {
      int s = g.sign(v, w);
      if (s == 0) continue;
      int pos = positives + (s > 0);
      if (w == start) {
        Cycle c;
        c.vertices = path;
        c.parity = pos % 2 ? -1 : 1;
        c.mask = seen;
        out.push_back(std::move(c));
      } else if (!(seen >> w & 1)) {
        path.push_back(w);
        self(self, start, w, seen | (1u << w), pos);
        path.pop_back();
      }
    }
  };
  for (std::size_t s = 0; s < g.n; ++s) {
    path.assign(1, s);
    dfs(dfs, s, s, 1u << s, 0);
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  return out;
}

std::vector<Hooping> hoopings(std::size_t n, const std::vector<Cycle>& cycles) {
  (void)n;
  std::vector<Hooping> out;
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t from, std::uint32_t mask, int sign) -> void {
    for (std::size_t c = from; c < cycles.size(); ++c) {
      if (cycles[c].mask & mask) continue;
      chosen.push_back(c);
      // par(E) * sgn(sigma) accumulate per cycle; (-1)^i is applied per vertex.
      int cs = cycles[c].parity * ((cycles[c].length() - 1) % 2 ? -1 : 1) *
               (cycles[c].length() % 2 ? -1 : 1);
      Hooping h;
      h.cycles = chosen;
      h.mask = mask | cycles[c].mask;
      h.sign = sign * cs;
      out.push_back(h);
      self(self, c + 1, h.mask, h.sign);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0, 1);
  return out;
}

MultiPoly minor_sum_via_hoopings(const SignPattern& p, std::size_t i) {
  if (i < 1 || i > p.size()) throw Error(ErrorCode::IndexOutOfRange, "minor-sum index out of range");
  const std::size_t arity = std::max<std::size_t>(1, p.nonzeros());
  std::vector<Cycle> cycles = enumerate_cycles(digraph(p));
  std::vector<Term> terms;
  for (const Hooping& h : hoopings(p.size(), cycles)) {
    if (static_cast<std::size_t>(std::popcount(h.mask)) != i) continue;
    std::vector<Exp> e(arity, 0);
    for (std::size_t c : h.cycles)
      for (auto [r, col] : cycles[c].entries()) e[p.variable_of(r, col)] += 1;
    terms.push_back({Monomial(std::move(e)), h.sign});
  }
  return MultiPoly::from_terms(arity, std::move(terms));
}

namespace {

std::vector<std::uint32_t> reachability(const SignedDigraph& g) {
  std::vector<std::uint32_t> reach(g.n, 0);
  for (std::size_t v = 0; v < g.n; ++v) {
    std::uint32_t r = 1u << v, frontier = r;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) {
        std::size_t u = std::countr_zero(f);
        for (std::size_t w = 0; w < g.n; ++w)
          if (g.sign(u, w) != 0) next |= 1u << w;
      }
      frontier = next & ~r;
      r |= next;
    }
    reach[v] = r;
  }
  return reach;
}

}  // namespace

SignPattern weakly_reversible_core(const SignPattern& p) {
  SignedDigraph g = digraph(p);
  auto reach = reachability(g);
  SignPattern out = p;
  for (const Arc& a : g.arcs) {
    bool on_cycle = a.from == a.to || (reach[a.to] >> a.from & 1);
    if (!on_cycle) out.set(a.to, a.from, 0);
  }
  return out;
}

bool is_bipartite_cyclewise(const SignedDigraph& g) {
  for (const Cycle& c : enumerate_cycles(g))
    if (c.length() % 2) return false;
  return true;
}

bool is_bipartite_cyclewise(const SignPattern& p) { return is_bipartite_cyclewise(digraph(p)); }

SignPattern negate(const SignPattern& p) {
  SignPattern out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) out.set(i, j, -p(i, j));
  return out;
}

SignPattern transpose(const SignPattern& p) {
  SignPattern out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) out.set(j, i, p(i, j));
  return out;
}

SignPattern resign(const SignPattern& p, const std::vector<Entry>& entries) {
  SignPattern out = p;
  for (auto [i, j] : entries) {
    if (i >= p.size() || j >= p.size()) throw Error(ErrorCode::IndexOutOfRange, "resign index out of range");
    out.set(i, j, -out(i, j));
  }
  return out;
}

SignPattern subpattern(const SignPattern& p, const std::vector<Entry>& zero_entries) {
  SignPattern out = p;
  for (auto [i, j] : zero_entries) {
    if (i >= p.size() || j >= p.size()) throw Error(ErrorCode::IndexOutOfRange, "subpattern index out of range");
    out.set(i, j, 0);
  }
  return out;
}

bool is_subpattern(const SignPattern& small, const SignPattern& big) {
  if (small.size() != big.size()) return false;
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = 0; j < small.size(); ++j)
      if (small(i, j) != 0 && small(i, j) != big(i, j)) return false;
  return true;
}

namespace {

// Per-vertex (loop sign, signed in/out degree counts); invariant under relabelling.
std::vector<std::array<int, 5>> vertex_profile(const SignPattern& p) {
  std::vector<std::array<int, 5>> prof(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) {
    std::array<int, 5> a{p(v, v), 0, 0, 0, 0};
    for (std::size_t u = 0; u < p.size(); ++u) {
      if (u == v) continue;
      if (p(v, u) > 0) ++a[1];
      if (p(v, u) < 0) ++a[2];
      if (p(u, v) > 0) ++a[3];
      if (p(u, v) < 0) ++a[4];
    }
    prof[v] = a;
  }
  return prof;
}

bool maps_onto(const SignPattern& p, const SignPattern& q) {
  const std::size_t n = p.size();
  auto pp = vertex_profile(p), pq = vertex_profile(q);
  auto sp = pp, sq = pq;
  std::sort(sp.begin(), sp.end());
  std::sort(sq.begin(), sq.end());
  if (sp != sq) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) ok = pq[v] == pp[perm[v]];
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = q(i, j) == p(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

bool are_isomorphic(const SignPattern& p, const SignPattern& q) {
  if (p.size() > kMaxIsomorphismSize || q.size() > kMaxIsomorphismSize) {
    throw Error(ErrorCode::UnsupportedSize, "isomorphism test limited to 8 vertices");
  }
  if (p.size() != q.size() || p.nonzeros() != q.nonzeros()) return false;
  return maps_onto(p, q) || maps_onto(transpose(p), q);
}

}  // namespace sns2
