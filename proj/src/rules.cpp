#include "sns2/rules.hpp"

#include <algorithm>
#include <array>

namespace sns2 {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Zero: return "Zero";
    case Verdict::Positive: return "Positive";
    case Verdict::Negative: return "Negative";
    case Verdict::NonnegativeNonzero: return "NonnegativeNonzero";
    case Verdict::NonpositiveNonzero: return "NonpositiveNonzero";
    case Verdict::Indefinite: return "Indefinite";
    case Verdict::Unresolved: return "Unresolved";
  }
  return "?";
}

const char* to_string(Sign3 s) {
  switch (s) {
    case Sign3::Positive: return "Positive";
    case Sign3::Negative: return "Negative";
    case Sign3::Zero: return "Zero";
    case Sign3::Indefinite: return "Indefinite";
    case Sign3::Unknown: return "Unknown";
  }
  return "?";
}

const Evidence* Classification2::find(std::string_view rule) const {
  for (const auto& e : evidence)
    if (e.rule == rule) return &e;
  return nullptr;
}

namespace {

// Sign read off the terms only; mixed terms give Unknown.
Sign3 term_sign(const MultiPoly& e) {
  if (e.is_zero()) return Sign3::Zero;
  TermCensus c = term_census(e);
  if (c.negative == 0) return Sign3::Positive;
  if (c.positive == 0) return Sign3::Negative;
  return Sign3::Unknown;
}

int strict_sign(Sign3 s) { return s == Sign3::Positive ? 1 : s == Sign3::Negative ? -1 : 0; }

std::string jtext(const MultiPoly& p) { return to_text(p, 'J'); }

struct CycleCensus {
  std::vector<Cycle> loops, twos, threes, fours, all;
};

CycleCensus census_of(const SignPattern& p) {
  CycleCensus c;
  c.all = enumerate_cycles(digraph(p));
  for (const auto& cy : c.all) {
    switch (cy.length()) {
      case 1: c.loops.push_back(cy); break;
      case 2: c.twos.push_back(cy); break;
      case 3: c.threes.push_back(cy); break;
      case 4: c.fours.push_back(cy); break;
      default: break;
    }
  }
  return c;
}

bool contains(const Cycle& c, std::size_t v) { return (c.mask >> v) & 1u; }

Json witness_json(const SignWitness& w) {
  Json j;
  auto pt = [](const std::vector<Rational>& x) {
    Json a = Json::array();
    for (const auto& v : x) a.push_back(rational_to_json(v));
    return a;
  };
  j["positive_point"] = pt(w.positive_point);
  j["positive_value"] = rational_to_json(w.positive_value);
  j["negative_point"] = pt(w.negative_point);
  j["negative_value"] = rational_to_json(w.negative_value);
  return j;
}

}  // namespace

Sign3 sign_of_expression(const MultiPoly& e, const ClassifyOptions& opts) {
  Sign3 s = term_sign(e);
  if (s != Sign3::Unknown) return s;
  if (mixed_vertices(e)) return Sign3::Indefinite;
  if (opts.witness_budget > 0 && indefiniteness_witness(e, opts.witness_budget, opts.seed))
    return Sign3::Indefinite;
  return Sign3::Unknown;
}

Det2Data compute_det2(const PolyMatrix& m) {
  Det2Data d;
  d.matrix = m;
  d.j = minor_sums(m);
  d.det2 = qn_from_minor_sums(d.j);
  return d;
}

Verdict direct_term_verdict(const MultiPoly& det2) {
  switch (term_sign(det2)) {
    case Sign3::Zero: return Verdict::Zero;
    case Sign3::Positive: return Verdict::Positive;
    case Sign3::Negative: return Verdict::Negative;
    default: return Verdict::Indefinite;
  }
}

std::optional<Evidence> rule_bipartite(const SignPattern& p) {
  if (!is_bipartite_cyclewise(p)) return std::nullopt;
  Json data;
  data["claim"] = "J_i = 0 for odd i, det2 = 0";
  return Evidence{"bipartite_zero", "bipartite digraph proposition", data};
}

std::vector<ObstructionFinding> rule_cycle_obstructions(const SignPattern& p) {
  const std::size_t n = p.size();
  std::vector<ObstructionFinding> out;
  CycleCensus cc = census_of(p);
  auto has_length = [&](std::size_t len) {
    return std::any_of(cc.all.begin(), cc.all.end(), [&](const Cycle& c) { return c.length() == len; });
  };
  const std::size_t r = n % 8;
  if (n >= 2 && (r == 0 || r == 4 || r == 1 || r == 5)) {
    const bool even_case = r == 0 || r == 4;
    const std::size_t len = even_case ? n - 1 : n;
    if (len >= 1 && has_length(len)) {
      ObstructionFinding f;
      f.rule = "obstruction_mod8";
      const bool positive_power = r == 0 || r == 1;
      // Pure cycle: det2 = +-J_len^power with power n/2 or (n-1)/2.
      const std::size_t power = even_case ? n / 2 : (n - 1) / 2;
      if (positive_power)
        f.not_nonpositive = true;
      else
        f.not_nonnegative = true;
      f.data["n_mod_8"] = r;
      f.data["cycle_length"] = len;
      f.data["pure_cycle_det2"] = std::string(positive_power ? "" : "-") + "J" + std::to_string(len) + "^" +
                                  std::to_string(power);
      f.data["excludes"] = positive_power ? "nonpositive" : "nonnegative";
      out.push_back(std::move(f));
    }
  }
  if (n == 5) {
    for (const auto& l : cc.loops) {
      auto it = std::find_if(cc.fours.begin(), cc.fours.end(),
                             [&](const Cycle& c) { return contains(c, l.vertices[0]); });
      if (it == cc.fours.end()) continue;
      ObstructionFinding f;
      f.rule = "obstruction_loop_4cycle";
      // Loop and 4-cycle alone: J2 = J3 = J5 = 0, so q5 = -J1^2*J4^2.
      f.not_nonnegative = true;
      f.data["loop_vertex"] = l.vertices[0] + 1;
      f.data["pure_q5"] = "-J1^2*J4^2";
      f.data["excludes"] = "nonnegative";
      out.push_back(std::move(f));
      break;
    }
  }
  if (n % 4 == 2 || n % 4 == 3) {
    // det2(-M) = -det2(M) here, and the class is closed under the induced symmetry.
    for (auto& f : out) {
      if (f.not_nonnegative != f.not_nonpositive) f.data["negation_symmetry"] = true;
      f.not_nonnegative = f.not_nonpositive = true;
    }
  }
  return out;
}

Classification2 rule_prop33(const SignPattern& p) {
  if (p.size() != 3) throw Error(ErrorCode::UnsupportedSize, "rule_prop33 needs a 3-pattern");
  CycleCensus cc = census_of(p);
  const auto& L = cc.loops;
  const auto& T = cc.twos;
  const auto& D = cc.threes;
  std::vector<std::string> structures;
  std::vector<std::string> pos_gen, neg_gen;

  // (3b): a 2-cycle with a loop at one endpoint.
  bool has3b = false;
  for (const auto& c : T)
    for (const auto& l : L)
      if (contains(c, l.vertices[0])) {
        has3b = true;
        (c.parity * l.parity > 0 ? pos_gen : neg_gen).push_back("3b");
      }
  const bool zero = L.size() < 2 && !has3b && D.empty();

  for (std::size_t a = 0; a < L.size(); ++a)
    for (std::size_t b = a + 1; b < L.size(); ++b) {
      if (L[a].parity != L[b].parity) structures.push_back("S1");
      (L[a].odd() ? pos_gen : neg_gen).push_back("loop_pair");
      if (std::any_of(T.begin(), T.end(), [](const Cycle& c) { return !c.odd(); }))
        structures.push_back("S2");
      for (const auto& t : D)
        if (t.parity == L[a].parity && t.parity == L[b].parity) structures.push_back("S4");
    }
  for (std::size_t a = 0; a < T.size(); ++a)
    for (std::size_t b = a + 1; b < T.size(); ++b) {
      if (T[a].parity == T[b].parity) continue;
      std::uint32_t shared = T[a].mask & T[b].mask;
      for (const auto& l : L)
        if ((shared >> l.vertices[0]) & 1u) structures.push_back("S3");
    }
  for (const auto& l : L)
    for (const auto& c : T) {
      if (!contains(c, l.vertices[0])) continue;
      for (const auto& t : D)
        if (t.parity == -(l.parity * c.parity)) structures.push_back("S5");
    }
  if (D.size() == 2 && D[0].parity != D[1].parity) structures.push_back("S6");
  for (const auto& t : D) (t.odd() ? neg_gen : pos_gen).push_back("triangle");

  std::sort(structures.begin(), structures.end());
  structures.erase(std::unique(structures.begin(), structures.end()), structures.end());

  Classification2 out;
  Json data;
  data["loops"] = L.size();
  data["two_cycles"] = T.size();
  data["triangles"] = D.size();
  if (zero) {
    out.verdict = Verdict::Zero;
    data["part"] = "no (3a), (3b) or (3c) subgraph";
  } else if (!structures.empty()) {
    out.verdict = Verdict::Indefinite;
    data["structures"] = structures;
  } else {
    if (!pos_gen.empty() && !neg_gen.empty())
      throw Error(ErrorCode::Inconsistency, "3-pattern has generators of both signs but no S-structure");
    if (pos_gen.empty() && neg_gen.empty())
      throw Error(ErrorCode::Inconsistency, "nonzero 3-pattern without a sign generator");
    out.verdict = pos_gen.empty() ? Verdict::Negative : Verdict::Positive;
    auto& g = pos_gen.empty() ? neg_gen : pos_gen;
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    data["generators"] = g;
  }
  data["verdict"] = to_string(out.verdict);
  out.evidence.push_back({"prop33", "3-pattern proposition", data});
  return out;
}

bool has_property_p(const SignPattern& p) {
  if (p.size() != 4) throw Error(ErrorCode::UnsupportedSize, "property P is defined for 4-patterns");
  CycleCensus cc = census_of(p);
  if (!cc.threes.empty()) return false;
  for (const auto& c : cc.loops)
    if (!c.odd()) return false;
  for (const auto& c : cc.twos)
    if (!c.odd()) return false;
  for (const auto& c : cc.fours)
    if (c.odd()) return false;
  return true;
}

std::vector<Prop44Stage> prop44_stages(const SignPattern& p) {
  if (p.size() != 4) throw Error(ErrorCode::UnsupportedSize, "prop44 stages need a 4-pattern");
  std::vector<Prop44Stage> out;
  SignPattern cur(4);
  out.push_back({"empty", cur});
  for (std::size_t i = 0; i < 4; ++i) cur.set(i, i, p(i, i));
  out.push_back({"loops", cur});

  auto two_cycle = [&](std::size_t a, std::size_t b) { return p(a, b) != 0 && p(b, a) != 0; };
  auto present = [&](std::size_t a, std::size_t b) { return cur(a, b) != 0 && cur(b, a) != 0; };
  auto add = [&](std::size_t a, std::size_t b) {
    cur.set(a, b, p(a, b));
    cur.set(b, a, p(b, a));
  };
  const std::array<std::array<std::size_t, 4>, 3> splits{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  for (const auto& s : splits) {
    if (!two_cycle(s[0], s[1]) || !two_cycle(s[2], s[3])) continue;
    if (present(s[0], s[1]) || present(s[2], s[3])) continue;
    add(s[0], s[1]);
    add(s[2], s[3]);
    Prop44Stage st{"pair", cur, {s[0], s[1]}, {s[2], s[3]}, true, true};
    out.push_back(st);
  }
  for (const auto& s : splits)
    for (int half = 0; half < 2; ++half) {
      std::size_t a = s[2 * half], b = s[2 * half + 1];
      if (!two_cycle(a, b) || present(a, b)) continue;
      add(a, b);
      std::size_t c = s[2 - 2 * half], d = s[3 - 2 * half];
      out.push_back({"single", cur, {a, b}, {c, d}, true, false});
    }
  if (!(cur == p)) out.push_back({"rest", p});
  return out;
}

std::optional<Evidence> rule_prop44(const SignPattern& p) {
  if (p.size() != 4) throw Error(ErrorCode::UnsupportedSize, "rule_prop44 needs a 4-pattern");
  if (!has_property_p(p)) return std::nullopt;
  auto stages = prop44_stages(p);
  Json data;
  std::size_t loops = 0, pairs = 0, singles = 0, rest_edges = 0;
  for (std::size_t i = 0; i < 4; ++i) loops += p(i, i) != 0;
  for (const auto& s : stages) {
    pairs += s.kind == "pair";
    singles += s.kind == "single";
  }
  const SignPattern& before_rest = stages.back().kind == "rest" ? stages[stages.size() - 2].pattern : p;
  rest_edges = p.nonzeros() - before_rest.nonzeros();
  data["loops"] = loops;
  data["disjoint_two_cycle_pairs"] = pairs;
  data["remaining_two_cycles"] = singles;
  data["remaining_edges"] = rest_edges;
  data["stages"] = stages.size();
  // det2 M >= det2 M^i, so a stage that is already strictly positive makes the whole strict.
  Json strict = nullptr;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    MultiPoly d = det2(symbolic_matrix_in(stages[i].pattern, p));
    if (term_sign(d) == Sign3::Positive) {
      strict = i;
      break;
    }
  }
  data["strict_stage"] = strict;
  data["claim"] = strict.is_null() ? "det2 >= 0" : "det2 > 0";
  return Evidence{"prop44_P", "4-pattern property P proposition", data};
}

std::vector<LemmaFinding> rule_five_pattern_lemmas(const MinorSums& j, const ClassifyOptions&) {
  if (j.n != 5) throw Error(ErrorCode::UnsupportedSize, "5-pattern lemmas need n = 5");
  const MultiPoly J1 = j.J(1), J2 = j.J(2), J3 = j.J(3), J4 = j.J(4), J5 = j.J(5);
  const MultiPoly J2J3 = J2 * J3;
  auto rec = [](Json& d, const char* name, Sign3 s) { d["hypotheses"][name] = to_string(s); };
  std::vector<LemmaFinding> out;
  {
    LemmaFinding f;
    f.rule = "lem5pat1";
    Sign3 s1 = term_sign(J1), s4 = term_sign(J4), s5 = term_sign(J5), s23 = term_sign(J2J3);
    rec(f.data, "J1", s1);
    rec(f.data, "J4", s4);
    rec(f.data, "J5", s5);
    rec(f.data, "J2*J3", s23);
    bool case_i = s1 == Sign3::Positive && s5 == Sign3::Positive && s23 == Sign3::Negative;
    bool case_ii = s1 == Sign3::Negative && s5 == Sign3::Negative && s23 == Sign3::Positive;
    f.fired = s4 == Sign3::Positive && (case_i || case_ii);
    f.strict = true;
    if (f.fired) f.data["case"] = case_i ? "i" : "ii";
    f.data["conclusion"] = "det2 < 0";
    out.push_back(std::move(f));
  }
  const MultiPoly J123 = J1 * J2J3;
  const Sign3 s123 = term_sign(J123);
  {
    LemmaFinding f;
    f.rule = "lem5pat2";
    Sign3 s4 = term_sign(J4), sx = term_sign(J1 * (J5 - J2J3));
    rec(f.data, "J1*J2*J3", s123);
    rec(f.data, "J4", s4);
    rec(f.data, "J1*(J5 - J2*J3)", sx);
    f.fired = s123 == Sign3::Positive && s4 == Sign3::Positive && sx == Sign3::Positive;
    f.data["conclusion"] = "det2 <= 0";
    out.push_back(std::move(f));
  }
  {
    LemmaFinding f;
    f.rule = "lem5pat3";
    Sign3 s15 = term_sign(J1 * J5), sx = term_sign(J1 * (J1 * J4 - J2J3));
    rec(f.data, "J1*J2*J3", s123);
    rec(f.data, "J1*J5", s15);
    rec(f.data, "J1*(J1*J4 - J2*J3)", sx);
    f.fired = s123 == Sign3::Positive && s15 == Sign3::Positive && sx == Sign3::Positive;
    f.data["conclusion"] = "det2 <= 0";
    out.push_back(std::move(f));
  }
  return out;
}

TermSignFinding qn_term_signs(const MinorSums& j, const ClassifyOptions&) {
  TermSignFinding out;
  const std::size_t n = j.n;
  if (n < 2) return out;
  std::vector<std::size_t> zeros;
  std::vector<Sign3> signs(n);
  for (std::size_t i = 0; i < n; ++i) {
    signs[i] = term_sign(j.sums[i]);
    if (signs[i] == Sign3::Zero) zeros.push_back(i);
  }
  MultiPoly q = substitute_zero_and_resign(symbolic_qn(n), zeros, {});
  out.data["reduced_qn"] = jtext(q);
  Json zj = Json::array();
  for (auto z : zeros) zj.push_back("J" + std::to_string(z + 1));
  out.data["zero_J"] = zj;
  if (q.is_zero()) return out;
  int common = 0;
  bool strict = false;
  for (const Term& t : q.terms()) {
    int s = sgn(t.coeff);
    bool term_strict = true;
    for (std::size_t i = 0; i < n; ++i) {
      unsigned e = t.monomial[i];
      if (!e) continue;
      int si = strict_sign(signs[i]);
      if (si == 0) {
        if (e % 2) return out;  // odd power of an unsigned J
        term_strict = false;
      } else if (e % 2) {
        s *= si;
      }
    }
    if (common == 0)
      common = s;
    else if (common != s)
      return out;
    strict = strict || term_strict;
  }
  out.decided = true;
  out.sign = common;
  out.strict = strict;
  out.data["claim"] = common > 0 ? (strict ? "det2 > 0" : "det2 >= 0") : (strict ? "det2 < 0" : "det2 <= 0");
  return out;
}

FactorFinding jn_zero_factor(const MinorSums& j, const ClassifyOptions& opts) {
  FactorFinding out;
  const std::size_t n = j.n;
  if (n < 2 || !j.sums[n - 1].is_zero()) return out;
  out.applies = true;
  MinorSums sym = symbolic_minor_sums(n);
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < n; ++i)
    if (j.sums[i].is_zero()) zeros.push_back(i);
  sym.sums[n - 1] = MultiPoly(n);
  out.cofactor_j = substitute_zero_and_resign(qn_cofactor_when_jn_zero(sym), zeros, {});
  out.cofactor = qn_cofactor_when_jn_zero(j);
  out.factor_sign = term_sign(j.J(static_cast<long>(n) - 1));
  out.cofactor_sign = sign_of_expression(out.cofactor, opts);
  const bool identity = j.J(static_cast<long>(n) - 1) * out.cofactor == qn_from_minor_sums(j);
  if (!identity) throw Error(ErrorCode::Inconsistency, "J_n = 0 factorization does not reproduce q_n");
  out.data["factorization"] =
      "J" + std::to_string(n - 1) + " * (" + jtext(out.cofactor_j) + ")";
  out.data["identity_verified"] = identity;
  out.data["factor_sign"] = to_string(out.factor_sign);
  out.data["cofactor_terms"] = out.cofactor.size();
  out.data["cofactor_sign"] = to_string(out.cofactor_sign);
  return out;
}

namespace {

struct Facts {
  bool nonneg = false, nonpos = false, strict = false;
  std::string source;
  bool not_nonneg = false, not_nonpos = false;

  void prove(int sign, bool is_strict, const std::string& rule) {
    if (sign > 0) {
      if (!nonneg || (is_strict && !strict)) source = rule;
      nonneg = true;
    } else {
      if (!nonpos || (is_strict && !strict)) source = rule;
      nonpos = true;
    }
    strict = strict || is_strict;
  }
};

Classification2 ladder(const SignPattern* p, const Det2Data& d, const ClassifyOptions& opts) {
  Classification2 out;
  const std::size_t n = d.j.n;
  const MultiPoly& q = d.det2;
  const Sign3 direct = term_sign(q);
  out.mixed_terms = direct == Sign3::Unknown;
  auto inconsistent = [](const std::string& why) { throw Error(ErrorCode::Inconsistency, why); };

  if (p) {
    if (auto e = rule_bipartite(*p)) {
      if (!q.is_zero()) inconsistent("bipartite pattern with nonzero det2");
      out.evidence.push_back(*e);
    }
  }

  // Exact facts.
  bool exact = true;
  if (direct == Sign3::Zero) {
    out.verdict = Verdict::Zero;
    out.evidence.push_back({"exact_zero", "definition", Json{{"det2_terms", 0}}});
  } else if (direct != Sign3::Unknown) {
    TermCensus c = term_census(q);
    out.verdict = direct == Sign3::Positive ? Verdict::Positive : Verdict::Negative;
    out.evidence.push_back({"term_signs", "single-sign polynomials are sign-definite",
                            Json{{"positive", c.positive}, {"negative", c.negative}}});
  } else {
    auto cert = mixed_vertex_certificate(q);
    out.mixed_vertices = cert.has_value();
    if (cert) {
      out.verdict = Verdict::Indefinite;
      auto dir = [](const std::vector<Integer>& d) {
        Json a = Json::array();
        for (const auto& x : d) a.push_back(integer_to_json(x));
        return a;
      };
      auto expo = [&](std::size_t t) {
        auto e = q.terms()[t].monomial.exponents();
        return Json(std::vector<unsigned>(e.begin(), e.end()));
      };
      out.evidence.push_back({"mixed_vertices", "mixed-vertices lemma",
                              Json{{"positive_vertex", expo(cert->positive_term)},
                                   {"positive_direction", dir(cert->positive_direction)},
                                   {"negative_vertex", expo(cert->negative_term)},
                                   {"negative_direction", dir(cert->negative_direction)}}});
    } else {
      exact = false;
    }
  }

  // Pattern rules and minor-sum rules; their conclusions are checked against the exact facts.
  Facts facts;
  if (p && n == 3) {
    Classification2 r = rule_prop33(*p);
    if (r.verdict != direct_term_verdict(q)) inconsistent("3-pattern rule disagrees with the term signs");
    out.evidence.push_back(r.evidence.front());
  }
  if (p) {
    for (auto& f : rule_cycle_obstructions(*p)) {
      facts.not_nonneg = facts.not_nonneg || f.not_nonnegative;
      facts.not_nonpos = facts.not_nonpos || f.not_nonpositive;
      out.evidence.push_back({f.rule, "cycle obstruction proposition", f.data});
    }
  }
  if (n <= 5 && !q.is_zero()) {
    if (p && n == 4) {
      if (auto e = rule_prop44(*p)) {
        facts.prove(1, e->data["claim"] == "det2 > 0", "prop44_P");
        out.evidence.push_back(*e);
      }
    }
    if (n == 5) {
      int k = 0;
      for (auto& f : rule_five_pattern_lemmas(d.j, opts)) {
        ++k;
        if (!f.fired) continue;
        facts.prove(-1, f.strict, f.rule);
        out.evidence.push_back({f.rule, "5-pattern lemma " + std::to_string(k), f.data});
      }
    }
    TermSignFinding ts = qn_term_signs(d.j, opts);
    if (ts.decided) {
      facts.prove(ts.sign, ts.strict, "qn_term_signs");
      out.evidence.push_back({"qn_term_signs", "q_n in the minor-sums", ts.data});
    }
    FactorFinding ff = jn_zero_factor(d.j, opts);
    if (ff.applies) {
      int fs = strict_sign(ff.factor_sign), cs = strict_sign(ff.cofactor_sign);
      if (fs && cs) {
        facts.prove(fs * cs, true, "jn_zero_factor");
        ff.data["claim"] = fs * cs > 0 ? "det2 > 0" : "det2 < 0";
      }
      out.evidence.push_back({"jn_zero_factor", "q_n factorization when J_n = 0", ff.data});
    }
  }

  // Exact facts outrank rules; a rule contradicting one is a bug.
  const bool can_pos = out.verdict == Verdict::Positive || out.verdict == Verdict::Indefinite;
  const bool can_neg = out.verdict == Verdict::Negative || out.verdict == Verdict::Indefinite;
  if (exact) {
    if (facts.nonneg && can_neg) inconsistent(facts.source + " claims det2 >= 0 against exact facts");
    if (facts.nonpos && can_pos) inconsistent(facts.source + " claims det2 <= 0 against exact facts");
    if (facts.not_nonneg && out.verdict == Verdict::Positive) inconsistent("obstruction contradicts det2 > 0");
    if (facts.not_nonpos && out.verdict == Verdict::Negative) inconsistent("obstruction contradicts det2 < 0");
  } else {
    if (facts.nonneg && facts.nonpos) inconsistent("rules claim both det2 >= 0 and det2 <= 0 for nonzero det2");
    if ((facts.nonneg && facts.not_nonneg) || (facts.nonpos && facts.not_nonpos))
      inconsistent("rule conclusion contradicts an obstruction");
    if (facts.nonneg)
      out.verdict = facts.strict ? Verdict::Positive : Verdict::NonnegativeNonzero;
    else if (facts.nonpos)
      out.verdict = facts.strict ? Verdict::Negative : Verdict::NonpositiveNonzero;
  }

  const bool want_witness = out.mixed_terms && (out.verdict == Verdict::Indefinite || !exact) &&
                            !facts.nonneg && !facts.nonpos;
  if (want_witness && opts.witness_budget > 0) {
    out.witness = indefiniteness_witness(q, opts.witness_budget, opts.seed);
    if (out.witness) {
      out.verdict = Verdict::Indefinite;
      out.evidence.push_back({"witness_pair", "exact evaluation", witness_json(*out.witness)});
    }
  }
  if (!exact && !facts.nonneg && !facts.nonpos && !out.witness) out.verdict = Verdict::Unresolved;

  std::stable_sort(out.evidence.begin(), out.evidence.end(),
                   [](const Evidence& a, const Evidence& b) { return a.rule < b.rule; });
  return out;
}

}  // namespace

Classification2 classify(const SignPattern& p, const Det2Data& d, const ClassifyOptions& opts) {
  if (p.size() < 2) throw Error(ErrorCode::UnsupportedSize, "classification needs n >= 2");
  return ladder(&p, d, opts);
}

Classification2 classify(const SignPattern& p, const ClassifyOptions& opts) {
  return classify(p, compute_det2(symbolic_matrix(p)), opts);
}

Classification2 classify_matrix(const Det2Data& d, const ClassifyOptions& opts) {
  if (d.j.n < 2) throw Error(ErrorCode::UnsupportedSize, "classification needs n >= 2");
  return ladder(nullptr, d, opts);
}

}  // namespace sns2
