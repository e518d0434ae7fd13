#include "sns2/report.hpp"

#include <chrono>
#include <sstream>

#include "sns2/compound.hpp"

namespace sns2 {

AnalysisInput parse_analysis_input(std::string_view text, std::string source) {
  AnalysisInput in;
  in.source = std::move(source);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
    }
    if (j.contains("signs")) {
      in.pattern = pattern_from_json(j);
    } else if (j.contains("entries")) {
      in.matrix = matrix_from_json(j);
      return in;
    } else {
      throw Error(ErrorCode::Parse, "JSON input needs \"signs\" (pattern) or \"entries\" (matrix)");
    }
  } else {
    in.pattern = parse_pattern(text);
  }
  in.matrix = symbolic_matrix(*in.pattern);
  return in;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) { return std::chrono::duration<double, std::milli>(Clock::now() - t).count(); }

Json census_json(const MultiPoly& p) {
  TermCensus c = term_census(p);
  return Json{{"terms", p.size()}, {"positive", c.positive}, {"negative", c.negative}};
}

// Known examples whose published sign claims rest on non-exact computations.
struct ExternalNote {
  const char* pattern;
  const char* note;
};

const ExternalNote kExternalNotes[] = {
    {"0 + + + 0\n0 0 - - +\n0 0 + - +\n0 0 0 + +\n+ 0 0 0 0",
     "-det2 was reported outside this tool (semidefinite programming) not to lie in the cone C_X; "
     "unverified here"},
};

}  // namespace

Analysis analyze(const AnalysisInput& in, const ReportOptions& opts) {
  const auto start = Clock::now();
  Json timing;
  Det2Data d = compute_det2(in.matrix);
  timing["minor_sums_and_det2_ms"] = ms_since(start);
  const std::size_t n = in.matrix.size();

  Json r;
  r["tool"] = Json{{"name", "sns2"}, {"version", kToolVersion}};
  Json input;
  input["source"] = in.source;
  input["kind"] = in.pattern ? "pattern" : "matrix";
  input["n"] = n;
  input["arity"] = in.matrix.arity();
  if (in.pattern)
    input["pattern"] = to_json(*in.pattern)["signs"];
  else
    input["matrix"] = to_json(in.matrix)["entries"];
  r["input"] = input;
  r["options"] = Json{{"seed", opts.classify.seed}, {"witness_budget", opts.classify.witness_budget}};

  if (in.pattern) {
    const SignPattern& p = *in.pattern;
    SignPattern core = weakly_reversible_core(p);
    Json dropped = Json::array();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (p(i, j) && !core(i, j)) dropped.push_back("X" + std::to_string(p.variable_of(i, j) + 1));
    const bool same = qn_from_minor_sums(minor_sums(symbolic_matrix_in(core, p))) == d.det2;
    if (!same) throw Error(ErrorCode::Inconsistency, "weakly reversible core changed det2");
    r["weakly_reversible_core"] = Json{{"dropped_variables", dropped}, {"det2_unchanged", same}};
  }

  Json js = Json::array();
  for (std::size_t i = 1; i <= n; ++i) {
    const MultiPoly& ji = d.j.sums[i - 1];
    Json e = census_json(ji);
    e = Json{{"i", i}, {"terms", e["terms"]}, {"positive", e["positive"]}, {"negative", e["negative"]},
             {"sign_class", to_string(sign_of_expression(ji, opts.classify))}};
    js.push_back(e);
  }
  r["minor_sums"] = js;

  auto t_cls = Clock::now();
  Classification2 cls = in.pattern ? classify(*in.pattern, d, opts.classify) : classify_matrix(d, opts.classify);
  timing["classification_ms"] = ms_since(t_cls);

  Json det;
  const MultiPoly& q = d.det2;
  det["degree"] = q.degree();
  det["homogeneous"] = q.is_homogeneous();
  Json c = census_json(q);
  det["terms"] = c["terms"];
  det["positive"] = c["positive"];
  det["negative"] = c["negative"];
  det["mixed_terms"] = cls.mixed_terms;
  det["mixed_vertices"] = cls.mixed_vertices ? Json(*cls.mixed_vertices) : Json(nullptr);
  if (!q.is_zero() && q.size() <= opts.vertex_count_limit) {
    auto t_np = Clock::now();
    NewtonPolytope np = newton_polytope(q);
    std::size_t pv = 0, nv = 0;
    for (std::size_t i = 0; i < np.points.size(); ++i)
      if (np.vertex[i]) (sgn(q.terms()[i].coeff) > 0 ? pv : nv)++;
    det["vertices"] = Json{{"total", pv + nv}, {"positive", pv}, {"negative", nv}};
    if (!cls.mixed_vertices.has_value()) det["mixed_vertices"] = pv > 0 && nv > 0;
    timing["newton_polytope_ms"] = ms_since(t_np);
  } else {
    det["vertices"] = nullptr;
  }
  if (q.size() <= opts.polynomial_text_limit) det["polynomial"] = to_text(q);
  det["verdict"] = to_string(cls.verdict);
  Json ev = Json::array();
  for (const auto& e : cls.evidence) ev.push_back(Json{{"rule", e.rule}, {"anchor", e.anchor}, {"data", e.data}});
  det["evidence"] = ev;
  det["witnesses"] = nullptr;
  if (cls.witness) {
    for (const auto& e : cls.evidence)
      if (e.rule == "witness_pair") det["witnesses"] = e.data;
  }
  det["indef2_case"] = cls.verdict == Verdict::Indefinite && cls.mixed_terms && cls.mixed_vertices == false;
  r["det2"] = det;

  // Independent routes to det2.
  Json routes;
  auto t_routes = Clock::now();
  if (n <= 6) {
    const bool eq = det2(in.matrix) == q;
    if (!eq) throw Error(ErrorCode::Inconsistency, "compound determinant disagrees with q_n");
    routes["compound_determinant_equal"] = eq;
  } else {
    routes["compound_determinant_equal"] = nullptr;
  }
  if (n >= 2) {
    MultiPoly res = sylvester_resultant_mu(phat_qhat(d.j), d.j.arity);
    int sign = res == q ? 1 : (res == -q ? -1 : 0);
    if (sign == 0) throw Error(ErrorCode::Inconsistency, "resultant is not +-q_n");
    if (q.is_zero()) sign = 1;
    routes["resultant_sign"] = sign;
  }
  timing["route_checks_ms"] = ms_since(t_routes);
  r["route_checks"] = routes;

  Json notes = Json::array();
  if (in.pattern)
    for (const auto& x : kExternalNotes) {
      SignPattern known = parse_pattern(x.pattern);
      if (known.size() == n && are_isomorphic(known, *in.pattern)) notes.push_back(x.note);
    }
  r["external_evidence"] = notes;
  if (opts.timing) {
    timing["total_ms"] = ms_since(start);
    r["timing"] = timing;
  }
  return {r, cls};
}

namespace {

std::string scalar_text(const Json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  if (s.size() > 40) s = s.substr(0, 12) + "... (" + std::to_string(s.size()) + " chars)";
  return s;
}

}  // namespace

std::string report_text(const Json& r) {
  std::ostringstream out;
  out << "sns2 " << r["tool"]["version"].get<std::string>() << "\n";
  const Json& in = r["input"];
  out << "input: " << in["kind"].get<std::string>() << " n=" << in["n"] << " arity=" << in["arity"];
  if (!in["source"].get<std::string>().empty()) out << " (" << in["source"].get<std::string>() << ")";
  out << "\n";
  if (r.contains("weakly_reversible_core")) {
    const Json& w = r["weakly_reversible_core"];
    out << "weakly reversible core: ";
    if (w["dropped_variables"].empty())
      out << "every arc lies on a cycle\n";
    else {
      out << "drops";
      for (const auto& v : w["dropped_variables"]) out << " " << v.get<std::string>();
      out << " (det2 unchanged)\n";
    }
  }
  for (const auto& j : r["minor_sums"])
    out << "J" << j["i"] << ": " << j["terms"] << " terms (+" << j["positive"] << " -" << j["negative"] << ") "
        << j["sign_class"].get<std::string>() << "\n";
  const Json& d = r["det2"];
  out << "det2: degree " << d["degree"] << (d["homogeneous"].get<bool>() ? ", homogeneous" : "") << ", "
      << d["terms"] << " terms (+" << d["positive"] << " -" << d["negative"] << ")\n";
  out << "mixed terms: " << (d["mixed_terms"].get<bool>() ? "yes" : "no") << ", mixed vertices: "
      << (d["mixed_vertices"].is_null() ? "n/a" : d["mixed_vertices"].get<bool>() ? "yes" : "no");
  if (!d["vertices"].is_null())
    out << ", vertices " << d["vertices"]["total"] << " (+" << d["vertices"]["positive"] << " -"
        << d["vertices"]["negative"] << ")";
  out << "\n";
  if (d.contains("polynomial") && d["terms"].get<std::size_t>() <= 20)
    out << "det2 = " << d["polynomial"].get<std::string>() << "\n";
  out << "verdict: " << d["verdict"].get<std::string>() << "\n";
  for (const auto& e : d["evidence"]) {
    out << "  [" << e["rule"].get<std::string>() << "] " << e["anchor"].get<std::string>();
    const Json& data = e["data"];
    if (data.contains("claim")) out << ": " << data["claim"].get<std::string>();
    if (data.contains("conclusion")) out << ": " << data["conclusion"].get<std::string>();
    if (data.contains("factorization")) out << ": q_n = " << data["factorization"].get<std::string>();
    if (data.contains("excludes")) out << ": excludes " << data["excludes"].get<std::string>();
    if (data.contains("verdict")) out << ": " << data["verdict"].get<std::string>();
    out << "\n";
  }
  if (!d["witnesses"].is_null()) {
    out << "  witness values: " << scalar_text(d["witnesses"]["positive_value"]) << " and "
        << scalar_text(d["witnesses"]["negative_value"]) << "\n";
  }
  const Json& rc = r["route_checks"];
  out << "route checks: compound "
      << (rc["compound_determinant_equal"].is_null() ? "skipped" : rc["compound_determinant_equal"].get<bool>() ? "equal" : "DIFFERENT");
  if (rc.contains("resultant_sign")) out << ", resultant = " << (rc["resultant_sign"].get<int>() > 0 ? "+" : "-") << "q_n";
  out << "\n";
  for (const auto& note : r["external_evidence"]) out << "note: " << note.get<std::string>() << "\n";
  if (r.contains("timing")) out << "time: " << r["timing"]["total_ms"].get<double>() << " ms\n";
  return out.str();
}

}  // namespace sns2
