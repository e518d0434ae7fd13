#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sns2/certs.hpp"
#include "sns2/kernels.hpp"
#include "sns2/report.hpp"

using namespace sns2;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;
constexpr std::size_t kMaxQn = 12;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string data_dir() {
  if (const char* d = std::getenv("SNS2_DATA_DIR")) return d;
#ifdef SNS2_DEFAULT_DATA_DIR
  return SNS2_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

int cmd_analyze(const std::string& path, const std::string& format, const ReportOptions& opts) {
  AnalysisInput in = parse_analysis_input(read_input(path), path);
  Analysis a = analyze(in, opts);
  if (format == "json")
    print_json(a.report);
  else
    std::cout << report_text(a.report);
  return kExitOk;
}

int cmd_qn(std::size_t n, const std::string& format) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "q_n needs n >= 2");
  if (n > kMaxQn) throw Error(ErrorCode::UnsupportedSize, "q_n is supported up to n = " + std::to_string(kMaxQn));
  MultiPoly q = symbolic_qn(n);
  if (format == "json")
    print_json(Json{{"n", n}, {"terms", q.size()}, {"qn", to_text(q, 'J')}});
  else
    std::cout << to_text(q, 'J') << "\n";
  return kExitOk;
}

int cmd_compound(const std::string& path, const std::string& format) {
  AnalysisInput in = parse_analysis_input(read_input(path), path);
  PolyMatrix c = second_additive_compound(in.matrix);
  MultiPoly d = det2(in.matrix);
  if (format == "json") {
    Json basis = Json::array();
    for (auto [i, j] : compound_basis(in.matrix.size())) basis.push_back(Json::array({i + 1, j + 1}));
    print_json(Json{{"n", in.matrix.size()}, {"basis", basis}, {"compound", to_json(c)["entries"]}, {"det2", to_text(d)}});
    return kExitOk;
  }
  for (std::size_t r = 0; r < c.size(); ++r) {
    for (std::size_t k = 0; k < c.size(); ++k) std::cout << (k ? " | " : "") << to_text(c(r, k));
    std::cout << "\n";
  }
  std::cout << "det2 = " << to_text(d) << "\n";
  return kExitOk;
}

int cmd_enumerate(EnumerateOptions opts, const std::string& mode, const std::string& format) {
  if (mode != "exhaustive" && mode != "sample") throw Error(ErrorCode::InvalidArgument, "mode must be exhaustive or sample");
  opts.exhaustive = mode == "exhaustive";
  if (const char* env = std::getenv("SNS2_JOBS")) {
    try {
      opts.jobs = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "SNS2_JOBS must be a positive integer");
    }
  }
  Json census = enumerate_census(opts);
  if (format == "json") {
    print_json(census);
  } else {
    std::cout << census["patterns"] << " patterns (" << census["mode"].get<std::string>() << ", n=" << census["n"]
              << "), matched " << census["matched"] << "\n";
    for (const auto& [k, v] : census["verdicts"].items()) std::cout << "  " << k << ": " << v << "\n";
    std::cout << "rules fired:";
    for (const auto& [k, v] : census["rules_fired"].items()) std::cout << " " << k << "=" << v;
    std::cout << "\ndisagreements: " << census["disagreements"].size() << ", errors: " << census["errors"].size()
              << ", indefinite without mixed vertices: " << census["indef2"]["indefinite_without_mixed_vertices"]
              << "\n";
  }
  return census["errors"].empty() && census["disagreements"].empty() ? kExitOk : kExitInconsistent;
}

int cmd_verify(const std::string& path, const std::string& format) {
  Json j;
  try {
    j = Json::parse(read_input(path));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  ConeCertificate c = certificate_from_json(j);
  CertResult r = verify_certificate(c);
  if (format == "json") {
    Json o{{"pass", r.pass}, {"claim", to_string(c.claim)}, {"residual", to_text(r.residual)},
           {"residual_terms", r.residual.size()}, {"multiplier_checked", r.multiplier_checked}};
    if (!r.pass) o["reason"] = r.reason;
    print_json(o);
  } else if (r.pass) {
    std::cout << "PASS " << to_string(c.claim) << " (" << c.terms.size() << " terms"
              << (r.multiplier_checked ? ", multiplier decomposed" : "") << ")\n";
  } else {
    std::cout << "FAIL " << r.reason << "\nresidual = " << to_text(r.residual) << "\n";
  }
  return r.pass ? kExitOk : kExitFail;
}

int cmd_selftest() {
  int failures = 0;
  auto check = [&](const char* name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };
  std::cout << "simd: " << (kernels::active_level() == kernels::SimdLevel::Avx2 ? "avx2" : "scalar") << "\n";
  check("q2 = J1", to_text(symbolic_qn(2), 'J') == "J1");
  check("q3 = -J3 + J1*J2", to_text(symbolic_qn(3), 'J') == "-J3 + J1*J2");
  check("q5 has 7 terms", symbolic_qn(5).size() == 7);
  PolyMatrix d(4, 1);
  for (std::size_t i = 0; i < 4; ++i) d.set(i, i, MultiPoly::constant(1, Integer(static_cast<long>(i + 1))));
  check("det2 diag(1,2,3,4) = 12600", det2(d) == MultiPoly::constant(1, Integer(12600)));
  SignPattern g(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) g.set(i, j, 1);
  PolyMatrix gm = symbolic_matrix(g);
  check("compound route equals q_n route (generic 3x3)", det2(gm) == qn_from_minor_sums(minor_sums(gm)));
  for (auto s : {BridgeScheme::Lemma2, BridgeScheme::Lemma3})
    check(s == BridgeScheme::Lemma2 ? "lemma2 substitution bridge" : "lemma3 substitution bridge",
          substitution_bridge(symbolic_minor_sums(5), s).holds);
  for (const char* name : {"lemma2", "lemma3"}) {
    std::string path = data_dir() + "/certs/" + name + ".cert.json";
    bool ok = false;
    try {
      ok = verify_certificate(certificate_from_json(Json::parse(read_input(path)))).pass;
    } catch (const std::exception&) {
    }
    check((std::string(name) + " certificate").c_str(), ok);
  }
  check("2-loop pattern is Indefinite", classify(parse_pattern("+ 0\n0 -")).verdict == Verdict::Indefinite);
  std::cout << (failures ? "selftest FAILED" : "selftest passed") << "\n";
  return failures ? kExitFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact second additive compound analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string format = "text", input, mode = "exhaustive";
  ReportOptions ropts;
  std::uint64_t seed = 1;
  std::size_t budget = kDefaultWitnessBudget, qn_n = 0;
  EnumerateOptions eopts;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto* analyze_cmd = app.add_subcommand("analyze", "Classify a sign pattern or polynomial matrix");
  analyze_cmd->add_option("input", input, "pattern or matrix file ('-' for stdin)")->required();
  add_common(analyze_cmd);
  analyze_cmd->add_option("--seed", seed, "witness search seed");
  analyze_cmd->add_option("--witness-budget", budget, "random witness points");
  analyze_cmd->add_flag("--timing", ropts.timing, "include wall-clock timings (breaks byte stability)");

  auto* qn_cmd = app.add_subcommand("qn", "Print q_n in J1..Jn");
  qn_cmd->add_option("--n", qn_n, "size")->required();
  add_common(qn_cmd);

  auto* compound_cmd = app.add_subcommand("compound", "Print M^[2] and its determinant");
  compound_cmd->add_option("input", input, "pattern or matrix file")->required();
  add_common(compound_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate", "Census of sign patterns");
  enum_cmd->add_option("--n", eopts.n, "pattern size");
  enum_cmd->add_option("--mode", mode, "exhaustive or sample")->check(CLI::IsMember({"exhaustive", "sample"}));
  enum_cmd->add_option("--count", eopts.count, "patterns in sample mode");
  enum_cmd->add_option("--seed", eopts.seed, "sample seed");
  enum_cmd->add_option("--filter", eopts.filter, "keep patterns where this rule fired");
  enum_cmd->add_option("--jobs", eopts.jobs, "worker threads (SNS2_JOBS overrides)");
  enum_cmd->add_option("--witness-budget", eopts.witness_budget, "random witness points");
  std::string enum_format = "json";
  enum_cmd->add_option("--format", enum_format, "json (default) or text")->check(CLI::IsMember({"text", "json"}));

  auto* cert_cmd = app.add_subcommand("verify-cert", "Check a cone certificate");
  cert_cmd->add_option("input", input, "certificate JSON")->required();
  add_common(cert_cmd);

  auto* self_cmd = app.add_subcommand("selftest", "Built-in consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) {
      ropts.classify.seed = seed;
      ropts.classify.witness_budget = budget;
      return cmd_analyze(input, format, ropts);
    }
    if (*qn_cmd) return cmd_qn(qn_n, format);
    if (*compound_cmd) return cmd_compound(input, format);
    if (*enum_cmd) return cmd_enumerate(eopts, mode, enum_format);
    if (*cert_cmd) return cmd_verify(input, format);
    if (*self_cmd) return cmd_selftest();
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return e.code() == ErrorCode::Inconsistency ? kExitInconsistent : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  }
  return kExitUsage;
}
