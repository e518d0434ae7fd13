#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <thread>

#include "sns2/report.hpp"

namespace sns2 {

namespace {

constexpr std::size_t kMaxSampleSize = 8;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Row {
  Verdict verdict = Verdict::Unresolved;
  std::vector<std::string> rules;
  bool mixed_terms = false;
  std::optional<bool> mixed_vertices;
  std::string disagreement;  // empty when the cross-check agrees or does not apply
  std::string error;
};

Verdict taxonomy2(const SignPattern& p) {
  int pos = (p(0, 0) > 0) + (p(1, 1) > 0), neg = (p(0, 0) < 0) + (p(1, 1) < 0);
  if (pos + neg == 0) return Verdict::Zero;
  if (neg == 0) return Verdict::Positive;
  if (pos == 0) return Verdict::Negative;
  return Verdict::Indefinite;
}

Row run_one(const SignPattern& p, const EnumerateOptions& opts, std::uint64_t index) {
  Row row;
  ClassifyOptions co;
  co.witness_budget = opts.witness_budget;
  co.seed = opts.seed ^ splitmix(index);
  try {
    Det2Data d = compute_det2(symbolic_matrix(p));
    if (p.size() == 3) {
      Verdict rule = rule_prop33(p).verdict, direct = direct_term_verdict(d.det2);
      if (rule != direct)
        row.disagreement = std::string("prop33 ") + to_string(rule) + " vs term signs " + to_string(direct);
    }
    Classification2 c = classify(p, d, co);
    if (p.size() == 2 && c.verdict != taxonomy2(p))
      row.disagreement = std::string("taxonomy ") + to_string(taxonomy2(p)) + " vs " + to_string(c.verdict);
    row.verdict = c.verdict;
    row.mixed_terms = c.mixed_terms;
    row.mixed_vertices = c.mixed_vertices;
    for (const auto& e : c.evidence)
      if (std::find(row.rules.begin(), row.rules.end(), e.rule) == row.rules.end()) row.rules.push_back(e.rule);
  } catch (const Error& e) {
    row.error = std::string(to_string(e.code())) + ": " + e.what();
  }
  return row;
}

}  // namespace

SignPattern enumerated_pattern(const EnumerateOptions& opts, std::uint64_t index) {
  const std::size_t n = opts.n;
  SignPattern p(n);
  if (opts.exhaustive) {
    for (std::size_t k = 0; k < n * n; ++k, index /= 3) p.set(k / n, k % n, static_cast<int>(index % 3) - 1);
    return p;
  }
  std::mt19937_64 rng(splitmix(opts.seed) ^ splitmix(index + 0x5bd1e995ULL));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.set(i, j, static_cast<int>(rng() % 3) - 1);
  return p;
}

Json enumerate_census(const EnumerateOptions& opts) {
  if (opts.n == 0) throw Error(ErrorCode::InvalidArgument, "enumeration size must be positive");
  if (opts.exhaustive && opts.n > kMaxExhaustiveSize)
    throw Error(ErrorCode::UnsupportedSize, "exhaustive enumeration supports n <= " +
                                                std::to_string(kMaxExhaustiveSize) + "; use sample mode");
  if (!opts.exhaustive && opts.n > kMaxSampleSize)
    throw Error(ErrorCode::UnsupportedSize, "sample enumeration supports n <= " + std::to_string(kMaxSampleSize));
  std::uint64_t total = opts.count;
  if (opts.exhaustive) {
    total = 1;
    for (std::size_t k = 0; k < opts.n * opts.n; ++k) total *= 3;
  }

  std::vector<Row> rows(total);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= total) return;
      rows[i] = run_one(enumerated_pattern(opts, i), opts, i);
    }
  };
  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || total < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  const Verdict all[] = {Verdict::Zero,       Verdict::Positive,           Verdict::Negative,
                         Verdict::NonnegativeNonzero, Verdict::NonpositiveNonzero, Verdict::Indefinite,
                         Verdict::Unresolved};
  std::map<Verdict, std::uint64_t> counts;
  std::map<std::string, std::uint64_t> fired;
  Json disagreements = Json::array(), errors = Json::array(), indef2 = Json::array();
  std::uint64_t matched = 0, indef2_total = 0, mixed_terms_no_vertex = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    const Row& r = rows[i];
    if (!opts.filter.empty() && std::find(r.rules.begin(), r.rules.end(), opts.filter) == r.rules.end()) continue;
    ++matched;
    auto pattern_text = [&] { return to_text(enumerated_pattern(opts, i)); };
    if (!r.error.empty()) {
      errors.push_back(Json{{"index", i}, {"pattern", pattern_text()}, {"error", r.error}});
      continue;
    }
    counts[r.verdict]++;
    for (const auto& rule : r.rules) fired[rule]++;
    if (!r.disagreement.empty())
      disagreements.push_back(Json{{"index", i}, {"pattern", pattern_text()}, {"detail", r.disagreement}});
    if (r.mixed_terms && r.mixed_vertices == false) {
      ++mixed_terms_no_vertex;
      if (r.verdict == Verdict::Indefinite) {
        if (indef2.size() < opts.indef2_log_limit)
          indef2.push_back(Json{{"index", i}, {"pattern", pattern_text()}});
        ++indef2_total;
      }
    }
  }

  Json out;
  out["n"] = opts.n;
  out["mode"] = opts.exhaustive ? "exhaustive" : "sample";
  out["patterns"] = total;
  if (!opts.exhaustive) out["seed"] = opts.seed;
  out["witness_budget"] = opts.witness_budget;
  out["filter"] = opts.filter.empty() ? Json(nullptr) : Json(opts.filter);
  out["matched"] = matched;
  Json v;
  for (Verdict x : all) v[to_string(x)] = counts[x];
  out["verdicts"] = v;
  Json f = Json::object();
  for (const auto& [rule, k] : fired) f[rule] = k;
  out["rules_fired"] = f;
  out["cross_check"] = opts.n == 3 ? Json("prop33 vs term signs") : opts.n == 2 ? Json("2-pattern taxonomy") : Json(nullptr);
  out["disagreements"] = disagreements;
  out["errors"] = errors;
  out["indef2"] = Json{{"mixed_terms_without_mixed_vertices", mixed_terms_no_vertex},
                       {"indefinite_without_mixed_vertices", indef2_total},
                       {"logged", indef2}};
  return out;
}

}  // namespace sns2
