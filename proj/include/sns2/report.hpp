#pragma once

// Analysis reports and the enumeration census.

#include <optional>
#include <string>

#include "sns2/rules.hpp"

namespace sns2 {

inline constexpr const char* kToolVersion = "0.1.0";

struct AnalysisInput {
  std::optional<SignPattern> pattern;
  PolyMatrix matrix{1, 1};
  std::string source;  // echo for the report
};

// Pattern text, pattern JSON {"n","signs"} or matrix JSON {"n","arity","entries"}.
AnalysisInput parse_analysis_input(std::string_view text, std::string source = "");

struct ReportOptions {
  ClassifyOptions classify;
  bool timing = false;
  // Full vertex enumeration is skipped above this many det2 terms.
  std::size_t vertex_count_limit = 1500;
  std::size_t polynomial_text_limit = 1000;
};

struct Analysis {
  Json report;
  Classification2 classification;
};

Analysis analyze(const AnalysisInput& in, const ReportOptions& opts = {});

std::string report_text(const Json& report);

struct EnumerateOptions {
  std::size_t n = 3;
  bool exhaustive = true;
  std::uint64_t count = 0;  // sample mode
  std::uint64_t seed = 1;
  std::string filter;  // rule id; empty keeps every pattern
  unsigned jobs = 1;
  std::size_t witness_budget = kDefaultWitnessBudget;
  std::size_t indef2_log_limit = 200;
};

inline constexpr std::size_t kMaxExhaustiveSize = 3;

// Pattern number `index` of the run; sample mode draws it from (seed, index) only.
SignPattern enumerated_pattern(const EnumerateOptions& opts, std::uint64_t index);

Json enumerate_census(const EnumerateOptions& opts);

}  // namespace sns2
