#pragma once

// Classification of det^[2] for sign patterns and polynomial matrices.

#include <optional>
#include <string>
#include <vector>

#include "sns2/compound.hpp"
#include "sns2/polyio.hpp"
#include "sns2/polytope.hpp"
#include "sns2/signpat.hpp"

namespace sns2 {

enum class Verdict {
  Zero,
  Positive,
  Negative,
  NonnegativeNonzero,
  NonpositiveNonzero,
  Indefinite,
  Unresolved,
};

enum class Sign3 { Positive, Negative, Zero, Indefinite, Unknown };

const char* to_string(Verdict v);
const char* to_string(Sign3 s);

struct Evidence {
  std::string rule;    // stable id
  std::string anchor;  // which result the rule rests on
  Json data;
};

struct Classification2 {
  Verdict verdict = Verdict::Unresolved;
  std::vector<Evidence> evidence;
  std::optional<SignWitness> witness;
  bool mixed_terms = false;
  std::optional<bool> mixed_vertices;  // unset when not computed

  const Evidence* find(std::string_view rule) const;
};

struct ClassifyOptions {
  std::size_t witness_budget = kDefaultWitnessBudget;
  std::uint64_t seed = 1;
};

Sign3 sign_of_expression(const MultiPoly& e, const ClassifyOptions& opts = {});

// Everything the ladder needs, computed once.
struct Det2Data {
  PolyMatrix matrix{1, 1};
  MinorSums j;
  MultiPoly det2;
};

Det2Data compute_det2(const PolyMatrix& m);

Classification2 classify(const SignPattern& p, const ClassifyOptions& opts = {});
Classification2 classify(const SignPattern& p, const Det2Data& d, const ClassifyOptions& opts = {});
// Generic ladder for a polynomial matrix (no pattern-specific rules).
Classification2 classify_matrix(const Det2Data& d, const ClassifyOptions& opts = {});

// Verdict from the term signs alone: Zero, Positive, Negative, or Indefinite
// when the terms are mixed. At n = 3 this is decisive.
Verdict direct_term_verdict(const MultiPoly& det2);

std::optional<Evidence> rule_bipartite(const SignPattern& p);

struct ObstructionFinding {
  std::string rule;  // obstruction_mod8 or obstruction_loop_4cycle
  bool not_nonnegative = false;
  bool not_nonpositive = false;
  Json data;
};

std::vector<ObstructionFinding> rule_cycle_obstructions(const SignPattern& p);

// Full verdict for a 3-pattern read off its cycle census.
Classification2 rule_prop33(const SignPattern& p);

struct Prop44Stage {
  std::string kind;  // loops, pair, single, rest
  SignPattern pattern;
  // Vertex pairs for pair/single stages; beta is the complement of alpha for single stages.
  std::pair<std::size_t, std::size_t> alpha{0, 0}, beta{0, 0};
  bool has_alpha = false, has_beta = false;
};

bool has_property_p(const SignPattern& p);
// The increasing sequence M^0 <= M^1 <= ... <= M.
std::vector<Prop44Stage> prop44_stages(const SignPattern& p);
std::optional<Evidence> rule_prop44(const SignPattern& p);

struct LemmaFinding {
  std::string rule;  // lem5pat1..3
  bool fired = false;
  bool strict = false;  // det2 < 0 rather than <= 0
  Json data;
};

std::vector<LemmaFinding> rule_five_pattern_lemmas(const MinorSums& j, const ClassifyOptions& opts = {});

struct TermSignFinding {
  bool decided = false;
  int sign = 0;  // +1 nonneg, -1 nonpos
  bool strict = false;
  Json data;
};

// Signs of the terms of q_n once the identically-zero J_i are removed.
TermSignFinding qn_term_signs(const MinorSums& j, const ClassifyOptions& opts = {});

struct FactorFinding {
  bool applies = false;
  MultiPoly cofactor_j{1};  // in J-variables
  MultiPoly cofactor{1};    // in the matrix variables
  Sign3 factor_sign = Sign3::Unknown, cofactor_sign = Sign3::Unknown;
  Json data;
};

// J_n == 0 gives q_n = J_{n-1} * cofactor.
FactorFinding jn_zero_factor(const MinorSums& j, const ClassifyOptions& opts = {});

}  // namespace sns2
