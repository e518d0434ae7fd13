#pragma once

// Newton polytopes: exact vertex decisions, face polynomials, mixed vertices
// and a constructive search for points of opposite sign.

#include <cstdint>
#include <optional>
#include <vector>

#include "sns2/polycore.hpp"

namespace sns2 {

struct NewtonPolytope {
  std::size_t arity = 0;
  std::vector<std::vector<Exp>> points;  // in the term order of the source
  std::vector<bool> vertex;
  // For each vertex, an integer direction it uniquely maximizes (empty for non-vertices).
  std::vector<std::vector<Integer>> direction;

  std::size_t vertex_count() const;
};

NewtonPolytope newton_polytope(const MultiPoly& p);

// Exact test whether target lies in the convex hull of the given points.
bool in_convex_hull(const std::vector<std::vector<Exp>>& points, const std::vector<Exp>& target);

// Terms whose exponents maximize v . alpha.
MultiPoly face_polynomial(const MultiPoly& p, std::span<const Rational> v);

bool mixed_vertices(const MultiPoly& p);

// One vertex term of each sign with directions they uniquely maximize.
struct MixedVertexCertificate {
  std::size_t positive_term = 0, negative_term = 0;  // indices into p.terms()
  std::vector<Integer> positive_direction, negative_direction;
};

// Tests only as many terms as needed: the rarer sign first, stopping at the first vertex.
std::optional<MixedVertexCertificate> mixed_vertex_certificate(const MultiPoly& p);
bool mixed_vertices(const MultiPoly& p, const NewtonPolytope& np);

struct SignWitness {
  std::vector<Rational> positive_point, negative_point;
  Rational positive_value, negative_value;
};

inline constexpr std::size_t kDefaultWitnessBudget = 10000;

// Positive rational points where p is > 0 and < 0, each confirmed by exact
// evaluation. Budget counts evaluations.
std::optional<SignWitness> indefiniteness_witness(const MultiPoly& p,
                                                  std::size_t budget = kDefaultWitnessBudget,
                                                  std::uint64_t seed = 1);

// Sign of p at a positive rational point: -1, 0, +1.
int sign_at(const MultiPoly& p, std::span<const Rational> point);

}  // namespace sns2
