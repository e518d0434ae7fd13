#pragma once

// Text and JSON forms of polynomials and polynomial matrices.
//
// Text:  -3*X1^2*X4 + X2   (variables are 1-based; the letter is cosmetic and
//                           may be X or J on input)
// JSON:  [[coeff, [e1, ..., ek]], ...] with coeff a JSON integer or, when it
//        does not fit in 64 bits, a decimal string.

#include <json.hpp>
#include <string>
#include <string_view>

#include "sns2/polycore.hpp"

namespace sns2 {

using Json = nlohmann::ordered_json;

std::string to_text(const MultiPoly& p, char letter = 'X');

// arity 0 infers the arity from the largest variable index seen.
MultiPoly parse_poly(std::string_view text, std::size_t arity = 0);

Json to_json(const MultiPoly& p);
// Accepts a term list or a text string.
MultiPoly poly_from_json(const Json& j, std::size_t arity);

Json to_json(const PolyMatrix& m);
// {"n": n, "arity": k, "entries": [[<poly>, ...], ...]}
PolyMatrix matrix_from_json(const Json& j);

Integer integer_from_json(const Json& j);
Json integer_to_json(const Integer& z);
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);

}  // namespace sns2
