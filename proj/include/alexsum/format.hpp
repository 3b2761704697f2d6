#pragma once

#include "alexsum/laurent.hpp"

#include <json.hpp>

#include <string>

namespace alexsum {

// Plain-text polynomial rendering.  Laurent and half-integer-t values print
// in descending exponent order ("-v^2 + 3 - v^-2"); Conway polynomials in
// ascending order ("1 - z^2"); the zero polynomial prints "0".
std::string render(const LaurentPoly& p, char variable = 'v');
std::string render(const ConwayPoly& p);
std::string render(const HalfTPoly& p);  // half exponents as t^1/2, t^-3/2, ...

// "num / den" with parentheses when the denominator is not 1.
std::string render(const RationalFn& f, char variable = 'v');

// JSON form: {"variable": "v", "terms": [[exp, coeff], ...]} with terms in
// ascending exponent order.  v- and z-exponents are integers; t-exponents
// are strings "k" or "k/2".  Coefficients are JSON integers when they fit
// in 64 bits and decimal strings otherwise.
nlohmann::json poly_to_json(const LaurentPoly& p, const std::string& variable);
nlohmann::json poly_to_json(const ConwayPoly& p);
nlohmann::json poly_to_json(const HalfTPoly& p);

// {"num": ..., "den": ...}, both in the polynomial schema above.
nlohmann::json rational_to_json(const RationalFn& f, const std::string& variable);

// Inverses of the JSON forms; throw std::invalid_argument on schema
// violations (wrong variable, bad exponent/coefficient encoding).
LaurentPoly laurent_from_json(const nlohmann::json& j, const std::string& variable);
ConwayPoly conway_from_json(const nlohmann::json& j);
HalfTPoly half_t_from_json(const nlohmann::json& j);

}  // namespace alexsum
