#pragma once

#include <json.hpp>

#include "nsmac/composition.hpp"
#include "nsmac/xpoly.hpp"

namespace nsmac {

// {"num": [[qexp, texp, "a/b"], ...], "den": [...]}, terms lex-descending.
nlohmann::ordered_json to_json(const QTPolynomial& p);
nlohmann::ordered_json to_json(const QTRational& r);
// {"nvars": n, "terms": [{"exps": [...], "coeff": ...}, ...]} in graded lex order.
nlohmann::ordered_json to_json(const XPolynomial& p);

// Throw ParseError on malformed input.
QTPolynomial qt_polynomial_from_json(const nlohmann::ordered_json& j);
QTRational qt_rational_from_json(const nlohmann::ordered_json& j);
XPolynomial xpolynomial_from_json(const nlohmann::ordered_json& j);

// {"mu": [...], "method": "...", "poly": ...}
nlohmann::ordered_json result_json(const Composition& mu, const std::string& method, const XPolynomial& p);

}  // namespace nsmac
