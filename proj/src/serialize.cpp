#include "nsmac/serialize.hpp"

#include "nsmac/errors.hpp"

namespace nsmac {

using json = nlohmann::ordered_json;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}

int exponent_from_json(const json& j) {
  require(j.is_number_integer() && j.get<long>() >= 0 && j.get<long>() <= 1 << 20, "exponent must be a nonnegative integer");
  return j.get<int>();
}

}  // namespace

json to_json(const QTPolynomial& p) {
  json out = json::array();
  for (const auto& term : p.terms()) out.push_back(json::array({term.qexp, term.texp, fraction_string(term.coeff)}));
  return out;
}

json to_json(const QTRational& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

json to_json(const XPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exps", e}, {"coeff", to_json(c)}});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

QTPolynomial qt_polynomial_from_json(const json& j) {
  require(j.is_array(), "polynomial must be an array of [qexp, texp, coeff] triples");
  std::vector<QTTerm> terms;
  for (const auto& term : j) {
    require(term.is_array() && term.size() == 3, "polynomial term must be [qexp, texp, coeff]");
    require(term[2].is_string(), "coefficient must be a string \"a/b\"");
    terms.push_back({exponent_from_json(term[0]), exponent_from_json(term[1]), parse_rational(term[2].get<std::string>())});
  }
  return QTPolynomial::from_terms(std::move(terms));
}

QTRational qt_rational_from_json(const json& j) {
  require(j.is_object() && j.contains("num") && j.contains("den"), "rational function must have \"num\" and \"den\"");
  const QTPolynomial den = qt_polynomial_from_json(j.at("den"));
  require(!den.is_zero(), "zero denominator");
  return QTRational(qt_polynomial_from_json(j.at("num")), den);
}

XPolynomial xpolynomial_from_json(const json& j) {
  require(j.is_object() && j.contains("nvars") && j.contains("terms"), "polynomial must have \"nvars\" and \"terms\"");
  require(j.at("nvars").is_number_integer() && j.at("nvars").get<long>() >= 0, "nvars must be a nonnegative integer");
  const int n = j.at("nvars").get<int>();
  require(j.at("terms").is_array(), "terms must be an array");
  XPolynomial p(n);
  for (const auto& term : j.at("terms")) {
    require(term.is_object() && term.contains("exps") && term.contains("coeff"), "term must have \"exps\" and \"coeff\"");
    const json& exps = term.at("exps");
    require(exps.is_array() && static_cast<int>(exps.size()) == n, "exponent vector must have nvars entries");
    Exponent e;
    for (const auto& k : exps) e.push_back(exponent_from_json(k));
    p.add_term(e, qt_rational_from_json(term.at("coeff")));
  }
  return p;
}

json result_json(const Composition& mu, const std::string& method, const XPolynomial& p) {
  return {{"mu", mu.parts()}, {"method", method}, {"poly", to_json(p)}};
}

}  // namespace nsmac
