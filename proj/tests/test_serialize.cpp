#include <doctest.h>

#include <fstream>
#include <random>

#include "nsmac/errors.hpp"
#include "nsmac/hhl.hpp"
#include "nsmac/matrixprod.hpp"
#include "nsmac/serialize.hpp"
#include "support/random_qt.hpp"

using namespace nsmac;
using json = nlohmann::ordered_json;

namespace {

json load_goldens() {
  std::ifstream in(std::string(NSMAC_TEST_DATA) + "/golden_f.json");
  REQUIRE(in.good());
  return json::parse(in);
}

}  // namespace

TEST_CASE("rational function encoding") {
  const QTRational q = QTRational::q(), t = QTRational::t();
  const QTRational r = q * (1 - t) / (1 - q * t);
  const json j = to_json(r);
  CHECK(j.dump() == R"({"num":[[1,1,"1/1"],[1,0,"-1/1"]],"den":[[1,1,"1/1"],[0,0,"-1/1"]]})");
  CHECK(qt_rational_from_json(j) == r);
  CHECK(to_json(QTRational(BigRational(3, 4))).dump() == R"({"num":[[0,0,"3/4"]],"den":[[0,0,"1/1"]]})");
  CHECK(to_json(QTRational(0L)).at("num").empty());
}

TEST_CASE("polynomial encoding") {
  const XPolynomial p = XPolynomial::variable(2, 2) + QTRational::monomial(0, -1) * XPolynomial::variable(2, 1);
  const json j = to_json(p);
  CHECK(j.at("nvars") == 2);
  REQUIRE(j.at("terms").size() == 2);
  CHECK(j.at("terms")[0].at("exps") == json::array({1, 0}));
  CHECK(xpolynomial_from_json(j) == p);
  CHECK(result_json(Composition({0, 1}), "hhl", p).at("mu") == json::array({0, 1}));
}

TEST_CASE("round trips are byte-exact") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const QTRational r = testing::random_qt_rational(rng);
    const json j = to_json(r);
    CHECK(qt_rational_from_json(j) == r);
    CHECK(to_json(qt_rational_from_json(json::parse(j.dump()))).dump() == j.dump());
  }
  for (const auto& mu : compositions_bounded(3, 2)) {
    const json j = to_json(f_hhl(mu));
    CHECK(to_json(xpolynomial_from_json(json::parse(j.dump()))).dump() == j.dump());
  }
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(qt_rational_from_json(json::parse(R"({"num": []})")), ParseError);
  CHECK_THROWS_AS(qt_rational_from_json(json::parse(R"({"num": [], "den": []})")), ParseError);
  CHECK_THROWS_AS(qt_polynomial_from_json(json::parse(R"([[0, 0, 1]])")), ParseError);
  CHECK_THROWS_AS(qt_polynomial_from_json(json::parse(R"([[-1, 0, "1/1"]])")), ParseError);
  CHECK_THROWS_AS(qt_polynomial_from_json(json::parse(R"([[0, 0, "x"]])")), ParseError);
  CHECK_THROWS_AS(xpolynomial_from_json(json::parse(R"({"nvars": 2, "terms": [{"exps": [1], "coeff": {"num": [], "den": [[0,0,"1/1"]]}}]})")), ParseError);
}

TEST_CASE("both routes reproduce the brute-force reference values") {
  const json goldens = load_goldens().at("goldens");
  CHECK(goldens.size() == 39);
  for (const auto& entry : goldens) {
    const Composition mu(entry.at("mu").get<std::vector<int>>());
    CAPTURE(mu.to_string());
    const XPolynomial expected = xpolynomial_from_json(entry.at("poly"));
    CHECK(f_hhl(mu) == expected);
    CHECK(f_matrix_product(mu) == expected);
  }
}
