#include <doctest.h>

#include <random>

#include "nsmac/errors.hpp"
#include "nsmac/format.hpp"
#include "nsmac/qt_rational.hpp"
#include "support/random_qt.hpp"

using namespace nsmac;

namespace {

const QTPolynomial one(1L);
const QTPolynomial q = QTPolynomial::q();
const QTPolynomial t = QTPolynomial::t();

QTPolynomial product_of(const std::vector<QTPolynomial>& factors, const std::vector<int>& mult) {
  QTPolynomial p(1L);
  for (size_t k = 0; k < factors.size(); ++k) p *= factors[k].pow(mult[k]);
  return p;
}

}  // namespace

TEST_CASE("rationals parse and print as a/b") {
  CHECK(parse_rational("6/4") == BigRational(3, 2));
  CHECK(parse_rational("-7") == BigRational(-7));
  CHECK(fraction_string(BigRational(-3, 6)) == "-1/2");
  CHECK(fraction_string(BigRational(5)) == "5/1");
  CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZero);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("polynomial basics") {
  const QTPolynomial p = one - q * t;
  CHECK(p.terms().front().qexp == 1);
  CHECK(p.leading().coeff == -1);
  CHECK((p * (one + q * t)) == one - q.pow(2) * t.pow(2));
  CHECK((p - p).is_zero());
  CHECK((one + q * t).pow(2) == one + (q * t).scaled(2) + q.pow(2) * t.pow(2));
  CHECK((one - q.pow(2) * t.pow(2)).divide_exact(p) == one + q * t);
  CHECK_FALSE((one + q).try_divide(p).has_value());
  CHECK_THROWS_AS((one + q).divide_exact(p), InvariantViolation);
}

TEST_CASE("field arithmetic examples") {
  const QTRational a(q, one - t);
  const QTRational b(q * t, one - t);
  CHECK(field_arith(a, b, ArithOp::add) == QTRational(q * (one + t), one - t));

  const QTRational x(one - q * t);
  CHECK(field_arith(x, x.inverse(), ArithOp::mul).is_one());

  const QTRational r(one - q.pow(2) * t.pow(2), one - q * t);
  CHECK(r == QTRational(one + q * t));
  CHECK(r.is_polynomial());

  CHECK_THROWS_AS(field_arith(a, QTRational(), ArithOp::div), DivisionByZero);
  CHECK_THROWS_AS(QTRational(one, QTPolynomial()), DivisionByZero);
}

TEST_CASE("canonical denominators have leading coefficient one") {
  const QTRational r(q.scaled(3), (one - q * t).scaled(-2));
  CHECK(r.den().leading().coeff == 1);
  CHECK(r.den() == q * t - one);
  CHECK(r.num() == q.scaled(BigRational(3, 2)));
  // Laurent monomials move to the denominator
  const QTRational tinv = QTRational::monomial(1, -2);
  CHECK(tinv.num() == q);
  CHECK(tinv.den() == t.pow(2));
  CHECK((tinv * QTRational::t().pow(2)) == QTRational::q());
}

TEST_CASE("gcd examples") {
  CHECK(qt_gcd(one - q * t, one - q * t) == q * t - one);
  CHECK(qt_gcd(one - q.pow(2) * t.pow(2), one - q * t) == q * t - one);
  CHECK(qt_gcd(q, t).is_one());
  CHECK(qt_gcd(q.pow(2) * t, q * t.pow(3)) == q * t);
  CHECK(qt_gcd(QTPolynomial(), one + q) == one + q);
  CHECK_THROWS(qt_gcd(QTPolynomial(), QTPolynomial()));
}

TEST_CASE("gcd of products of distinct irreducibles matches the minimum multiplicities") {
  const std::vector<QTPolynomial> irreducible = {
      one - q, one - t, one - q * t, one + q * t, one - q * t.pow(2), q - t, one + q + t, q.pow(2) - t.pow(3), t,
  };
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> mult(0, 2);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<int> ma(irreducible.size()), mb(irreducible.size()), mg(irreducible.size());
    for (size_t k = 0; k < irreducible.size(); ++k) {
      ma[k] = mult(rng);
      mb[k] = mult(rng);
      mg[k] = std::min(ma[k], mb[k]);
    }
    const QTPolynomial a = product_of(irreducible, ma).scaled(BigRational(3, 5));
    const QTPolynomial b = product_of(irreducible, mb).scaled(-7);
    const QTPolynomial expected = product_of(irreducible, mg);
    const QTPolynomial g = qt_gcd(a, b);
    CHECK(g.leading().coeff == 1);
    CHECK(g == expected.scaled(1 / expected.leading().coeff));
  }
}

TEST_CASE("evaluation") {
  const QTRational r(q * (one - t), one - q * t);
  CHECK(qt_eval(r, 2, 3) == BigRational(4, 5));
  CHECK(qt_eval(QTRational(1), BigRational(17, 3), -9) == 1);
  const QTRational pole(one, one - q * t);
  try {
    (void)qt_eval(pole, 1, 1);
    FAIL("expected a pole");
  } catch (const PoleError& e) {
    CHECK(e.qval == 1);
    CHECK(e.tval == 1);
  }
}

TEST_CASE("q = 0 substitution") {
  const QTRational r(q * (one - t) + t, one - q * t);
  CHECK(r.at_q_zero() == QTRational(t));
  CHECK_THROWS_AS(QTRational(one, q).at_q_zero(), DivisionByZero);
}

TEST_CASE("formatting") {
  const QTRational r(q * (one - t), one - q * t);
  CHECK(format_qt(r, Style::latex) == "\\frac{q(1-t)}{1-qt}");
  CHECK(format_qt(r, Style::text) == "q*(1 - t)/(1 - q*t)");
  CHECK(format_qt(QTRational::monomial(0, -1), Style::text) == "1/t");
  CHECK(format_qt(QTRational(t - one), Style::text) == "-(1 - t)");
  CHECK(format_qt(QTRational(BigRational(-1, 2)), Style::latex) == "-\\frac{1}{2}");
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const QTRational a = testing::random_qt_rational(rng);
    const QTRational b = testing::random_qt_rational(rng);
    const QTRational c = testing::random_qt_rational(rng);
    REQUIRE(((a + b) + c) == (a + (b + c)));
    REQUIRE(((a * b) * c) == (a * (b * c)));
    REQUIRE((a * (b + c)) == (a * b + a * c));
    REQUIRE((a - a).is_zero());
  }
}

TEST_CASE("scaling numerator and denominator by a common factor leaves the canonical form unchanged") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const QTPolynomial a = testing::random_qt_polynomial(rng);
    const QTPolynomial b = testing::random_nonzero_qt_polynomial(rng);
    const QTPolynomial c = testing::random_nonzero_qt_polynomial(rng);
    const QTRational x(a, b);
    const QTRational y(a * c, b * c);
    REQUIRE(x.num() == y.num());
    REQUIRE(x.den() == y.den());
  }
}

TEST_CASE("evaluation is multiplicative away from poles") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coord(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const QTRational r = testing::random_qt_rational(rng);
    const QTRational s = testing::random_qt_rational(rng);
    const QTRational rs = r * s;
    int used = 0;
    while (used < 3) {
      const BigRational qv(coord(rng), 7);
      const BigRational tv(coord(rng), 5);
      try {
        const BigRational lhs = qt_eval(rs, qv, tv);
        const BigRational rhs = qt_eval(r, qv, tv) * qt_eval(s, qv, tv);
        REQUIRE(lhs == rhs);
        ++used;
      } catch (const PoleError&) {
      }
    }
  }
}
