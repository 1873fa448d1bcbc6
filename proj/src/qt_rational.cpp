#include "nsmac/qt_rational.hpp"

#include <algorithm>

#include "nsmac/errors.hpp"
#include "nsmac/format.hpp"

namespace nsmac {

namespace {

QTPolynomial monomial_gcd(const QTPolynomial& mono, const QTPolynomial& p) {
  const auto& m = mono.leading();
  return QTPolynomial::monomial(std::min(m.qexp, p.min_qexp()), std::min(m.texp, p.min_texp()));
}

QTPolynomial strip(const QTPolynomial& p, const QTPolynomial& mono) {
  const auto& m = mono.leading();
  if (m.qexp == 0 && m.texp == 0) return p;
  return p.shifted(-m.qexp, -m.texp);
}

}  // namespace

QTRational::QTRational(QTPolynomial num, QTPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = QTPolynomial(1L);
    return;
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(1 / den_.leading().coeff);
    den_ = QTPolynomial(1L);
    return;
  }
  if (den_.is_monomial() || num_.is_monomial()) {
    const QTPolynomial g = den_.is_monomial() ? monomial_gcd(den_, num_) : monomial_gcd(num_, den_);
    num_ = strip(num_, g);
    den_ = strip(den_, g);
  } else {
    const QTPolynomial g = qt_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
  }
  normalize_leading();
}

QTRational::QTRational(QTPolynomial num, QTPolynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) {
    den_ = QTPolynomial(1L);
    return;
  }
  normalize_leading();
}

void QTRational::normalize_leading() {
  const BigRational lc = den_.leading().coeff;
  if (lc != 1) {
    const BigRational inv = 1 / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

QTRational QTRational::monomial(int qexp, int texp, const BigRational& c) {
  if (c == 0) return {};
  return QTRational(QTPolynomial::monomial(std::max(qexp, 0), std::max(texp, 0), c),
                    QTPolynomial::monomial(std::max(-qexp, 0), std::max(-texp, 0)), Reduced{});
}

QTRational QTRational::operator-() const {
  QTRational r = *this;
  r.num_ = -r.num_;
  return r;
}

QTRational QTRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return QTRational(den_, num_, Reduced{});
}

QTRational QTRational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return QTRational(num_.pow(e), den_.pow(e), Reduced{});
}

QTRational operator+(const QTRational& a, const QTRational& b) {
  using R = QTRational::Reduced;
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return QTRational(a.num_ + b.num_, a.den_, R{});
    return QTRational(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_monomial() && b.den_.is_monomial()) {
    const auto& x = a.den_.leading();
    const auto& y = b.den_.leading();
    const int lq = std::max(x.qexp, y.qexp);
    const int lt = std::max(x.texp, y.texp);
    QTPolynomial num = a.num_.shifted(lq - x.qexp, lt - x.texp) + b.num_.shifted(lq - y.qexp, lt - y.texp);
    return QTRational(std::move(num), QTPolynomial::monomial(lq, lt));
  }
  const QTPolynomial g = qt_gcd(a.den_, b.den_);
  if (g.is_one()) return QTRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, R{});
  const QTPolynomial ad = a.den_.divide_exact(g);
  const QTPolynomial bd = b.den_.divide_exact(g);
  QTPolynomial num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return {};
  const QTPolynomial g2 = qt_gcd(num, g);
  if (g2.is_one()) return QTRational(std::move(num), ad * b.den_, R{});
  return QTRational(num.divide_exact(g2), ad * b.den_.divide_exact(g2), R{});
}

QTRational operator*(const QTRational& a, const QTRational& b) {
  using R = QTRational::Reduced;
  if (a.is_zero() || b.is_zero()) return {};
  if (a.num_.is_constant() && a.den_.is_one()) return QTRational(b.num_.scaled(a.num_.leading().coeff), b.den_, R{});
  if (b.num_.is_constant() && b.den_.is_one()) return QTRational(a.num_.scaled(b.num_.leading().coeff), a.den_, R{});
  if (a.den_.is_monomial() && b.den_.is_monomial()) return QTRational(a.num_ * b.num_, a.den_ * b.den_);
  const QTPolynomial g1 = qt_gcd(a.num_, b.den_);
  const QTPolynomial g2 = qt_gcd(b.num_, a.den_);
  const QTPolynomial an = g1.is_one() ? a.num_ : a.num_.divide_exact(g1);
  const QTPolynomial bd = g1.is_one() ? b.den_ : b.den_.divide_exact(g1);
  const QTPolynomial bn = g2.is_one() ? b.num_ : b.num_.divide_exact(g2);
  const QTPolynomial ad = g2.is_one() ? a.den_ : a.den_.divide_exact(g2);
  return QTRational(an * bn, ad * bd, R{});
}

BigRational QTRational::eval(const BigRational& q, const BigRational& t) const {
  const BigRational d = den_.eval(q, t);
  if (d == 0) throw PoleError(q, t);
  return num_.eval(q, t) / d;
}

QTRational QTRational::at_q_zero() const {
  QTPolynomial d = den_.at_q_zero();
  if (d.is_zero()) throw DivisionByZero();
  return QTRational(num_.at_q_zero(), std::move(d));
}

std::string QTRational::to_string() const { return format_qt(*this, Style::text); }

QTRational field_arith(const QTRational& a, const QTRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

BigRational qt_eval(const QTRational& a, const BigRational& qval, const BigRational& tval) {
  return a.eval(qval, tval);
}

}  // namespace nsmac
