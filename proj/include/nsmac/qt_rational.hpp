#pragma once

#include <string>

#include "nsmac/qt_polynomial.hpp"

namespace nsmac {

// Element of Q(q,t) in canonical form: num and den coprime, and the lex-leading
// term of den has coefficient 1. Equal values therefore compare equal member-wise.
// Laurent monomials such as t^-1 live in the denominator.
class QTRational {
 public:
  QTRational() : den_(1L) {}
  QTRational(long c) : num_(c), den_(1L) {}                           // NOLINT(google-explicit-constructor)
  QTRational(const BigRational& c) : num_(c), den_(1L) {}             // NOLINT(google-explicit-constructor)
  QTRational(QTPolynomial num) : num_(std::move(num)), den_(1L) {}    // NOLINT(google-explicit-constructor)
  QTRational(QTPolynomial num, QTPolynomial den);

  static QTRational q() { return QTPolynomial::q(); }
  static QTRational t() { return QTPolynomial::t(); }
  // c * q^qexp * t^texp with exponents of either sign.
  static QTRational monomial(int qexp, int texp, const BigRational& c = 1);

  const QTPolynomial& num() const { return num_; }
  const QTPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  QTRational operator-() const;
  QTRational inverse() const;
  QTRational pow(int e) const;

  QTRational& operator+=(const QTRational& b) { return *this = *this + b; }
  QTRational& operator-=(const QTRational& b) { return *this = *this - b; }
  QTRational& operator*=(const QTRational& b) { return *this = *this * b; }
  QTRational& operator/=(const QTRational& b) { return *this = *this / b; }
  friend QTRational operator+(const QTRational& a, const QTRational& b);
  friend QTRational operator-(const QTRational& a, const QTRational& b) { return a + (-b); }
  friend QTRational operator*(const QTRational& a, const QTRational& b);
  friend QTRational operator/(const QTRational& a, const QTRational& b) { return a * b.inverse(); }
  friend bool operator==(const QTRational&, const QTRational&) = default;

  // Throws PoleError when the denominator vanishes at the point.
  BigRational eval(const BigRational& q, const BigRational& t) const;
  // Substitutes q = 0; throws DivisionByZero if the denominator vanishes identically there.
  QTRational at_q_zero() const;

  std::string to_string() const;

 private:
  struct Reduced {};
  // num/den already coprime; only the leading coefficient of den is normalized.
  QTRational(QTPolynomial num, QTPolynomial den, Reduced);
  void normalize_leading();

  QTPolynomial num_;
  QTPolynomial den_;
};

enum class ArithOp { add, sub, mul, div };
QTRational field_arith(const QTRational& a, const QTRational& b, ArithOp op);
BigRational qt_eval(const QTRational& a, const BigRational& qval, const BigRational& tval);

}  // namespace nsmac
