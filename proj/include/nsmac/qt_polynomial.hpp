#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsmac/rational.hpp"

namespace nsmac {

struct QTTerm {
  int qexp = 0;
  int texp = 0;
  BigRational coeff;

  friend bool operator==(const QTTerm&, const QTTerm&) = default;
};

// Lex order on exponent pairs, q major and t minor.
inline bool lex_greater(int q1, int t1, int q2, int t2) { return q1 != q2 ? q1 > q2 : t1 > t2; }

// Polynomial in q and t with rational coefficients and nonnegative exponents.
// Terms are kept sorted lex-descending, so terms().front() is the leading term.
class QTPolynomial {
 public:
  QTPolynomial() = default;
  QTPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit QTPolynomial(const BigRational& constant);

  static QTPolynomial monomial(int qexp, int texp, const BigRational& coeff = 1);
  static QTPolynomial q() { return monomial(1, 0); }
  static QTPolynomial t() { return monomial(0, 1); }
  // Sorts, merges duplicates and drops zeros.
  static QTPolynomial from_terms(std::vector<QTTerm> terms);

  const std::vector<QTTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const QTTerm& leading() const;
  // Coefficient of the term with no q and no t.
  BigRational constant_term() const;

  int q_degree() const;
  int t_degree() const;
  int min_qexp() const;
  int min_texp() const;

  QTPolynomial operator-() const;
  QTPolynomial& operator+=(const QTPolynomial& other);
  QTPolynomial& operator-=(const QTPolynomial& other);
  QTPolynomial& operator*=(const QTPolynomial& other);
  friend QTPolynomial operator+(QTPolynomial a, const QTPolynomial& b) { return a += b; }
  friend QTPolynomial operator-(QTPolynomial a, const QTPolynomial& b) { return a -= b; }
  friend QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b);
  friend bool operator==(const QTPolynomial&, const QTPolynomial&) = default;

  QTPolynomial scaled(const BigRational& c) const;
  // Multiplies by c * q^dq * t^dt; the shift may be negative if every term stays nonnegative.
  QTPolynomial shifted(int dq, int dt, const BigRational& c = 1) const;
  QTPolynomial pow(int e) const;

  // Quotient if `divisor` divides this polynomial exactly.
  std::optional<QTPolynomial> try_divide(const QTPolynomial& divisor) const;
  // Throws InvariantViolation when the division is not exact.
  QTPolynomial divide_exact(const QTPolynomial& divisor) const;

  BigRational eval(const BigRational& q, const BigRational& t) const;
  QTPolynomial at_q_zero() const;

  std::string to_string() const;

 private:
  std::vector<QTTerm> terms_;
};

// Greatest common divisor with leading coefficient 1; rejects two zero inputs.
QTPolynomial qt_gcd(const QTPolynomial& a, const QTPolynomial& b);

}  // namespace nsmac
