#pragma once

#include <map>
#include <vector>

#include "nsmac/qt_rational.hpp"

namespace nsmac {

using Exponent = std::vector<int>;

// Graded lex, larger first: total degree, then lex with x1 most significant.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// A single term c * x^exps.
struct XTerm {
  Exponent exps;
  QTRational coeff;

  bool is_zero() const { return coeff.is_zero(); }
  friend bool operator==(const XTerm&, const XTerm&) = default;
};

XTerm operator*(const XTerm& a, const XTerm& b);

// Polynomial in x_1..x_n over Q(q,t). Variables are 1-based in the public interface.
class XPolynomial {
 public:
  using TermMap = std::map<Exponent, QTRational, GradedLexGreater>;

  explicit XPolynomial(int nvars = 0) : nvars_(nvars) {}
  XPolynomial(const XTerm& term);  // NOLINT(google-explicit-constructor)

  static XPolynomial constant(int nvars, const QTRational& c);
  static XPolynomial variable(int nvars, int i);
  static XPolynomial monomial(int nvars, const Exponent& e, const QTRational& c = 1);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  QTRational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const QTRational& c);

  XPolynomial operator-() const;
  XPolynomial& operator+=(const XPolynomial& other);
  XPolynomial& operator-=(const XPolynomial& other);
  friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { return a += b; }
  friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { return a -= b; }
  friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b);
  friend XPolynomial operator*(const QTRational& c, const XPolynomial& p);
  friend bool operator==(const XPolynomial&, const XPolynomial&) = default;

  // Applies fn to every coefficient, dropping terms that become zero.
  template <class Fn>
  XPolynomial map_coefficients(Fn&& fn) const {
    XPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
  }

  // x_k -> x_{perm[k]} for k = 1..n; perm is given 0-based as perm[k-1] = target-1.
  XPolynomial substitute_permutation(const std::vector<int>& perm) const;
  // x_i -> c * x_i.
  XPolynomial scale_variable(int i, const QTRational& c) const;
  // x_i -> x_{n+1-i}.
  XPolynomial reverse_alphabet() const;

 private:
  void check_compatible(const XPolynomial& other) const;

  int nvars_ = 0;
  TermMap terms_;
};

QTRational coefficient_of(const XPolynomial& p, const Exponent& e);

enum class XOp { add, sub, mul };
XPolynomial xp_arith(const XPolynomial& a, const XPolynomial& b, XOp op);

// Exchanges x_i and x_{i+1}.
XPolynomial swap_vars(const XPolynomial& p, int i);

// (omega h)(x_1..x_n) = h(x_2, ..., x_n, q x_1). Without the q shift this is a plain rotation.
XPolynomial cyclic_omega(const XPolynomial& p, bool q_shift = true);

// p / (x_i - x_{i+1}); throws InvariantViolation on a nonzero remainder.
XPolynomial divide_by_difference(const XPolynomial& p, int i);

// (p - s_i p) / (x_i - x_{i+1}).
XPolynomial divided_difference_div(const XPolynomial& p, int i);

}  // namespace nsmac
