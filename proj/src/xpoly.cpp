#include "nsmac/xpoly.hpp"

#include <numeric>
#include <string>

#include "nsmac/errors.hpp"

namespace nsmac {

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

XTerm operator*(const XTerm& a, const XTerm& b) {
  if (a.exps.size() != b.exps.size()) throw DimensionMismatch("terms over different alphabets");
  XTerm r{a.exps, a.coeff * b.coeff};
  for (size_t k = 0; k < r.exps.size(); ++k) r.exps[k] += b.exps[k];
  return r;
}

XPolynomial::XPolynomial(const XTerm& term) : nvars_(static_cast<int>(term.exps.size())) {
  add_term(term.exps, term.coeff);
}

XPolynomial XPolynomial::constant(int nvars, const QTRational& c) {
  return monomial(nvars, Exponent(static_cast<size_t>(nvars), 0), c);
}

XPolynomial XPolynomial::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::out_of_range("variable index " + std::to_string(i));
  Exponent e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(i - 1)] = 1;
  return monomial(nvars, e);
}

XPolynomial XPolynomial::monomial(int nvars, const Exponent& e, const QTRational& c) {
  XPolynomial p(nvars);
  p.add_term(e, c);
  return p;
}

QTRational XPolynomial::coefficient(const Exponent& e) const {
  if (static_cast<int>(e.size()) != nvars_) throw DimensionMismatch("exponent length differs from alphabet size");
  auto it = terms_.find(e);
  return it == terms_.end() ? QTRational() : it->second;
}

void XPolynomial::add_term(const Exponent& e, const QTRational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw DimensionMismatch("exponent length differs from alphabet size");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void XPolynomial::check_compatible(const XPolynomial& other) const {
  if (nvars_ != other.nvars_)
    throw DimensionMismatch("alphabet sizes " + std::to_string(nvars_) + " and " + std::to_string(other.nvars_));
}

XPolynomial XPolynomial::operator-() const {
  XPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

XPolynomial& XPolynomial::operator-=(const XPolynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
  a.check_compatible(b);
  XPolynomial r(a.nvars_);
  Exponent e(static_cast<size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

XPolynomial operator*(const QTRational& c, const XPolynomial& p) {
  if (c.is_zero()) return XPolynomial(p.nvars_);
  XPolynomial r = p;
  for (auto& [e, x] : r.terms_) x = c * x;
  return r;
}

XPolynomial XPolynomial::substitute_permutation(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != nvars_) throw DimensionMismatch("permutation length differs from alphabet size");
  XPolynomial r(nvars_);
  Exponent e(static_cast<size_t>(nvars_));
  for (const auto& [old, c] : terms_) {
    for (size_t k = 0; k < old.size(); ++k) e[static_cast<size_t>(perm[k])] = old[k];
    r.add_term(e, c);
  }
  return r;
}

XPolynomial XPolynomial::scale_variable(int i, const QTRational& c) const {
  if (i < 1 || i > nvars_) throw std::out_of_range("variable index " + std::to_string(i));
  XPolynomial r(nvars_);
  for (const auto& [e, x] : terms_) r.add_term(e, x * c.pow(e[static_cast<size_t>(i - 1)]));
  return r;
}

XPolynomial XPolynomial::reverse_alphabet() const {
  std::vector<int> perm(static_cast<size_t>(nvars_));
  for (int k = 0; k < nvars_; ++k) perm[static_cast<size_t>(k)] = nvars_ - 1 - k;
  return substitute_permutation(perm);
}

QTRational coefficient_of(const XPolynomial& p, const Exponent& e) { return p.coefficient(e); }

XPolynomial xp_arith(const XPolynomial& a, const XPolynomial& b, XOp op) {
  switch (op) {
    case XOp::add:
      return a + b;
    case XOp::sub:
      return a - b;
    case XOp::mul:
      return a * b;
  }
  throw std::invalid_argument("unknown operation");
}

namespace {

void check_adjacent_index(const XPolynomial& p, int i) {
  if (i < 1 || i >= p.nvars()) throw std::out_of_range("adjacent index " + std::to_string(i) + " out of range");
}

}  // namespace

XPolynomial swap_vars(const XPolynomial& p, int i) {
  check_adjacent_index(p, i);
  std::vector<int> perm(static_cast<size_t>(p.nvars()));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[static_cast<size_t>(i - 1)], perm[static_cast<size_t>(i)]);
  return p.substitute_permutation(perm);
}

XPolynomial cyclic_omega(const XPolynomial& p, bool q_shift) {
  const int n = p.nvars();
  XPolynomial r(n);
  if (n == 0) return p;
  Exponent e(static_cast<size_t>(n));
  for (const auto& [a, c] : p.terms()) {
    e[0] = a.back();
    for (int k = 1; k < n; ++k) e[static_cast<size_t>(k)] = a[static_cast<size_t>(k - 1)];
    r.add_term(e, q_shift && a.back() > 0 ? c * QTRational::monomial(a.back(), 0) : c);
  }
  return r;
}

XPolynomial divide_by_difference(const XPolynomial& p, int i) {
  check_adjacent_index(p, i);
  const auto u = static_cast<size_t>(i - 1);  // x_i
  const auto w = static_cast<size_t>(i);      // x_{i+1}
  using Row = std::map<int, QTRational>;      // exponent of x_{i+1} -> coefficient
  std::map<Exponent, std::map<int, Row>> groups;
  for (const auto& [e, c] : p.terms()) {
    Exponent rest = e;
    rest[u] = 0;
    rest[w] = 0;
    groups[rest][e[u]][e[w]] = c;
  }

  // Synthetic division by (u - w) in the variable u, coefficients in w.
  XPolynomial quotient(p.nvars());
  for (auto& [rest, rows] : groups) {
    Row carry;
    const int top = rows.rbegin()->first;
    for (int k = top; k >= 1; --k) {
      Row next;
      if (auto it = rows.find(k); it != rows.end()) next = it->second;
      for (const auto& [b, c] : carry) {
        auto [pos, inserted] = next.try_emplace(b + 1, c);
        if (!inserted) pos->second += c;
      }
      std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
      carry = std::move(next);
      Exponent e = rest;
      e[u] = k - 1;
      for (const auto& [b, c] : carry) {
        e[w] = b;
        quotient.add_term(e, c);
      }
    }
    Row remainder;
    if (auto it = rows.find(0); it != rows.end()) remainder = it->second;
    for (const auto& [b, c] : carry) {
      auto [pos, inserted] = remainder.try_emplace(b + 1, c);
      if (!inserted) pos->second += c;
    }
    for (const auto& [b, c] : remainder)
      if (!c.is_zero()) throw InvariantViolation("polynomial is not divisible by x_i - x_{i+1}");
  }
  return quotient;
}

XPolynomial divided_difference_div(const XPolynomial& p, int i) { return divide_by_difference(p - swap_vars(p, i), i); }

}  // namespace nsmac
