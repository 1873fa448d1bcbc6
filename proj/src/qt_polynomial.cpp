#include "nsmac/qt_polynomial.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "nsmac/errors.hpp"
#include "nsmac/format.hpp"

namespace nsmac {

namespace {

bool term_greater(const QTTerm& a, const QTTerm& b) { return lex_greater(a.qexp, a.texp, b.qexp, b.texp); }

using ExpKey = std::pair<int, int>;
using SparseMap = std::map<ExpKey, BigRational, std::greater<>>;

std::vector<QTTerm> collect(const SparseMap& m) {
  std::vector<QTTerm> out;
  out.reserve(m.size());
  for (const auto& [key, c] : m)
    if (c != 0) out.push_back({key.first, key.second, c});
  return out;
}

}  // namespace

QTPolynomial::QTPolynomial(long constant) {
  if (constant != 0) terms_.push_back({0, 0, BigRational(constant)});
}

QTPolynomial::QTPolynomial(const BigRational& constant) {
  if (constant != 0) {
    terms_.push_back({0, 0, constant});
    terms_.back().coeff.canonicalize();
  }
}

QTPolynomial QTPolynomial::monomial(int qexp, int texp, const BigRational& coeff) {
  if (qexp < 0 || texp < 0) throw std::invalid_argument("QTPolynomial exponents must be nonnegative");
  QTPolynomial p;
  if (coeff != 0) {
    p.terms_.push_back({qexp, texp, coeff});
    p.terms_.back().coeff.canonicalize();
  }
  return p;
}

QTPolynomial QTPolynomial::from_terms(std::vector<QTTerm> terms) {
  for (const auto& term : terms)
    if (term.qexp < 0 || term.texp < 0) throw std::invalid_argument("QTPolynomial exponents must be nonnegative");
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& term : terms) term.coeff.canonicalize();
  QTPolynomial p;
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().qexp == term.qexp && p.terms_.back().texp == term.texp) {
      p.terms_.back().coeff += term.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (term.coeff != 0) {
      p.terms_.push_back(std::move(term));
    }
  }
  return p;
}

bool QTPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].qexp == 0 && terms_[0].texp == 0);
}

bool QTPolynomial::is_one() const { return is_constant() && !terms_.empty() && terms_[0].coeff == 1; }

const QTTerm& QTPolynomial::leading() const {
  if (terms_.empty()) throw InvariantViolation("leading term of the zero polynomial");
  return terms_.front();
}

BigRational QTPolynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().qexp == 0 && terms_.back().texp == 0) return terms_.back().coeff;
  return 0;
}

int QTPolynomial::q_degree() const { return terms_.empty() ? 0 : terms_.front().qexp; }

int QTPolynomial::t_degree() const {
  int d = 0;
  for (const auto& term : terms_) d = std::max(d, term.texp);
  return d;
}

int QTPolynomial::min_qexp() const { return terms_.empty() ? 0 : terms_.back().qexp; }

int QTPolynomial::min_texp() const {
  if (terms_.empty()) return 0;
  int d = terms_.front().texp;
  for (const auto& term : terms_) d = std::min(d, term.texp);
  return d;
}

QTPolynomial QTPolynomial::operator-() const {
  QTPolynomial r = *this;
  for (auto& term : r.terms_) term.coeff = -term.coeff;
  return r;
}

QTPolynomial& QTPolynomial::operator+=(const QTPolynomial& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  std::vector<QTTerm> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && term_greater(*a, *b))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || term_greater(*b, *a)) {
      merged.push_back(*b++);
    } else {
      BigRational c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({a->qexp, a->texp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

QTPolynomial& QTPolynomial::operator-=(const QTPolynomial& other) { return *this += -other; }

QTPolynomial& QTPolynomial::operator*=(const QTPolynomial& other) { return *this = *this * other; }

QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].qexp, b.terms_[0].texp, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].qexp, a.terms_[0].texp, a.terms_[0].coeff);

  const int qlo = a.min_qexp() + b.min_qexp();
  const int tlo = a.min_texp() + b.min_texp();
  const int qspan = a.q_degree() + b.q_degree() - qlo + 1;
  const int tspan = a.t_degree() + b.t_degree() - tlo + 1;
  const long cells = static_cast<long>(qspan) * tspan;

  QTPolynomial r;
  if (cells <= (1L << 20)) {
    std::vector<BigRational> dense(static_cast<size_t>(cells));
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) {
        const long idx = static_cast<long>(x.qexp + y.qexp - qlo) * tspan + (x.texp + y.texp - tlo);
        dense[static_cast<size_t>(idx)] += x.coeff * y.coeff;
      }
    for (int dq = qspan - 1; dq >= 0; --dq)
      for (int dt = tspan - 1; dt >= 0; --dt) {
        auto& c = dense[static_cast<size_t>(static_cast<long>(dq) * tspan + dt)];
        if (c != 0) r.terms_.push_back({dq + qlo, dt + tlo, std::move(c)});
      }
    return r;
  }
  SparseMap acc;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) acc[{x.qexp + y.qexp, x.texp + y.texp}] += x.coeff * y.coeff;
  r.terms_ = collect(acc);
  return r;
}

QTPolynomial QTPolynomial::scaled(const BigRational& c) const {
  if (c == 0) return {};
  QTPolynomial r = *this;
  for (auto& term : r.terms_) term.coeff *= c;
  return r;
}

QTPolynomial QTPolynomial::shifted(int dq, int dt, const BigRational& c) const {
  if (c == 0) return {};
  QTPolynomial r = *this;
  for (auto& term : r.terms_) {
    term.qexp += dq;
    term.texp += dt;
    if (term.qexp < 0 || term.texp < 0) throw InvariantViolation("shift produced a negative exponent");
    if (c != 1) term.coeff *= c;
  }
  return r;
}

QTPolynomial QTPolynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of a polynomial");
  QTPolynomial result(1L);
  QTPolynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::optional<QTPolynomial> QTPolynomial::try_divide(const QTPolynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (is_zero()) return QTPolynomial{};
  const QTTerm& lead = divisor.leading();
  if (divisor.terms_.size() == 1) {
    QTPolynomial r = *this;
    const BigRational inv = 1 / lead.coeff;
    for (auto& term : r.terms_) {
      term.qexp -= lead.qexp;
      term.texp -= lead.texp;
      if (term.qexp < 0 || term.texp < 0) return std::nullopt;
      term.coeff *= inv;
    }
    return r;
  }
  if (q_degree() < divisor.q_degree() || t_degree() < divisor.t_degree()) return std::nullopt;

  SparseMap rem;
  for (const auto& term : terms_) rem.emplace(ExpKey{term.qexp, term.texp}, term.coeff);
  std::vector<QTTerm> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    const int dq = it->first.first - lead.qexp;
    const int dt = it->first.second - lead.texp;
    if (dq < 0 || dt < 0) return std::nullopt;
    const BigRational c = it->second / lead.coeff;
    rem.erase(it);
    for (size_t k = 1; k < divisor.terms_.size(); ++k) {
      const auto& d = divisor.terms_[k];
      const ExpKey key{d.qexp + dq, d.texp + dt};
      auto [pos, inserted] = rem.try_emplace(key);
      pos->second -= c * d.coeff;
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.push_back({dq, dt, c});
  }
  QTPolynomial r;
  r.terms_ = std::move(quotient);  // produced in decreasing lex order
  return r;
}

QTPolynomial QTPolynomial::divide_exact(const QTPolynomial& divisor) const {
  auto q = try_divide(divisor);
  if (!q) throw InvariantViolation("inexact polynomial division: " + to_string() + " / " + divisor.to_string());
  return *std::move(q);
}

BigRational QTPolynomial::eval(const BigRational& q, const BigRational& t) const {
  BigRational qc = q;
  BigRational tc = t;
  qc.canonicalize();
  tc.canonicalize();
  BigRational sum = 0;
  for (const auto& term : terms_) sum += term.coeff * rational_pow(qc, term.qexp) * rational_pow(tc, term.texp);
  return sum;
}

QTPolynomial QTPolynomial::at_q_zero() const {
  QTPolynomial r;
  for (const auto& term : terms_)
    if (term.qexp == 0) r.terms_.push_back(term);
  return r;
}

std::string QTPolynomial::to_string() const { return format_qt(*this, Style::text); }

// ---------------------------------------------------------------------------
// gcd over Z[inner][outer] by primitive polynomial remainder sequences

namespace {

using ZPoly = std::vector<mpz_class>;  // ascending coefficients, no trailing zeros
using BPoly = std::vector<ZPoly>;      // indexed by outer degree, no trailing zero entries

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }
int degree(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

mpz_class zcontent(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Primitive part with positive leading coefficient.
ZPoly zprimitive(ZPoly p) {
  if (p.empty()) return p;
  mpz_class c = zcontent(p);
  if (p.back() < 0) c = -c;
  if (c != 1)
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return p;
}

std::optional<ZPoly> zdivide(ZPoly a, const ZPoly& b) {
  if (a.empty()) return ZPoly{};
  const int db = degree(b);
  if (degree(a) < db) return std::nullopt;
  ZPoly q(static_cast<size_t>(degree(a) - db + 1));
  for (int k = degree(a) - db; k >= 0; --k) {
    mpz_class& lead = a[static_cast<size_t>(k + db)];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_divexact(q[static_cast<size_t>(k)].get_mpz_t(), lead.get_mpz_t(), b.back().get_mpz_t());
    for (int i = 0; i <= db; ++i)
      mpz_submul(a[static_cast<size_t>(k + i)].get_mpz_t(), q[static_cast<size_t>(k)].get_mpz_t(),
                 b[static_cast<size_t>(i)].get_mpz_t());
  }
  for (const auto& c : a)
    if (c != 0) return std::nullopt;
  trim(q);
  return q;
}

ZPoly zprem(ZPoly a, const ZPoly& b) {
  const int db = degree(b);
  while (!a.empty() && degree(a) >= db) {
    const int d = degree(a) - db;
    const mpz_class la = a.back();
    for (auto& c : a) c *= b.back();
    for (int i = 0; i <= db; ++i)
      mpz_submul(a[static_cast<size_t>(d + i)].get_mpz_t(), la.get_mpz_t(), b[static_cast<size_t>(i)].get_mpz_t());
    trim(a);
  }
  return a;
}

// gcd in Z[x], positive leading coefficient.
ZPoly zgcd(ZPoly a, ZPoly b) {
  if (a.empty()) std::swap(a, b);
  if (b.empty()) {
    if (!a.empty() && a.back() < 0)
      for (auto& c : a) c = -c;
    return a;
  }
  mpz_class g;
  const mpz_class ca = zcontent(a);
  const mpz_class cb = zcontent(b);
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = zprimitive(std::move(a));
  b = zprimitive(std::move(b));
  if (degree(a) < degree(b)) std::swap(a, b);
  ZPoly result;
  while (true) {
    if (b.empty()) {
      result = std::move(a);
      break;
    }
    if (degree(b) == 0) {
      result = {1};
      break;
    }
    ZPoly r = zprem(std::move(a), b);
    a = std::move(b);
    b = zprimitive(std::move(r));
  }
  for (auto& c : result) c *= g;
  return result;
}

ZPoly bcontent(const BPoly& p) {
  ZPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = zgcd(std::move(g), c);
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

BPoly bdivide_coeffs(BPoly p, const ZPoly& c) {
  if (c.size() == 1 && c[0] == 1) return p;
  for (auto& x : p) {
    if (x.empty()) continue;
    auto q = zdivide(std::move(x), c);
    if (!q) throw InvariantViolation("content does not divide coefficient");
    x = std::move(*q);
  }
  return p;
}

BPoly bprimitive(BPoly p) {
  if (p.empty()) return p;
  ZPoly c = bcontent(p);
  if (p.back().back() < 0)
    for (auto& x : c) x = -x;
  return bdivide_coeffs(std::move(p), c);
}

BPoly bprem(BPoly a, const BPoly& b) {
  const int db = degree(b);
  while (!a.empty() && degree(a) >= db) {
    const int d = degree(a) - db;
    const ZPoly la = a.back();
    for (auto& c : a) c = zmul(c, b.back());
    for (int i = 0; i <= db; ++i) {
      auto& slot = a[static_cast<size_t>(d + i)];
      slot = zsub(std::move(slot), zmul(la, b[static_cast<size_t>(i)]));
    }
    trim(a);
  }
  return a;
}

BPoly bgcd_primitive(BPoly a, BPoly b) {
  if (degree(a) < degree(b)) std::swap(a, b);
  while (true) {
    if (b.empty()) return bprimitive(std::move(a));
    if (degree(b) == 0) return {{1}};
    BPoly r = bprem(std::move(a), b);
    a = std::move(b);
    b = bprimitive(std::move(r));
  }
}

mpz_class denominator_lcm(const QTPolynomial& p) {
  mpz_class l = 1;
  for (const auto& term : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), term.coeff.get_den_mpz_t());
  return l;
}

// Assumes the monomial content has already been removed.
BPoly to_bpoly(const QTPolynomial& p, bool outer_is_t) {
  const mpz_class l = denominator_lcm(p);
  const int outer_deg = outer_is_t ? p.t_degree() : p.q_degree();
  const int inner_deg = outer_is_t ? p.q_degree() : p.t_degree();
  BPoly r(static_cast<size_t>(outer_deg + 1), ZPoly(static_cast<size_t>(inner_deg + 1)));
  for (const auto& term : p.terms()) {
    const int o = outer_is_t ? term.texp : term.qexp;
    const int i = outer_is_t ? term.qexp : term.texp;
    mpz_class v = term.coeff.get_num() * (l / term.coeff.get_den());
    r[static_cast<size_t>(o)][static_cast<size_t>(i)] = std::move(v);
  }
  for (auto& c : r) trim(c);
  trim(r);
  return r;
}

QTPolynomial from_bpoly(const BPoly& p, bool outer_is_t) {
  std::vector<QTTerm> terms;
  for (size_t o = 0; o < p.size(); ++o)
    for (size_t i = 0; i < p[o].size(); ++i) {
      if (p[o][i] == 0) continue;
      const int oi = static_cast<int>(o);
      const int ii = static_cast<int>(i);
      terms.push_back({outer_is_t ? ii : oi, outer_is_t ? oi : ii, BigRational(p[o][i])});
    }
  return QTPolynomial::from_terms(std::move(terms));
}

QTPolynomial monic(const QTPolynomial& p) {
  const BigRational& lc = p.leading().coeff;
  if (lc == 1) return p;
  return p.scaled(1 / lc);
}

}  // namespace

QTPolynomial qt_gcd(const QTPolynomial& a, const QTPolynomial& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);

  const int mq = std::min(a.min_qexp(), b.min_qexp());
  const int mt = std::min(a.min_texp(), b.min_texp());
  const QTPolynomial mono = QTPolynomial::monomial(mq, mt);
  if (a.is_monomial() || b.is_monomial()) return mono;
  if (a == b) return monic(a);

  const QTPolynomial ar = a.shifted(-a.min_qexp(), -a.min_texp());
  const QTPolynomial br = b.shifted(-b.min_qexp(), -b.min_texp());
  if (ar.is_constant() || br.is_constant()) return mono;

  const int tdeg = std::max(ar.t_degree(), br.t_degree());
  const int qdeg = std::max(ar.q_degree(), br.q_degree());
  const bool outer_is_t = tdeg <= qdeg;

  BPoly pa = to_bpoly(ar, outer_is_t);
  BPoly pb = to_bpoly(br, outer_is_t);
  const ZPoly ca = bcontent(pa);
  const ZPoly cb = bcontent(pb);
  const ZPoly cg = zgcd(ca, cb);
  BPoly g = bgcd_primitive(bdivide_coeffs(std::move(pa), ca), bdivide_coeffs(std::move(pb), cb));
  for (auto& c : g) c = zmul(c, cg);
  return monic(from_bpoly(g, outer_is_t) * mono);
}

}  // namespace nsmac
