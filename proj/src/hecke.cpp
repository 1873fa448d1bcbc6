#include "nsmac/hecke.hpp"

#include <random>
#include <sstream>

#include "nsmac/errors.hpp"
#include "nsmac/format.hpp"

namespace nsmac {

namespace {

void check_index(int i, int hi) {
  if (i < 1 || i > hi) throw std::out_of_range("operator index " + std::to_string(i) + " outside 1.." + std::to_string(hi));
}

// a x_i + b x_{i+1}
XPolynomial linear_form(int n, int i, const QTRational& a, const QTRational& b) {
  return a * XPolynomial::variable(n, i) + b * XPolynomial::variable(n, i + 1);
}

XPolynomial hecke_step(const XPolynomial& p, int i, bool inverse, const XPolynomial& root) {
  const XPolynomial w = root * divided_difference_div(p, i);
  if (inverse) return QTRational::monomial(0, -1) * (p - w);
  return QTRational::t() * p - w;
}

}  // namespace

XPolynomial apply_T(const XPolynomial& p, int i, bool inverse) {
  check_index(i, p.nvars() - 1);
  return hecke_step(p, i, inverse, linear_form(p.nvars(), i, 1, -QTRational::t()));
}

XPolynomial apply_omega(const XPolynomial& p) { return cyclic_omega(p, true); }

XPolynomial apply_Y(const XPolynomial& p, int i) {
  const int n = p.nvars();
  check_index(i, n);
  XPolynomial r = p;
  for (int k = i; k <= n - 1; ++k) r = apply_T(r, k, true);
  r = apply_omega(r);
  for (int k = 1; k <= i - 1; ++k) r = apply_T(r, k, false);
  return r;
}

XPolynomial apply(const HeckeOperatorSpec& op, const XPolynomial& p) {
  switch (op.kind) {
    case HeckeKind::T:
      return apply_T(p, op.index, false);
    case HeckeKind::Tinv:
      return apply_T(p, op.index, true);
    case HeckeKind::omega:
      return apply_omega(p);
    case HeckeKind::Y:
      return apply_Y(p, op.index);
    case HeckeKind::s:
      return swap_vars(p, op.index);
  }
  throw std::invalid_argument("unknown operator kind");
}

XPolynomial apply_T_tilde(const XPolynomial& p, int i, bool inverse) {
  check_index(i, p.nvars() - 1);
  return hecke_step(p, i, inverse, linear_form(p.nvars(), i, QTRational::t(), -1));
}

XPolynomial apply_omega_tilde(const XPolynomial& p) {
  const int n = p.nvars();
  XPolynomial r(n);
  Exponent e(static_cast<size_t>(n));
  for (const auto& [a, c] : p.terms()) {
    for (int k = 0; k + 1 < n; ++k) e[static_cast<size_t>(k)] = a[static_cast<size_t>(k + 1)];
    e[static_cast<size_t>(n - 1)] = a[0];
    r.add_term(e, a[0] > 0 ? c * QTRational::monomial(a[0], 0) : c);
  }
  return r;
}

XPolynomial apply_Y_tilde(const XPolynomial& p, int i) {
  const int n = p.nvars();
  check_index(i, n);
  XPolynomial r = p;
  for (int k = i - 1; k >= 1; --k) r = apply_T_tilde(r, k, true);
  r = apply_omega_tilde(r);
  for (int k = n - 1; k >= i; --k) r = apply_T_tilde(r, k, false);
  return r;
}

QTRational eigenvalue_y_tilde(const Composition& mu, int i) {
  const int mi = mu.part(i);
  int eta_tilde = 0;
  for (int j = 1; j < i; ++j) eta_tilde -= mu.part(j) >= mi;
  for (int j = i + 1; j <= mu.n(); ++j) eta_tilde -= mu.part(j) > mi;
  return QTRational::monomial(mi, eta_tilde + mu.n() - i);
}

XPolynomial clear_denominators(const XPolynomial& p) {
  QTPolynomial l(1L);
  for (const auto& [e, c] : p.terms()) {
    if (c.den().is_one()) continue;
    const QTPolynomial g = qt_gcd(l, c.den());
    l = l * c.den().divide_exact(g);
  }
  XPolynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, QTRational(c.num() * l.divide_exact(c.den())));
  return r;
}

namespace {

XPolynomial random_polynomial(std::mt19937_64& rng, int n) {
  static const std::vector<QTRational> pool = {
      1,
      -2,
      QTRational::q(),
      QTRational::monomial(0, -1),
      QTRational(QTPolynomial(1L) - QTPolynomial::t(), QTPolynomial(1L) - QTPolynomial::monomial(1, 1)),
      QTRational(BigRational(1, 3)) + QTRational::monomial(1, 2),
  };
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  XPolynomial p(n);
  const int k = nterms(rng);
  for (int j = 0; j < k; ++j) {
    Exponent e(static_cast<size_t>(n));
    for (auto& x : e) x = exp(rng);
    p.add_term(e, pool[pick(rng)]);
  }
  return p;
}

std::string witness(const XPolynomial& p) { return "witness " + format_x(p, Style::text); }

}  // namespace

Report verify_hecke_relations(int n, int samples, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("Hecke relations need n >= 2");
  Report report("hecke relations n=" + std::to_string(n));
  std::mt19937_64 rng(seed);
  const QTRational t = QTRational::t();
  for (int s = 0; s < samples; ++s) {
    const XPolynomial p = random_polynomial(rng, n);
    const std::string tag = " sample " + std::to_string(s);
    for (int i = 1; i < n; ++i) {
      const XPolynomial tp = apply_T(p, i);
      // (T - t)(T + 1) p = T(Tp + p) - t(Tp + p)
      const XPolynomial u = tp + p;
      const bool quad = (apply_T(u, i) - t * u).is_zero();
      report.add("quadratic i=" + std::to_string(i) + tag, quad, quad ? "" : witness(p));
      const bool inv = apply_T(tp, i, true) == p;
      report.add("inverse i=" + std::to_string(i) + tag, inv, inv ? "" : witness(p));
      if (i + 1 < n) {
        const XPolynomial lhs = apply_T(apply_T(apply_T(p, i), i + 1), i);
        const XPolynomial rhs = apply_T(apply_T(apply_T(p, i + 1), i), i + 1);
        report.add("braid i=" + std::to_string(i) + tag, lhs == rhs, lhs == rhs ? "" : witness(p));
      }
      for (int j = i + 2; j < n; ++j) {
        const bool ok = apply_T(apply_T(p, j), i) == apply_T(apply_T(p, i), j);
        report.add("commute i=" + std::to_string(i) + " j=" + std::to_string(j) + tag, ok, ok ? "" : witness(p));
      }
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const bool ok = apply_Y(apply_Y(p, j), i) == apply_Y(apply_Y(p, i), j);
        report.add("Y commute i=" + std::to_string(i) + " j=" + std::to_string(j) + tag, ok, ok ? "" : witness(p));
      }
  }
  return report;
}

namespace {

Report eigen_report(const XPolynomial& f, const Composition& mu, bool tilde) {
  if (f.nvars() != mu.n()) throw DimensionMismatch("polynomial alphabet differs from composition length");
  Report report(std::string(tilde ? "tilde eigenvalue equations " : "eigenvalue equations ") + mu.to_string());
  const XPolynomial g = clear_denominators(f);
  for (int i = 1; i <= mu.n(); ++i) {
    const XPolynomial lhs = tilde ? apply_Y_tilde(g, i) : apply_Y(g, i);
    const XPolynomial rhs = (tilde ? eigenvalue_y_tilde(mu, i) : eigenvalue_y(mu, i)) * g;
    const XPolynomial diff = lhs - rhs;
    std::string detail;
    if (!diff.is_zero()) {
      const auto& e = diff.terms().begin()->first;
      std::ostringstream os;
      os << "coefficient of " << format_x(XPolynomial::monomial(mu.n(), e), Style::text)
         << ": Y f gives " << format_qt(lhs.coefficient(e), Style::text) << ", y f gives "
         << format_qt(rhs.coefficient(e), Style::text);
      detail = os.str();
    }
    report.add("Y_" + std::to_string(i), diff.is_zero(), detail);
  }
  return report;
}

}  // namespace

Report verify_eigen(const XPolynomial& f, const Composition& mu) { return eigen_report(f, mu, false); }

Report verify_eigen_tilde(const XPolynomial& e, const Composition& mu) { return eigen_report(e, mu, true); }

}  // namespace nsmac
