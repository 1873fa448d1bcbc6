#include "nsmac/matrixprod.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "nsmac/errors.hpp"
#include "nsmac/format.hpp"
#include "nsmac/hecke.hpp"
#include "nsmac/vertex_model.hpp"

namespace nsmac {

namespace {

std::string colours_string(const EdgeColours& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

std::string config_string(const LatticeConfig& xi) {
  std::string s;
  for (size_t j = 0; j < xi.k.size(); ++j) s += (j ? " " : "") + colours_string(xi.k[j]);
  return s;
}

std::vector<int> multiplicities(const EdgeColours& v, int n) {
  std::vector<int> m(static_cast<size_t>(n) + 1, 0);
  for (int c : v) {
    if (c < 0 || c > n) throw std::invalid_argument("edge colour " + std::to_string(c) + " outside 0.." + std::to_string(n));
    ++m[static_cast<size_t>(c)];
  }
  return m;
}

void require_admissible(const EdgeColours& I, const EdgeColours& J) {
  if (!is_admissible(I, J))
    throw std::invalid_argument("inadmissible column boundary " + colours_string(I) + " / " + colours_string(J));
}

// Numerator, denominator and x-exponent of a product built up factor by factor; reduced once
// at the end.
struct Product {
  QTPolynomial num{1L};
  QTPolynomial den{1L};
  Exponent x;
  bool zero = false;

  void times(const QTRational& r) {
    num = num * r.num();
    den = den * r.den();
  }
  void divide(const QTRational& r) {
    if (r.is_zero()) throw DivisionByZero();
    num = num * r.den();
    den = den * r.num();
  }
  XTerm term() const { return zero ? XTerm{x, QTRational(0L)} : XTerm{x, QTRational(num, den)}; }
};

void multiply_column(const EdgeColours& I, const EdgeColours& J, const std::vector<QTRational>& v,
                     const std::vector<RowParam>& rows, Product& acc) {
  const int n = static_cast<int>(I.size());
  require_admissible(I, J);
  if (static_cast<int>(v.size()) != n || static_cast<int>(rows.size()) != n)
    throw DimensionMismatch("column parameters do not match the column height");
  const ColourData data = colour_data(I, J);
  const Coordinates co = coordinates(I, J);
  std::vector<int> present = data.P;
  present.insert(present.end(), data.Q.begin(), data.Q.end());
  std::sort(present.begin(), present.end());
  for (int r = 1; r <= n; ++r)
    if (!std::binary_search(present.begin(), present.end(), r) && !v[static_cast<size_t>(r - 1)].is_zero())
      throw std::invalid_argument("nonzero parameter for colour " + std::to_string(r) + " absent from the column");
  for (int p : present)
    for (int l : data.Q)
      if (p > l && co.a.at(p) == co.b.at(l)) {
        acc.zero = true;
        return;
      }
  const Exponents ex = exponents_fgh(data, co, n);
  const QTRational one(1L);
  for (int p : data.P) acc.times(QTRational::monomial(0, ex.g.at(p)));
  for (int p : data.Q) {
    const RowParam& row = rows[static_cast<size_t>(co.b.at(p) - 1)];
    ++acc.x.at(static_cast<size_t>(row.var - 1));
    acc.times(row.scale);
  }
  for (int p : present)
    acc.divide(one - v[static_cast<size_t>(p - 1)] * QTRational::monomial(0, ex.f.at(p)));
  for (int p : data.Q) {
    const int a = co.a.at(p), b = co.b.at(p);
    if (a == b) continue;
    const QTRational& vp = v[static_cast<size_t>(p - 1)];
    if (a > b) acc.times(vp);
    acc.times(QTRational::monomial(0, ex.h.at(p)) * (one - QTRational::t()));
    acc.divide(one - vp * QTRational::monomial(0, ex.f.at(p) + 1));
  }
}

bool in_cyclic_interval(int x, int a, int b, int n) {
  if (a < b) return a < x && x < b;
  if (a > b) return (a < x && x <= n) || (1 <= x && x < b);
  return false;
}

}  // namespace

bool is_admissible(const EdgeColours& I, const EdgeColours& J) {
  if (I.size() != J.size()) return false;
  const int n = static_cast<int>(I.size());
  const auto mi = multiplicities(I, n);
  const auto mj = multiplicities(J, n);
  for (int k = 1; k <= n; ++k)
    if (!(1 >= mi[static_cast<size_t>(k)] && mi[static_cast<size_t>(k)] >= mj[static_cast<size_t>(k)])) return false;
  return true;
}

ColourData colour_data(const EdgeColours& I, const EdgeColours& J) {
  require_admissible(I, J);
  const int n = static_cast<int>(I.size());
  const auto mi = multiplicities(I, n);
  const auto mj = multiplicities(J, n);
  ColourData d;
  for (int k = 1; k <= n; ++k) {
    if (mi[static_cast<size_t>(k)] == 0) continue;
    (mj[static_cast<size_t>(k)] == 0 ? d.P : d.Q).push_back(k);
  }
  return d;
}

Coordinates coordinates(const EdgeColours& I, const EdgeColours& J) {
  require_admissible(I, J);
  Coordinates c;
  for (size_t r = 0; r < I.size(); ++r) {
    if (I[r] > 0) c.a[I[r]] = static_cast<int>(r) + 1;
    if (J[r] > 0) c.b[J[r]] = static_cast<int>(r) + 1;
  }
  return c;
}

Exponents exponents_fgh(const ColourData& data, const Coordinates& coords, int n) {
  Exponents e;
  std::vector<int> present = data.P;
  present.insert(present.end(), data.Q.begin(), data.Q.end());
  for (int p : present) {
    int f = 0, g = 0, h = 0;
    const int ap = coords.a.at(p);
    const auto bp = coords.b.find(p);
    for (int l : data.Q) {
      if (l >= p) continue;
      const int bl = coords.b.at(l);
      ++f;
      g += ap < bl;
      if (bp != coords.b.end()) h += in_cyclic_interval(bl, ap, bp->second, n);
    }
    e.f[p] = f;
    e.g[p] = g;
    e.h[p] = h;
  }
  return e;
}

std::vector<RowParam> identity_rows(int n) {
  std::vector<RowParam> rows;
  for (int r = 1; r <= n; ++r) rows.push_back({r, 1});
  return rows;
}

XTerm column_component(const EdgeColours& I, const EdgeColours& J, const std::vector<QTRational>& v,
                       const std::vector<RowParam>& rows, int nvars) {
  Product acc;
  acc.x.assign(static_cast<size_t>(nvars), 0);
  multiply_column(I, J, v, rows, acc);
  return acc.term();
}

QTRational kappa_ratio(const EdgeColours& I, const EdgeColours& J, const std::vector<QTRational>& v) {
  const ColourData d = colour_data(I, J);
  const int in = I.back(), jn = J.back();
  const bool in_P = std::find(d.P.begin(), d.P.end(), in) != d.P.end();
  const bool in_Q = std::find(d.Q.begin(), d.Q.end(), in) != d.Q.end();
  int texp = 0;
  if (jn >= 1) texp += static_cast<int>(std::count_if(d.P.begin(), d.P.end(), [&](int a) { return a > jn; }));
  if (in_P) texp -= static_cast<int>(std::count_if(d.Q.begin(), d.Q.end(), [&](int a) { return in > a; }));
  QTRational k = QTRational::monomial(0, texp);
  if (in_Q) k *= v[static_cast<size_t>(in - 1)];
  if (jn >= 1) k /= v[static_cast<size_t>(jn - 1)];
  return k;
}

QTRational kappa_product(const EdgeColours& I, const EdgeColours& J, const std::vector<QTRational>& v) {
  const ColourData d = colour_data(I, J);
  const Coordinates co = coordinates(I, J);
  const int n = static_cast<int>(I.size());
  int texp = 0;
  for (int p : d.P)
    for (int l : d.Q)
      if (p > l) texp += (co.b.at(l) == n) - (co.a.at(p) == n);
  QTRational k = QTRational::monomial(0, texp);
  for (int p : d.Q) {
    const int e = (co.a.at(p) == n) - (co.b.at(p) == n);
    if (e != 0) k *= v[static_cast<size_t>(p - 1)].pow(e);
  }
  return k;
}

EdgeColours rotate_up(const EdgeColours& I) {
  EdgeColours r;
  if (I.empty()) return r;
  r.push_back(I.back());
  r.insert(r.end(), I.begin(), I.end() - 1);
  return r;
}

std::vector<int> identity_permutation(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

std::vector<LatticeConfig> enumerate_configs(const Composition& mu, const std::vector<int>& rho) {
  const int n = mu.n();
  std::vector<int> sorted = rho;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_permutation(n)) throw std::invalid_argument("basement is not a permutation of 1..n");
  const int N = mu.maxpart();
  std::vector<LatticeConfig> out;
  LatticeConfig xi;
  xi.k.assign(static_cast<size_t>(N) + 1, EdgeColours(static_cast<size_t>(n), 0));
  xi.k[0] = rho;
  // place active colours of edge j one at a time
  auto place = [&](auto&& self, int j, int colour) -> void {
    if (j > N) {
      out.push_back(xi);
      return;
    }
    if (colour > n) {
      self(self, j + 1, 1);
      return;
    }
    if (mu.part(colour) < j) {
      self(self, j, colour + 1);
      return;
    }
    EdgeColours& cur = xi.k[static_cast<size_t>(j)];
    const EdgeColours& prev = xi.k[static_cast<size_t>(j - 1)];
    for (size_t r = 0; r < cur.size(); ++r) {
      if (cur[r] != 0 || prev[r] > colour) continue;
      cur[r] = colour;
      self(self, j, colour + 1);
      cur[r] = 0;
    }
  };
  place(place, 1, 1);
  return out;
}

std::vector<LatticeConfig> enumerate_configs(const Composition& mu) {
  return enumerate_configs(mu, identity_permutation(mu.n()));
}

XTerm lattice_weight(const LatticeConfig& xi, const Composition& mu, const std::vector<RowParam>& rows,
                     const VParamFn& v) {
  const int n = mu.n();
  const int N = mu.maxpart();
  if (static_cast<int>(xi.k.size()) != N + 1) throw DimensionMismatch("configuration has the wrong number of edges");
  Product acc;
  acc.x.assign(static_cast<size_t>(n), 0);
  const EdgeColours empty(static_cast<size_t>(n), 0);
  std::vector<QTRational> vj(static_cast<size_t>(n));
  for (int j = 0; j <= N && !acc.zero; ++j) {
    const EdgeColours& I = xi.k[static_cast<size_t>(j)];
    const EdgeColours& J = j < N ? xi.k[static_cast<size_t>(j + 1)] : empty;
    if (!is_admissible(I, J)) return {acc.x, QTRational(0L)};
    // the colours leaving through the top of column j must be those with mu_a = j
    for (int p : colour_data(I, J).P)
      if (mu.part(p) != j) return {acc.x, QTRational(0L)};
    for (int c = 1; c <= n; ++c) vj[static_cast<size_t>(c - 1)] = v ? v(c, j) : v_param(mu, c, j);
    multiply_column(I, J, vj, rows, acc);
  }
  return acc.term();
}

XTerm config_weight(const LatticeConfig& xi, const Composition& mu) {
  XTerm w = lattice_weight(xi, mu, identity_rows(mu.n()));
  w.coeff *= omega_norm(mu);
  return w;
}

XPolynomial f_matrix_product(const Composition& mu, const std::vector<int>& rho) {
  const int n = mu.n();
  const QTRational omega = omega_norm(mu);
  const auto rows = identity_rows(n);
  XPolynomial f(n);
  for (const auto& xi : enumerate_configs(mu, rho)) {
    const XTerm w = lattice_weight(xi, mu, rows);
    f.add_term(w.exps, w.coeff);
  }
  return omega * f;
}

XPolynomial f_matrix_product(const Composition& mu) { return f_matrix_product(mu, identity_permutation(mu.n())); }

XPolynomial hall_littlewood_q0(const Composition& mu) {
  const int n = mu.n();
  const int N = mu.maxpart();
  TruncatedState top;
  top.sites.assign(static_cast<size_t>(N) + 1, Occupation(static_cast<size_t>(n), 0));
  for (int a = 1; a <= n; ++a) top.sites[static_cast<size_t>(mu.part(a))][static_cast<size_t>(a - 1)] = 1;
  std::map<TruncatedState, XPolynomial> layer{{top, XPolynomial::constant(n, 1)}};
  for (int r = n; r >= 1; --r) {
    std::map<TruncatedState, XPolynomial> next;
    for (const auto& [state, poly] : layer)
      for (const auto& [bottom, w] : apply_row(r, state)) {
        Exponent e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(r - 1)] = w.xdeg;
        auto [it, fresh] = next.try_emplace(bottom, n);
        it->second += XPolynomial::monomial(n, e, w.coeff) * poly;
      }
    layer = std::move(next);
  }
  TruncatedState empty;
  empty.sites.assign(static_cast<size_t>(N) + 1, Occupation(static_cast<size_t>(n), 0));
  const auto it = layer.find(empty);
  return it == layer.end() ? XPolynomial(n) : it->second;
}

FrozenCoefficient frozen_coefficient(const Composition& mu) {
  FrozenCoefficient fc;
  fc.closed_form = omega_norm(mu).inverse();
  const auto rows = identity_rows(mu.n());
  for (const auto& xi : enumerate_configs(mu)) {
    const XTerm w = lattice_weight(xi, mu, rows);
    if (w.exps != mu.parts()) continue;
    ++fc.configs;
    fc.lattice += w.coeff;
  }
  return fc;
}

Report cyclic_check(const Composition& mu, int i, const VParamFn& v) {
  const int n = mu.n();
  if (i < 1 || i > n) throw std::out_of_range("row index " + std::to_string(i));
  Report report("cyclic relation " + mu.to_string() + " i=" + std::to_string(i));
  std::vector<int> labels_r{i}, labels_l;
  for (int b = 1; b <= n; ++b)
    if (b != i) {
      labels_r.push_back(b);
      labels_l.push_back(b);
    }
  labels_l.push_back(i);
  std::vector<RowParam> rows_r, rows_l;
  for (int p = 0; p < n; ++p) {
    rows_r.push_back({labels_r[static_cast<size_t>(p)], 1});
    rows_l.push_back({labels_l[static_cast<size_t>(p)], p == n - 1 ? QTRational::q() : QTRational(1L)});
  }
  const QTRational target = QTRational::monomial(mu.part(i), gamma(mu, i, 0));
  for (const auto& xr : enumerate_configs(mu, labels_r)) {
    LatticeConfig xl;
    for (const auto& edge : xr.k) {
      EdgeColours down(edge.begin() + 1, edge.end());
      down.push_back(edge.front());
      xl.k.push_back(std::move(down));
    }
    const XTerm zr = lattice_weight(xr, mu, rows_r, v);
    const XTerm zl = lattice_weight(xl, mu, rows_l, v);
    std::string detail;
    if (zr.is_zero()) {
      detail = "lattice with row i at the bottom vanishes";
    } else if (zl.is_zero()) {
      detail = "lattice with row i on top vanishes";
    } else if (zl.exps != zr.exps) {
      detail = "x-monomials differ";
    } else {
      const QTRational ratio = zl.coeff / zr.coeff;
      if (ratio != target) detail = "ratio " + format_qt(ratio, Style::text) + ", expected " + format_qt(target, Style::text);
    }
    report.add(config_string(xr), detail.empty(), detail);
  }
  return report;
}

namespace {

std::string perm_string(const std::vector<int>& rho) { return colours_string(rho); }

}  // namespace

Report exchange_property_check(const Composition& mu) {
  const int n = mu.n();
  Report report("exchange property " + mu.to_string());
  std::map<std::vector<int>, XPolynomial> cache;
  auto f = [&](const std::vector<int>& rho) -> const XPolynomial& {
    auto it = cache.find(rho);
    if (it == cache.end()) it = cache.emplace(rho, f_matrix_product(mu, rho)).first;
    return it->second;
  };
  const QTRational tinv = QTRational::monomial(0, -1);
  std::vector<int> rho = identity_permutation(n);
  do {
    for (int i = 1; i < n; ++i) {
      if (rho[static_cast<size_t>(i - 1)] > rho[static_cast<size_t>(i)]) continue;
      std::vector<int> swapped = rho;
      std::swap(swapped[static_cast<size_t>(i - 1)], swapped[static_cast<size_t>(i)]);
      const XPolynomial lhs = apply_T(f(rho), i, true);
      const XPolynomial rhs = tinv * f(swapped);
      report.add("rho=" + perm_string(rho) + " i=" + std::to_string(i), lhs == rhs,
                 lhs == rhs ? "" : "difference " + format_x(lhs - rhs, Style::text));
    }
  } while (std::next_permutation(rho.begin(), rho.end()));
  return report;
}

Report cyclic_property_check(const Composition& mu) {
  const int n = mu.n();
  Report report("cyclic property " + mu.to_string());
  std::vector<int> shift(static_cast<size_t>(n));
  shift[0] = n - 1;
  for (int m = 1; m < n; ++m) shift[static_cast<size_t>(m)] = m - 1;
  std::vector<int> rho = identity_permutation(n);
  do {
    const int last = rho.back();
    std::vector<int> rotated = rotate_up(rho);
    const XPolynomial lhs = f_matrix_product(mu, rho).scale_variable(n, QTRational::q());
    const XPolynomial rhs = (QTRational::monomial(0, n - 2 * last + 1) * eigenvalue_y(mu, last)) *
                            f_matrix_product(mu, rotated).substitute_permutation(shift);
    report.add("rho=" + perm_string(rho), lhs == rhs, lhs == rhs ? "" : "difference " + format_x(lhs - rhs, Style::text));
  } while (std::next_permutation(rho.begin(), rho.end()));
  return report;
}

}  // namespace nsmac
