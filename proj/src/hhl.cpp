#include "nsmac/hhl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nsmac/format.hpp"

namespace nsmac {

namespace {

std::string filling_string(const Filling& s) {
  std::string out;
  for (size_t i = 0; i < s.columns().size(); ++i) {
    out += i ? " [" : "[";
    const auto& col = s.columns()[i];
    for (size_t j = 0; j < col.size(); ++j) out += (j ? "," : "") + std::to_string(col[j]);
    out += "]";
  }
  return out;
}

std::string config_string(const LatticeConfig& xi) {
  std::string s;
  for (size_t j = 0; j < xi.k.size(); ++j) {
    s += j ? " (" : "(";
    for (size_t r = 0; r < xi.k[j].size(); ++r) s += (r ? "," : "") + std::to_string(xi.k[j][r]);
    s += ")";
  }
  return s;
}

// 1 - q^{leg+1} t^{arm+1}
QTRational hook_denominator(const Composition& mu, Square s) {
  return QTRational(1L) - QTRational::monomial(leg(mu, s) + 1, arm(mu, s) + 1);
}

}  // namespace

Filling::Filling(Composition mu, std::vector<std::vector<int>> columns) : mu_(std::move(mu)), cols_(std::move(columns)) {
  const int n = mu_.n();
  if (static_cast<int>(cols_.size()) != n) throw std::invalid_argument("filling has the wrong number of columns");
  for (int i = 1; i <= n; ++i) {
    const auto& col = cols_[static_cast<size_t>(i - 1)];
    if (static_cast<int>(col.size()) != mu_.part(i) + 1)
      throw std::invalid_argument("column " + std::to_string(i) + " of the filling has the wrong height");
    if (col[0] != i) throw std::invalid_argument("basement entry of column " + std::to_string(i) + " must be " + std::to_string(i));
    for (int e : col)
      if (e < 1 || e > n) throw std::invalid_argument("filling entry " + std::to_string(e) + " outside 1.." + std::to_string(n));
  }
}

int Filling::at(int i, int j) const {
  if (!in_extended_diagram(mu_, {i, j})) throw std::out_of_range("square outside the filling");
  return cols_[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
}

bool Filling::non_attacking() const {
  const int n = mu_.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= mu_.part(i); ++j)
      for (int i2 = i + 1; i2 <= n; ++i2)
        for (int j2 : {j, j - 1})
          if (j2 >= 0 && j2 <= mu_.part(i2) && at(i, j) == at(i2, j2)) return false;
  return true;
}

std::vector<Filling> enumerate_fillings(const Composition& mu) {
  const int n = mu.n();
  std::vector<std::vector<int>> cols;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> col(static_cast<size_t>(mu.part(i)) + 1, 0);
    col[0] = i;
    cols.push_back(std::move(col));
  }
  auto value = [&](int i, int j) { return cols[static_cast<size_t>(i - 1)][static_cast<size_t>(j)]; };
  // Squares that attack or are attacked by (i,j); unfilled ones hold 0.
  auto allowed = [&](int i, int j, int e) {
    for (int i2 = 1; i2 < i; ++i2)
      for (int j2 : {j, j + 1})
        if (j2 <= mu.part(i2) && value(i2, j2) == e) return false;
    for (int i2 = i + 1; i2 <= n; ++i2)
      for (int j2 : {j, j - 1})
        if (j2 >= 0 && j2 <= mu.part(i2) && value(i2, j2) == e) return false;
    return true;
  };
  std::vector<Filling> out;
  auto fill = [&](auto&& self, int i, int j) -> void {
    if (i > n) {
      out.emplace_back(mu, cols);
      return;
    }
    if (j > mu.part(i)) {
      self(self, i + 1, 1);
      return;
    }
    for (int e = 1; e <= n; ++e) {
      if (!allowed(i, j, e)) continue;
      cols[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] = e;
      self(self, i, j + 1);
    }
    cols[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] = 0;
  };
  fill(fill, 1, 1);
  return out;
}

DescentsAscents descent_ascent(const Filling& s) {
  const Composition& mu = s.shape();
  DescentsAscents da;
  for (int i = 1; i <= mu.n(); ++i)
    for (int j = 1; j <= mu.part(i); ++j) {
      if (s.at(i, j) > s.at(i, j - 1)) da.descents.push_back({i, j});
      if (s.at(i, j) < s.at(i, j - 1)) da.ascents.push_back({i, j});
    }
  return da;
}

TripleCounts ordered_triples(const Filling& s) {
  const Composition& mu = s.shape();
  const int n = mu.n();
  const int infinity = n + 1;
  TripleCounts tc;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= mu.part(i); ++j)
      for (int i2 = i + 1; i2 <= n; ++i2) {
        if (j - 1 > mu.part(i2)) continue;
        const int mid = s.at(i, j);
        const int below = s.at(i2, j - 1);
        const int above = j <= mu.part(i2) ? s.at(i2, j) : infinity;
        tc.positive += above > mid && mid > below;
        tc.negative += above < mid && mid < below;
      }
  return tc;
}

int triple_delta(const Filling& s) { return ordered_triples(s).delta(); }

XTerm hhl_summand(const Filling& s) {
  const Composition& mu = s.shape();
  const int n = mu.n();
  Exponent x(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= mu.part(i); ++j) ++x[static_cast<size_t>(s.at(i, j) - 1)];
  const QTRational one_minus_t = QTRational(1L) - QTRational::t();
  QTPolynomial num{1L}, den{1L};
  auto times = [&](const QTRational& r) {
    num = num * r.num();
    den = den * r.den();
  };
  times(QTRational::monomial(0, triple_delta(s)));
  const DescentsAscents da = descent_ascent(s);
  for (const Square& sq : da.descents) {
    times(one_minus_t);
    den = den * hook_denominator(mu, sq).num();
  }
  for (const Square& sq : da.ascents) {
    times(QTRational::monomial(leg(mu, sq) + 1, arm(mu, sq)) * one_minus_t);
    den = den * hook_denominator(mu, sq).num();
  }
  return {x, QTRational(num, den)};
}

XPolynomial f_hhl(const Composition& mu) {
  XPolynomial f(mu.n());
  for (const auto& s : enumerate_fillings(mu)) {
    const XTerm w = hhl_summand(s);
    f.add_term(w.exps, w.coeff);
  }
  return f;
}

Filling bijection_M(const LatticeConfig& xi, const Composition& mu) {
  const int n = mu.n();
  const int N = mu.maxpart();
  if (static_cast<int>(xi.k.size()) != N + 1) throw std::invalid_argument("configuration has the wrong number of edges");
  for (const auto& edge : xi.k)
    if (static_cast<int>(edge.size()) != n) throw std::invalid_argument("configuration edge has the wrong height");
  if (xi.k[0] != identity_permutation(n)) throw std::invalid_argument("configuration basement is not 1..n");
  std::vector<std::vector<int>> cols;
  for (int a = 1; a <= n; ++a) cols.emplace_back(static_cast<size_t>(mu.part(a)) + 1, 0);
  for (int j = 0; j <= N; ++j) {
    const EdgeColours& edge = xi.k[static_cast<size_t>(j)];
    for (int r = 1; r <= n; ++r) {
      const int a = edge[static_cast<size_t>(r - 1)];
      if (a == 0) continue;
      if (a < 0 || a > n || j > mu.part(a)) throw std::invalid_argument("colour " + std::to_string(a) + " present on edge " + std::to_string(j));
      int& slot = cols[static_cast<size_t>(a - 1)][static_cast<size_t>(j)];
      if (slot != 0) throw std::invalid_argument("colour " + std::to_string(a) + " repeated on edge " + std::to_string(j));
      slot = r;
      if (j < N) {
        const int above = xi.k[static_cast<size_t>(j + 1)][static_cast<size_t>(r - 1)];
        if (above >= 1 && a > above) throw std::invalid_argument("row " + std::to_string(r) + " carries a larger colour into a smaller one");
      }
    }
  }
  for (int a = 1; a <= n; ++a)
    for (int j = 0; j <= mu.part(a); ++j)
      if (cols[static_cast<size_t>(a - 1)][static_cast<size_t>(j)] == 0)
        throw std::invalid_argument("colour " + std::to_string(a) + " missing from edge " + std::to_string(j));
  return Filling(mu, std::move(cols));
}

LatticeConfig bijection_M_inverse(const Filling& s) {
  const Composition& mu = s.shape();
  const int n = mu.n();
  LatticeConfig xi;
  xi.k.assign(static_cast<size_t>(mu.maxpart()) + 1, EdgeColours(static_cast<size_t>(n), 0));
  for (int a = 1; a <= n; ++a)
    for (int j = 0; j <= mu.part(a); ++j) {
      int& slot = xi.k[static_cast<size_t>(j)][static_cast<size_t>(s.at(a, j) - 1)];
      if (slot != 0) throw std::invalid_argument("filling places two colours in one row of edge " + std::to_string(j));
      slot = a;
    }
  return xi;
}

Report bijection_check(const Composition& mu) {
  Report report("bijection " + mu.to_string());
  const auto configs = enumerate_configs(mu);
  const auto fillings = enumerate_fillings(mu);
  report.add("counts", configs.size() == fillings.size(),
             std::to_string(configs.size()) + " configurations, " + std::to_string(fillings.size()) + " fillings");
  const std::set<LatticeConfig> config_set(configs.begin(), configs.end());
  const std::set<Filling> filling_set(fillings.begin(), fillings.end());
  for (const auto& xi : configs) {
    std::string detail;
    try {
      const Filling s = bijection_M(xi, mu);
      if (!s.non_attacking()) detail = "image is attacking";
      else if (!filling_set.contains(s)) detail = "image not enumerated";
      else if (bijection_M_inverse(s) != xi) detail = "round trip differs";
    } catch (const std::invalid_argument& e) {
      detail = e.what();
    }
    report.add("config " + config_string(xi), detail.empty(), detail);
  }
  for (const auto& s : fillings) {
    std::string detail;
    try {
      const LatticeConfig xi = bijection_M_inverse(s);
      if (!config_set.contains(xi)) detail = "preimage not enumerated";
      else if (bijection_M(xi, mu) != s) detail = "round trip differs";
    } catch (const std::invalid_argument& e) {
      detail = e.what();
    }
    report.add("filling " + filling_string(s), detail.empty(), detail);
  }
  return report;
}

Report weight_match_check(const Composition& mu) {
  const int n = mu.n();
  const int N = mu.maxpart();
  Report report("weight match " + mu.to_string());
  const QTRational one(1L);
  const QTRational one_minus_t = one - QTRational::t();
  const EdgeColours empty(static_cast<size_t>(n), 0);
  for (const auto& xi : enumerate_configs(mu)) {
    const Filling s = bijection_M(xi, mu);
    const std::string id = config_string(xi);
    const XTerm lhs = config_weight(xi, mu);
    const XTerm rhs = hhl_summand(s);
    report.add(id + " weight", lhs == rhs,
               lhs == rhs ? "" : "lattice " + format_qt(lhs.coeff, Style::text) + ", filling " + format_qt(rhs.coeff, Style::text));

    // Column by column factors of the lattice weight.
    Exponent x(static_cast<size_t>(n), 0);
    QTRational norm = omega_norm(mu), changes = one, rising = one, falling = one;
    for (int j = 0; j <= N; ++j) {
      const EdgeColours& I = xi.k[static_cast<size_t>(j)];
      const EdgeColours& J = j < N ? xi.k[static_cast<size_t>(j + 1)] : empty;
      const ColourData data = colour_data(I, J);
      const Coordinates co = coordinates(I, J);
      const Exponents ex = exponents_fgh(data, co, n);
      for (int p : data.P) {
        rising *= QTRational::monomial(0, ex.g.at(p));
        norm /= one - v_param(mu, p, j) * QTRational::monomial(0, ex.f.at(p));
      }
      for (int p : data.Q) {
        const QTRational v = v_param(mu, p, j);
        const int a = co.a.at(p), b = co.b.at(p);
        ++x[static_cast<size_t>(b - 1)];
        norm /= one - v * QTRational::monomial(0, ex.f.at(p));
        if (a != b) changes *= one_minus_t / (one - v * QTRational::monomial(0, ex.f.at(p) + 1));
        if (a < b) rising *= QTRational::monomial(0, ex.h.at(p));
        if (a > b) falling *= v * QTRational::monomial(0, ex.h.at(p));
      }
    }

    // The same factors read off the filling.
    const DescentsAscents da = descent_ascent(s);
    const TripleCounts tc = ordered_triples(s);
    QTRational hooks = one, ascent_weights = QTRational::monomial(0, -tc.negative);
    for (const Square& sq : da.descents) hooks *= one_minus_t / hook_denominator(mu, sq);
    for (const Square& sq : da.ascents) {
      hooks *= one_minus_t / hook_denominator(mu, sq);
      ascent_weights *= QTRational::monomial(leg(mu, sq) + 1, arm(mu, sq));
    }
    auto add = [&](const std::string& what, const QTRational& a, const QTRational& b) {
      report.add(id + " " + what, a == b, a == b ? "" : format_qt(a, Style::text) + " vs " + format_qt(b, Style::text));
    };
    report.add(id + " x-monomial", x == rhs.exps);
    add("normalization", norm, one);
    add("row-change denominators", changes, hooks);
    add("positive triples", rising, QTRational::monomial(0, tc.positive));
    add("negative triples and ascents", falling, ascent_weights);
  }
  return report;
}

}  // namespace nsmac
