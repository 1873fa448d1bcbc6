#include "nsmac/vertex_model.hpp"

#include <sstream>

#include "nsmac/errors.hpp"
#include "nsmac/format.hpp"
#include "nsmac/xpoly.hpp"

namespace nsmac {

namespace {

std::string occ_string(const Occupation& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

std::string state_string(const TruncatedState& s) {
  std::string r;
  for (size_t k = 0; k < s.sites.size(); ++k) r += (k ? "|" : "") + occ_string(s.sites[k]);
  return r;
}

void check_occupation(const Occupation& v, size_t n) {
  if (v.size() != n) throw DimensionMismatch("occupation vectors of different lengths");
  for (int a : v)
    if (a < 0) throw std::invalid_argument("negative occupation " + occ_string(v));
}

void check_colour(int c, int n) {
  if (c < 0 || c > n) throw std::invalid_argument("colour " + std::to_string(c) + " outside 0.." + std::to_string(n));
}

// I_a + ... + I_n, 1-based
int suffix(const Occupation& I, int a) {
  int s = 0;
  for (int k = a; k <= static_cast<int>(I.size()); ++k) s += I[static_cast<size_t>(k - 1)];
  return s;
}

StructuredWeight zero_weight() { return {QTRational(0L), 0}; }

// v + e_add - e_remove; empty if a coordinate goes negative.
bool shifted(const Occupation& v, int add, int remove, Occupation& out) {
  out = v;
  if (add > 0) ++out[static_cast<size_t>(add - 1)];
  if (remove > 0 && --out[static_cast<size_t>(remove - 1)] < 0) return false;
  return true;
}

}  // namespace

BigRational StructuredWeight::eval(const BigRational& x, const BigRational& t) const {
  return coeff.eval(0, t) * rational_pow(x, xdeg);
}

StructuredWeight l_weight(const Occupation& I, int j, const Occupation& K, int l) {
  const size_t n = I.size();
  check_occupation(I, n);
  check_occupation(K, n);
  check_colour(j, static_cast<int>(n));
  check_colour(l, static_cast<int>(n));
  for (size_t c = 1; c <= n; ++c)
    if (I[c - 1] + (j == static_cast<int>(c)) != K[c - 1] + (l == static_cast<int>(c))) return zero_weight();
  if (l == 0) return {QTRational(1L), 0};
  if (j > l) return zero_weight();
  const int tail = suffix(I, l + 1);
  if (j == l) return {QTRational::monomial(0, tail), 1};
  const QTPolynomial one(1L);
  return {QTRational((one - QTPolynomial::monomial(0, I[static_cast<size_t>(l - 1)])).shifted(0, tail, 1)), 1};
}

namespace {

template <class V>
V r_weight_impl(int a, int b, int c, int d, const V& z, const V& t) {
  const V one(1L);
  if (a == b && b == c && c == d) return one;
  const V den = one - t * z;
  if (den == V(0L)) throw DivisionByZero();
  if (a != b && a == c && b == d) return V(a > b ? V(t * (one - z)) : V(one - z)) / den;
  if (a != b && a == d && b == c) return V(a > b ? V(one - t) : V((one - t) * z)) / den;
  return V(0L);
}

}  // namespace

QTRational r_weight(int a, int b, int c, int d, const QTRational& z) {
  return r_weight_impl<QTRational>(a, b, c, d, z, QTRational::t());
}

BigRational r_weight(int a, int b, int c, int d, const BigRational& z, const BigRational& t) {
  return r_weight_impl<BigRational>(a, b, c, d, z, t);
}

std::vector<SamplePoint> default_sample_points() {
  return {
      {BigRational(1), BigRational(2), BigRational(3, 5)},
      {BigRational(2), BigRational(-3), BigRational(7, 4)},
      {BigRational(5, 3), BigRational(1, 7), BigRational(-2)},
      {BigRational(-4), BigRational(9, 2), BigRational(1, 6)},
      {BigRational(3), BigRational(11, 5), BigRational(13, 9)},
  };
}

namespace {

// One summand of either side: R pattern, weight with parameter x, weight with parameter y.
struct RllTerm {
  int a, b, c, d;
  StructuredWeight lx, ly;
};

struct Boundary {
  int i1, i2, j1, j2;
  Occupation I, J;

  std::string id() const {
    std::ostringstream os;
    os << "i1=" << i1 << " i2=" << i2 << " j1=" << j1 << " j2=" << j2 << " I=" << occ_string(I)
       << " J=" << occ_string(J);
    return os.str();
  }
};

void rll_terms(const Boundary& bd, int n, const LWeightFn& l, std::vector<RllTerm>& lhs, std::vector<RllTerm>& rhs) {
  lhs.clear();
  rhs.clear();
  Occupation K;
  for (int k1 = 0; k1 <= n; ++k1)
    for (int k2 = 0; k2 <= n; ++k2) {
      if (shifted(bd.I, k1, bd.j1, K)) {
        const StructuredWeight wx = l(bd.I, k1, K, bd.j1);
        const StructuredWeight wy = wx.is_zero() ? zero_weight() : l(K, k2, bd.J, bd.j2);
        if (!wy.is_zero()) lhs.push_back({bd.i2, bd.i1, k2, k1, wx, wy});
      }
      if (shifted(bd.I, bd.i2, k2, K)) {
        const StructuredWeight wy = l(bd.I, bd.i2, K, k2);
        const StructuredWeight wx = wy.is_zero() ? zero_weight() : l(K, bd.i1, bd.J, k1);
        if (!wx.is_zero()) rhs.push_back({k2, k1, bd.j2, bd.j1, wx, wy});
      }
    }
}

template <class Fn>
void for_each_boundary(int n, int cap, Fn&& fn) {
  if (n < 1 || cap < 0) throw std::invalid_argument("Yang-Baxter check needs n >= 1 and cap >= 0");
  std::vector<Occupation> occs;
  Occupation v(static_cast<size_t>(n), 0);
  while (true) {
    occs.push_back(v);
    size_t k = 0;
    while (k < v.size() && v[k] == cap) v[k++] = 0;
    if (k == v.size()) break;
    ++v[k];
  }
  for (int i1 = 0; i1 <= n; ++i1)
    for (int i2 = 0; i2 <= n; ++i2)
      for (int j1 = 0; j1 <= n; ++j1)
        for (int j2 = 0; j2 <= n; ++j2)
          for (const auto& I : occs)
            for (const auto& J : occs) fn(Boundary{i1, i2, j1, j2, I, J});
}

}  // namespace

Report ybe_check(int n, int cap, const std::vector<SamplePoint>& points, const LWeightFn& l) {
  Report report("Yang-Baxter n=" + std::to_string(n) + " cap=" + std::to_string(cap));
  std::vector<SamplePoint> usable;
  std::vector<BigRational> zs;
  for (size_t p = 0; p < points.size(); ++p) {
    const auto& pt = points[p];
    if (pt.x == 0 || pt.t * pt.y == pt.x) {
      report.add("point " + std::to_string(p), true, "skipped: R weights have a pole here");
      continue;
    }
    usable.push_back(pt);
    zs.push_back(pt.y / pt.x);
  }
  std::vector<RllTerm> lhs, rhs;
  auto side = [](const std::vector<RllTerm>& terms, const SamplePoint& pt, const BigRational& z) {
    BigRational s = 0;
    for (const auto& term : terms) {
      const BigRational r = r_weight(term.a, term.b, term.c, term.d, z, pt.t);
      if (r != 0) s += r * term.lx.eval(pt.x, pt.t) * term.ly.eval(pt.y, pt.t);
    }
    return s;
  };
  for_each_boundary(n, cap, [&](const Boundary& bd) {
    rll_terms(bd, n, l, lhs, rhs);
    std::string detail;
    for (size_t p = 0; p < usable.size() && detail.empty(); ++p) {
      const BigRational a = side(lhs, usable[p], zs[p]);
      const BigRational b = side(rhs, usable[p], zs[p]);
      if (a != b) detail = "at (x,y,t)=(" + usable[p].x.get_str() + "," + usable[p].y.get_str() + "," +
                           usable[p].t.get_str() + "): " + a.get_str() + " vs " + b.get_str();
    }
    report.add(bd.id(), detail.empty(), detail);
  });
  return report;
}

Report ybe_check_symbolic(int n, int cap, const LWeightFn& l) {
  Report report("symbolic Yang-Baxter n=" + std::to_string(n) + " cap=" + std::to_string(cap));
  const QTRational z = QTRational::q();
  std::vector<RllTerm> lhs, rhs;
  auto side = [&](const std::vector<RllTerm>& terms) {
    QTRational s;
    for (const auto& term : terms) {
      const QTRational r = r_weight(term.a, term.b, term.c, term.d, z);
      if (!r.is_zero()) s += r * term.lx.coeff * term.ly.coeff * QTRational::monomial(term.ly.xdeg, 0);
    }
    return s;
  };
  for_each_boundary(n, cap, [&](const Boundary& bd) {
    rll_terms(bd, n, l, lhs, rhs);
    const QTRational a = side(lhs);
    const QTRational b = side(rhs);
    report.add(bd.id(), a == b, a == b ? "" : a.to_string() + " vs " + b.to_string());
  });
  return report;
}

std::vector<TruncatedState> capped_states(int n, int N, int cap) {
  if (n < 1 || N < 0 || cap < 0) throw std::invalid_argument("bad state shape");
  const size_t cells = static_cast<size_t>(n) * static_cast<size_t>(N + 1);
  std::vector<int> digits(cells, 0);
  std::vector<TruncatedState> out;
  while (true) {
    TruncatedState s;
    for (int k = 0; k <= N; ++k)
      s.sites.emplace_back(digits.begin() + k * n, digits.begin() + (k + 1) * n);
    out.push_back(std::move(s));
    size_t k = 0;
    while (k < cells && digits[k] == cap) digits[k++] = 0;
    if (k == cells) break;
    ++digits[k];
  }
  return out;
}

StructuredWeight row_operator_elem(int i, const TruncatedState& in, const TruncatedState& out) {
  if (in.sites.size() != out.sites.size() || in.sites.empty()) throw DimensionMismatch("states of different shapes");
  const int n = in.n();
  if (i < 1 || i > n) throw std::out_of_range("row operator colour " + std::to_string(i));
  StructuredWeight w{QTRational(1L), 0};
  int h = i;
  for (size_t k = 0; k < in.sites.size(); ++k) {
    const Occupation& bottom = in.sites[k];
    const Occupation& top = out.sites[k];
    check_occupation(bottom, static_cast<size_t>(n));
    check_occupation(top, static_cast<size_t>(n));
    // bottom + e_h = top + e_l fixes the outgoing colour l.
    int l = 0;
    for (int c = 1; c <= n; ++c) {
      const int d = bottom[static_cast<size_t>(c - 1)] + (h == c) - top[static_cast<size_t>(c - 1)];
      if (d == 0) continue;
      if (d != 1 || l != 0) return zero_weight();
      l = c;
    }
    w = w * l_weight(bottom, h, top, l);
    if (w.is_zero()) return w;
    h = l;
  }
  return h == 0 ? w : zero_weight();
}

std::map<TruncatedState, StructuredWeight> apply_row(int i, const TruncatedState& top) {
  const int n = top.n();
  if (i < 1 || i > n) throw std::out_of_range("row operator colour " + std::to_string(i));
  std::map<TruncatedState, StructuredWeight> result;
  TruncatedState bottom;
  bottom.sites.resize(top.sites.size());
  const size_t last = top.sites.size() - 1;
  auto walk = [&](auto&& self, size_t k, int h, const StructuredWeight& w) -> void {
    for (int l = 0; l <= n; ++l) {
      if (k == last && l != 0) break;
      if (!shifted(top.sites[k], l, h, bottom.sites[k])) continue;
      const StructuredWeight face = l_weight(bottom.sites[k], h, top.sites[k], l);
      if (face.is_zero()) continue;
      const StructuredWeight next = w * face;
      if (k == last)
        result.emplace(bottom, next);
      else
        self(self, k + 1, l, next);
    }
  };
  walk(walk, 0, i, {QTRational(1L), 0});
  return result;
}

namespace {

// <in| C_a(u) C_b(v) |out> as a polynomial in x = x_1, y = x_2; ua and vb are the variable
// indices carried by the two operators.
XPolynomial product_elem(int a, int ua, int b, int vb, const TruncatedState& in, const TruncatedState& out) {
  XPolynomial r(2);
  for (const auto& [mid, wb] : apply_row(b, out)) {
    const StructuredWeight wa = row_operator_elem(a, in, mid);
    if (wa.is_zero()) continue;
    Exponent e{0, 0};
    e[static_cast<size_t>(ua - 1)] += wa.xdeg;
    e[static_cast<size_t>(vb - 1)] += wb.xdeg;
    r.add_term(e, wa.coeff * wb.coeff);
  }
  return r;
}

}  // namespace

Report exchange_check(int i, int j, int n, int N, int cap) {
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("row operator colour");
  Report report("exchange C_" + std::to_string(i) + " C_" + std::to_string(j));
  const XPolynomial x = XPolynomial::variable(2, 1);
  const XPolynomial y = XPolynomial::variable(2, 2);
  const QTRational t = QTRational::t();
  const auto states = capped_states(n, N, cap);
  for (const auto& in : states)
    for (const auto& out : states) {
      XPolynomial lhs, rhs;
      if (i == j) {
        lhs = product_elem(i, 1, i, 2, in, out);
        rhs = product_elem(i, 2, i, 1, in, out);
      } else {
        const XPolynomial swapped = product_elem(j, 2, i, 1, in, out);
        const XPolynomial crossed = product_elem(j, 1, i, 2, in, out);
        const XPolynomial direct = product_elem(i, 1, j, 2, in, out);
        if (i < j) {
          lhs = t * ((x - y) * direct);
          rhs = (x - t * y) * swapped - (1 - t) * (x * crossed);
        } else {
          lhs = (x - y) * direct;
          rhs = (x - t * y) * swapped - (1 - t) * (y * crossed);
        }
      }
      const bool ok = lhs == rhs;
      std::string detail;
      if (!ok) detail = "difference " + format_x(lhs - rhs, Style::text);
      else if (!lhs.is_zero()) detail = "nonzero";
      report.add("in=" + state_string(in) + " out=" + state_string(out), ok, detail);
    }
  return report;
}

}  // namespace nsmac
