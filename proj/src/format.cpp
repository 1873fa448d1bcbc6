#include "nsmac/format.hpp"

#include <algorithm>
#include <sstream>

#include "nsmac/xpoly.hpp"

namespace nsmac {

namespace {

struct Piece {
  std::string body;
  bool is_sum = false;
  bool negative = false;  // the whole piece is negated; body carries no leading sign
};

std::string power(const std::string& base, int e, Style style) {
  if (e == 1) return base;
  if (style == Style::latex && e >= 10) return base + "^{" + std::to_string(e) + "}";
  return base + "^" + std::to_string(e);
}

std::string qt_monomial(int qe, int te, Style style) {
  std::string s;
  if (qe > 0) s += power("q", qe, style);
  if (te > 0) {
    if (!s.empty() && style == Style::text) s += "*";
    s += power("t", te, style);
  }
  return s;
}

std::string number(const BigRational& c, Style style) {
  if (c.get_den() == 1) return c.get_num().get_str();
  if (style == Style::latex) return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::vector<QTTerm> display_order(std::vector<QTTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const QTTerm& a, const QTTerm& b) {
    const int da = a.qexp + a.texp;
    const int db = b.qexp + b.texp;
    if (da != db) return da < db;
    return a.qexp > b.qexp;
  });
  return terms;
}

// Sum of terms. If the first displayed term is negative the whole sum is negated
// and the sign reported separately.
Piece plain_sum(const std::vector<QTTerm>& terms, Style style) {
  Piece out;
  const auto ordered = display_order(terms);
  out.is_sum = ordered.size() > 1;
  out.negative = ordered.front().coeff < 0;
  const std::string plus = style == Style::latex ? "+" : " + ";
  const std::string minus = style == Style::latex ? "-" : " - ";
  bool first = true;
  for (const auto& term : ordered) {
    const bool neg = (term.coeff < 0) != out.negative;
    const BigRational mag = abs(term.coeff);
    const std::string mono = qt_monomial(term.qexp, term.texp, style);
    std::string body;
    if (mono.empty()) {
      body = number(mag, style);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = number(mag, style) + (style == Style::text ? "*" : "") + mono;
    }
    if (first) {
      out.body = body;
      first = false;
    } else {
      out.body += (neg ? minus : plus) + body;
    }
  }
  return out;
}

Piece polynomial_piece(const QTPolynomial& p, Style style) {
  if (p.is_zero()) return {"0", false, false};
  const int mq = p.min_qexp();
  const int mt = p.min_texp();
  if (p.terms().size() == 1 || (mq == 0 && mt == 0)) return plain_sum(p.terms(), style);
  Piece inner = plain_sum(p.shifted(-mq, -mt).terms(), style);
  Piece out;
  out.negative = inner.negative;
  const std::string mono = qt_monomial(mq, mt, style);
  out.body = style == Style::text ? mono + "*(" + inner.body + ")" : mono + "(" + inner.body + ")";
  return out;
}

std::string with_sign(const Piece& p) {
  if (!p.negative) return p.body;
  return p.is_sum ? "-(" + p.body + ")" : "-" + p.body;
}

std::string wrap(const std::string& s, bool needed) { return needed ? "(" + s + ")" : s; }

// Coefficient with the sign pulled out, suitable for a product with an x-monomial.
Piece coefficient_piece(const QTRational& r, Style style) {
  Piece num = polynomial_piece(r.num(), style);
  if (r.is_polynomial()) return num;
  Piece den = polynomial_piece(r.den(), style);
  Piece out;
  out.negative = num.negative != den.negative;
  if (style == Style::latex) {
    out.body = "\\frac{" + num.body + "}{" + den.body + "}";
  } else {
    const bool den_compound = den.is_sum || den.body.find('*') != std::string::npos;
    out.body = wrap(num.body, num.is_sum) + "/" + wrap(den.body, den_compound);
  }
  return out;
}

std::string x_monomial(const Exponent& e, Style style) {
  std::string s;
  for (size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    const std::string var = style == Style::latex ? "x_" + std::to_string(k + 1) : "x" + std::to_string(k + 1);
    std::string factor = var;
    if (e[k] > 1) factor += style == Style::latex ? "^{" + std::to_string(e[k]) + "}" : "^" + std::to_string(e[k]);
    if (!s.empty()) s += style == Style::latex ? " " : "*";
    s += factor;
  }
  return s;
}

bool display_before(const Exponent& a, const Exponent& b) {
  Exponent ra(a.rbegin(), a.rend());
  Exponent rb(b.rbegin(), b.rend());
  Exponent pa = ra;
  Exponent pb = rb;
  std::sort(pa.begin(), pa.end(), std::greater<>());
  std::sort(pb.begin(), pb.end(), std::greater<>());
  if (pa != pb) return pa > pb;
  return ra > rb;
}

}  // namespace

std::string format_qt(const QTPolynomial& p, Style style) { return with_sign(polynomial_piece(p, style)); }

std::string format_qt(const QTRational& r, Style style) {
  Piece c = coefficient_piece(r, style);
  return with_sign(c);
}

std::string format_x(const XPolynomial& p, Style style) {
  if (p.is_zero()) return "0";
  std::vector<const XPolynomial::TermMap::value_type*> order;
  for (const auto& kv : p.terms()) order.push_back(&kv);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return display_before(a->first, b->first); });

  std::ostringstream out;
  bool first = true;
  for (const auto* kv : order) {
    const std::string mono = x_monomial(kv->first, style);
    Piece c = coefficient_piece(kv->second, style);
    std::string body;
    if (c.body == "1" && !mono.empty()) {
      body = mono;
    } else if (mono.empty()) {
      body = wrap(c.body, c.is_sum && c.negative);
    } else if (style == Style::latex) {
      body = wrap(c.body, c.is_sum && kv->second.is_polynomial()) + " " + mono;
    } else {
      body = wrap(c.body, c.is_sum && kv->second.is_polynomial()) + "*" + mono;
    }
    if (first) {
      out << (c.negative ? "-" : "") << body;
      first = false;
    } else {
      out << (c.negative ? " - " : " + ") << body;
    }
  }
  return out.str();
}

}  // namespace nsmac
