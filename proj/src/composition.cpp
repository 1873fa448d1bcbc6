#include "nsmac/composition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "nsmac/errors.hpp"

namespace nsmac {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("a composition needs at least one part");
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
  maxpart_ = *std::max_element(parts_.begin(), parts_.end());
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string item;
  std::stringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed composition '" + std::string(text) + "'");
    }
    if (used != item.size() || v < 0) throw ParseError("malformed composition '" + std::string(text) + "'");
    parts.push_back(v);
  }
  if (parts.empty()) throw ParseError("empty composition");
  return Composition(std::move(parts));
}

int Composition::part(int i) const {
  if (i < 1 || i > n()) throw std::out_of_range("part index " + std::to_string(i));
  return parts_[static_cast<size_t>(i - 1)];
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition Composition::reversed() const { return Composition(std::vector<int>(parts_.rbegin(), parts_.rend())); }

Composition Composition::sorted() const {
  std::vector<int> p = parts_;
  std::sort(p.begin(), p.end(), std::greater<>());
  return Composition(std::move(p));
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (size_t k = 0; k < parts_.size(); ++k) s += (k ? "," : "") + std::to_string(parts_[k]);
  return s + ")";
}

namespace {

void check_colour(const Composition& mu, int i) {
  if (i < 1 || i > mu.n()) throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(mu.n()));
}

void check_column(const Composition& mu, int i, int j) {
  check_colour(mu, i);
  if (j < 0 || j > mu.maxpart())
    throw std::out_of_range("column " + std::to_string(j) + " outside 0.." + std::to_string(mu.maxpart()));
}

}  // namespace

int eta(const Composition& mu, int i) {
  check_colour(mu, i);
  const int mi = mu.part(i);
  int r = 0;
  for (int j = 1; j < i; ++j) r -= mu.part(j) > mi;
  for (int j = i + 1; j <= mu.n(); ++j) r -= mu.part(j) >= mi;
  return r;
}

QTRational eigenvalue_y(const Composition& mu, int i) { return QTRational::monomial(mu.part(i), eta(mu, i) + i - 1); }

int gamma(const Composition& mu, int i, int j) {
  check_column(mu, i, j);
  const int mi = mu.part(i);
  int r = 0;
  for (int k = 1; k < i; ++k) r -= mu.part(k) > mi;
  for (int k = i + 1; k <= mu.n(); ++k) r += j <= mu.part(k) && mu.part(k) < mi;
  return r;
}

int alpha(const Composition& mu, int i, int j) {
  check_column(mu, i, j);
  const int mi = mu.part(i);
  int r = 0;
  for (int k = 1; k < i; ++k) r += mu.part(k) == mi;
  for (int k = 1; k <= mu.n(); ++k)
    if (k != i) r += j < mu.part(k) && mu.part(k) < mi;
  for (int k = i + 1; k <= mu.n(); ++k) r += mu.part(k) == j;
  return r;
}

QTRational v_param(const Composition& mu, int i, int j) {
  check_column(mu, i, j);
  if (mu.part(i) <= j) return {};
  return QTRational::monomial(mu.part(i) - j, gamma(mu, i, j));
}

QTRational omega_norm(const Composition& mu) {
  QTPolynomial prod(1L);
  for (int i = 1; i <= mu.n(); ++i)
    for (int j = 0; j < mu.part(i); ++j) prod *= QTPolynomial(1L) - QTPolynomial::monomial(mu.part(i) - j, alpha(mu, i, j));
  return QTRational(prod);
}

bool in_diagram(const Composition& mu, Square s) {
  return s.col >= 1 && s.col <= mu.n() && s.row >= 1 && s.row <= mu.part(s.col);
}

bool in_extended_diagram(const Composition& mu, Square s) {
  return s.col >= 1 && s.col <= mu.n() && s.row >= 0 && s.row <= mu.part(s.col);
}

int leg(const Composition& mu, Square s) {
  if (!in_diagram(mu, s)) throw std::out_of_range("square outside the diagram");
  return mu.part(s.col) - s.row;
}

int arm(const Composition& mu, Square s) {
  if (!in_diagram(mu, s)) throw std::out_of_range("square outside the diagram");
  return alpha(mu, s.col, s.row - 1);
}

bool attacks(Square s, Square s2) { return s.col < s2.col && (s.row == s2.row || s.row == s2.row + 1); }

namespace {

bool dominated(const std::vector<int>& nu, const std::vector<int>& mu) {
  if (nu == mu) return false;
  int a = 0;
  int b = 0;
  for (size_t k = 0; k < nu.size(); ++k) {
    a += nu[k];
    b += mu[k];
    if (a > b) return false;
  }
  return true;
}

}  // namespace

bool precedes(const Composition& nu, const Composition& mu, Order order) {
  if (nu.n() != mu.n()) throw DimensionMismatch("compositions of different lengths");
  if (order == Order::dominance) return dominated(nu.parts(), mu.parts());
  const auto np = nu.sorted().parts();
  const auto mp = mu.sorted().parts();
  if (np != mp) return dominated(np, mp);
  return dominated(nu.parts(), mu.parts());
}

namespace {

void extend(std::vector<int>& cur, int n, const std::function<bool(int, int)>& allowed, int used,
            std::vector<Composition>& out) {
  if (static_cast<int>(cur.size()) == n) {
    if (allowed(-1, used)) out.emplace_back(cur);
    return;
  }
  for (int v = 0; allowed(v, used); ++v) {
    cur.push_back(v);
    extend(cur, n, allowed, used + v, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions_bounded(int n, int maxpart) {
  std::vector<Composition> out;
  std::vector<int> cur;
  extend(cur, n, [maxpart](int v, int) { return v <= maxpart; }, 0, out);
  return out;
}

std::vector<Composition> compositions_of_size_at_most(int n, int max_size) {
  std::vector<Composition> out;
  std::vector<int> cur;
  extend(cur, n, [max_size](int v, int used) { return v < 0 ? used <= max_size : used + v <= max_size; }, 0, out);
  return out;
}

std::vector<Composition> compositions_of_size(int n, int size) {
  std::vector<Composition> out;
  std::vector<int> cur;
  extend(cur, n, [size](int v, int used) { return v < 0 ? used == size : used + v <= size; }, 0, out);
  return out;
}

}  // namespace nsmac
