#pragma once

#include <compare>
#include <functional>
#include <map>
#include <vector>

#include "nsmac/qt_rational.hpp"
#include "nsmac/report.hpp"

namespace nsmac {

// Number of paths of each colour 1..n on a vertical edge.
using Occupation = std::vector<int>;

// coeff * x^xdeg. A single face has xdeg 1 exactly when a path leaves through its right edge.
struct StructuredWeight {
  QTRational coeff;
  int xdeg = 0;

  bool is_zero() const { return coeff.is_zero(); }
  BigRational eval(const BigRational& x, const BigRational& t) const;
  StructuredWeight operator*(const StructuredWeight& o) const { return {coeff * o.coeff, xdeg + o.xdeg}; }
};

// Face with bottom I, left colour j, top K, right colour l (colour 0 means empty).
StructuredWeight l_weight(const Occupation& I, int j, const Occupation& K, int l);
using LWeightFn = std::function<StructuredWeight(const Occupation&, int, const Occupation&, int)>;

// R_z(a, b; c, d) with a, b the incoming and c, d the outgoing colours.
QTRational r_weight(int a, int b, int c, int d, const QTRational& z);
BigRational r_weight(int a, int b, int c, int d, const BigRational& z, const BigRational& t);

struct SamplePoint {
  BigRational x, y, t;
};
std::vector<SamplePoint> default_sample_points();

// Compares both sides of the RLL relation for every boundary with colours in 0..n and
// occupations bounded by cap.
Report ybe_check(int n, int cap, const std::vector<SamplePoint>& points, const LWeightFn& l = l_weight);
// Same comparison with x = 1 and y = q, as rational functions of q and t. Both sides are
// homogeneous in (x, y) of equal degree, so this loses nothing.
Report ybe_check_symbolic(int n, int cap, const LWeightFn& l = l_weight);

struct TruncatedState {
  std::vector<Occupation> sites;  // sites 0..N

  int n() const { return sites.empty() ? 0 : static_cast<int>(sites.front().size()); }
  auto operator<=>(const TruncatedState&) const = default;
  bool operator==(const TruncatedState&) const = default;
};

// All states on N+1 sites with every occupation at most cap.
std::vector<TruncatedState> capped_states(int n, int N, int cap);

// <in| C_i(x) |out>: in is the bottom boundary, out the top one. Colour i enters on the left
// and nothing leaves on the right.
StructuredWeight row_operator_elem(int i, const TruncatedState& in, const TruncatedState& out);
// All nonzero <b| C_i(x) |top>, keyed by the bottom state b.
std::map<TruncatedState, StructuredWeight> apply_row(int i, const TruncatedState& top);

// Exchange relation between C_i(x) and C_j(y) on every pair of capped states, checked as a
// polynomial identity in x, y after clearing the (x - y) denominators.
Report exchange_check(int i, int j, int n, int N, int cap);

}  // namespace nsmac
