#pragma once

#include <vector>

#include "nsmac/composition.hpp"
#include "nsmac/matrixprod.hpp"
#include "nsmac/report.hpp"
#include "nsmac/xpoly.hpp"

namespace nsmac {

// Entries sigma_{i,j} for 0 <= j <= mu_i; sigma_{i,0} = i.
class Filling {
 public:
  Filling(Composition mu, std::vector<std::vector<int>> columns);

  const Composition& shape() const { return mu_; }
  int at(int i, int j) const;
  const std::vector<std::vector<int>>& columns() const { return cols_; }
  bool non_attacking() const;

  friend auto operator<=>(const Filling& a, const Filling& b) { return a.cols_ <=> b.cols_; }
  friend bool operator==(const Filling& a, const Filling& b) { return a.cols_ == b.cols_; }

 private:
  Composition mu_;
  std::vector<std::vector<int>> cols_;
};

std::vector<Filling> enumerate_fillings(const Composition& mu);

struct DescentsAscents {
  std::vector<Square> descents;  // sigma_{i,j} > sigma_{i,j-1}
  std::vector<Square> ascents;   // sigma_{i,j} < sigma_{i,j-1}
};
DescentsAscents descent_ascent(const Filling& s);

struct TripleCounts {
  int positive = 0;
  int negative = 0;
  int delta() const { return positive - negative; }
};
// Triples (i,j), (i',j-1), (i',j) with i < i'; a missing (i',j) counts as infinity.
TripleCounts ordered_triples(const Filling& s);
int triple_delta(const Filling& s);

XTerm hhl_summand(const Filling& s);
XPolynomial f_hhl(const Composition& mu);

// sigma_{a,j} is the row holding colour a on edge j.
Filling bijection_M(const LatticeConfig& xi, const Composition& mu);
LatticeConfig bijection_M_inverse(const Filling& s);

// Counts, round trips and image checks for both directions of the bijection.
Report bijection_check(const Composition& mu);
// Configuration weight against the filling summand, plus the individual factor identities.
Report weight_match_check(const Composition& mu);

}  // namespace nsmac
