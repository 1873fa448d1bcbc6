#pragma once

#include <functional>
#include <map>
#include <vector>

#include "nsmac/composition.hpp"
#include "nsmac/report.hpp"
#include "nsmac/xpoly.hpp"

namespace nsmac {

// Left/right edge colours of a column, listed from the bottom row up. 0 is empty.
using EdgeColours = std::vector<int>;

// 1 >= mult_k(I) >= mult_k(J) >= 0 for every colour k.
bool is_admissible(const EdgeColours& I, const EdgeColours& J);

struct ColourData {
  std::vector<int> P;  // enter left, exit top
  std::vector<int> Q;  // enter left, exit right
};
ColourData colour_data(const EdgeColours& I, const EdgeColours& J);

struct Coordinates {
  std::map<int, int> a;  // row where colour p enters
  std::map<int, int> b;  // row where colour p leaves, p in Q
};
Coordinates coordinates(const EdgeColours& I, const EdgeColours& J);

struct Exponents {
  std::map<int, int> f, g, h;
};
Exponents exponents_fgh(const ColourData& data, const Coordinates& coords, int n);

// The parameter of one row: scale * x_var.
struct RowParam {
  int var = 1;
  QTRational scale = 1;
};
std::vector<RowParam> identity_rows(int n);

// Component <I| Lambda_v(e_P) |J> of a column operator with row parameters `rows`, as a single
// x-monomial in nvars variables. v[c-1] is the parameter of colour c.
XTerm column_component(const EdgeColours& I, const EdgeColours& J, const std::vector<QTRational>& v,
                       const std::vector<RowParam>& rows, int nvars);

// Ratio of a column component to that of its rotation, from the colour data and i_n, j_n only.
QTRational kappa_ratio(const EdgeColours& I, const EdgeColours& J, const std::vector<QTRational>& v);
// The same ratio written over pairs of colours and their coordinates.
QTRational kappa_product(const EdgeColours& I, const EdgeColours& J, const std::vector<QTRational>& v);
// (i_1..i_n) -> (i_n, i_1..i_{n-1})
EdgeColours rotate_up(const EdgeColours& I);

// Edge colours k[j] between columns j-1 and j, for j = 0..max(mu); k[0] is the basement.
struct LatticeConfig {
  std::vector<EdgeColours> k;
  friend auto operator<=>(const LatticeConfig&, const LatticeConfig&) = default;
};

std::vector<int> identity_permutation(int n);
// Every configuration in which colour a sits in exactly one row of each edge 0..mu_a, k[0] = rho,
// and no row has k[j] > k[j+1] >= 1.
std::vector<LatticeConfig> enumerate_configs(const Composition& mu, const std::vector<int>& rho);
std::vector<LatticeConfig> enumerate_configs(const Composition& mu);

// v_{colour, column}
using VParamFn = std::function<QTRational(int, int)>;

// Product of column components, without the normalization factor.
XTerm lattice_weight(const LatticeConfig& xi, const Composition& mu, const std::vector<RowParam>& rows,
                     const VParamFn& v = {});
// Omega_mu times the lattice weight with rows x_1..x_n.
XTerm config_weight(const LatticeConfig& xi, const Composition& mu);

XPolynomial f_matrix_product(const Composition& mu, const std::vector<int>& rho);
XPolynomial f_matrix_product(const Composition& mu);

// <empty| C_1(x_1) ... C_n(x_n) |mu> by applying the row operators directly.
XPolynomial hall_littlewood_q0(const Composition& mu);

struct FrozenCoefficient {
  QTRational lattice;      // coefficient of x^mu read off the configurations
  QTRational closed_form;  // 1 / Omega_mu
  int configs = 0;         // configurations contributing x^mu
  bool consistent() const { return configs == 1 && lattice == closed_form; }
};
FrozenCoefficient frozen_coefficient(const Composition& mu);

// Per configuration of the lattice with row i moved to the bottom, compares it against the
// lattice with row i on top carrying q x_i: the ratio must be q^{mu_i} t^{gamma_{i,0}}.
Report cyclic_check(const Composition& mu, int i, const VParamFn& v = {});

// T_i^{-1} f^rho = t^{-1} f^{s_i rho} whenever rho_i < rho_{i+1}, over all permutations rho.
Report exchange_property_check(const Composition& mu);
// f^rho(x_1..x_{n-1}, q x_n) = t^{n - 2 rho_n + 1} y_{rho_n} f^{omega rho}(x_n, x_1..x_{n-1}).
Report cyclic_property_check(const Composition& mu);

}  // namespace nsmac
