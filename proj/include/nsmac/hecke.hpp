#pragma once

#include <cstdint>

#include "nsmac/composition.hpp"
#include "nsmac/report.hpp"
#include "nsmac/xpoly.hpp"

namespace nsmac {

enum class HeckeKind { T, Tinv, omega, Y, s };

struct HeckeOperatorSpec {
  HeckeKind kind = HeckeKind::T;
  int index = 0;  // unused for omega
};

// T_i p = t p - (x_i - t x_{i+1}) d_i p and T_i^{-1} p = t^{-1}(p - (x_i - t x_{i+1}) d_i p),
// with d_i the divided difference.
XPolynomial apply_T(const XPolynomial& p, int i, bool inverse = false);
XPolynomial apply_omega(const XPolynomial& p);
// Y_i = T_{i-1}...T_1 omega T_{n-1}^{-1}...T_i^{-1}, the rightmost factor acting first.
XPolynomial apply_Y(const XPolynomial& p, int i);
XPolynomial apply(const HeckeOperatorSpec& op, const XPolynomial& p);

// Operators for the reversed convention (E polynomials).
XPolynomial apply_T_tilde(const XPolynomial& p, int i, bool inverse = false);
// h(x_1..x_n) -> h(q x_n, x_1, ..., x_{n-1})
XPolynomial apply_omega_tilde(const XPolynomial& p);
XPolynomial apply_Y_tilde(const XPolynomial& p, int i);
// q^{mu_i} t^{eta~_i + n - i}
QTRational eigenvalue_y_tilde(const Composition& mu, int i);

// Multiplies by the least common multiple of all coefficient denominators.
XPolynomial clear_denominators(const XPolynomial& p);

Report verify_hecke_relations(int n, int samples, std::uint64_t seed = 1);
// Checks Y_i f = y_i(mu) f for every i.
Report verify_eigen(const XPolynomial& f, const Composition& mu);
// Checks Y~_i E = y~_i(mu) E for every i.
Report verify_eigen_tilde(const XPolynomial& e, const Composition& mu);

}  // namespace nsmac
