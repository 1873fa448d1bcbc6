#pragma once

#include <vector>

#include "nsmac/composition.hpp"
#include "nsmac/report.hpp"
#include "nsmac/xpoly.hpp"

namespace nsmac {

// n <= 3 with parts <= 3, then n = 4 with parts <= 2.
std::vector<Composition> default_family();
// n <= 3 with parts <= 2.
std::vector<Composition> small_family();

enum class Method { hhl, matrix };
XPolynomial compute_f(const Composition& mu, Method method);
// E_mu(x_1..x_n) = f_{reversed mu}(x_n..x_1)
XPolynomial compute_E(const Composition& mu, Method method);

// Coefficient 1 on x^mu, and every other monomial x^nu has reversed nu below reversed mu in the
// bracket order.
Report triangularity_check(const XPolynomial& f, const Composition& mu);

// Eigenvalue tuples (y_1..y_n) pairwise distinct over n <= max_n and |mu| <= max_size.
Report eigenvalue_distinctness_check(int max_n, int max_size);

}  // namespace nsmac
