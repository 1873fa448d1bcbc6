#include "nsmac/suites.hpp"

#include "nsmac/format.hpp"
#include "nsmac/hhl.hpp"
#include "nsmac/matrixprod.hpp"

namespace nsmac {

std::vector<Composition> default_family() {
  std::vector<Composition> out;
  for (int n = 1; n <= 3; ++n)
    for (auto& mu : compositions_bounded(n, 3)) out.push_back(std::move(mu));
  for (auto& mu : compositions_bounded(4, 2)) out.push_back(std::move(mu));
  return out;
}

std::vector<Composition> small_family() {
  std::vector<Composition> out;
  for (int n = 1; n <= 3; ++n)
    for (auto& mu : compositions_bounded(n, 2)) out.push_back(std::move(mu));
  return out;
}

XPolynomial compute_f(const Composition& mu, Method method) {
  return method == Method::hhl ? f_hhl(mu) : f_matrix_product(mu);
}

XPolynomial compute_E(const Composition& mu, Method method) { return compute_f(mu.reversed(), method).reverse_alphabet(); }

Report triangularity_check(const XPolynomial& f, const Composition& mu) {
  Report report("triangularity " + mu.to_string());
  const QTRational lead = f.coefficient(mu.parts());
  report.add("leading coefficient", lead == 1, lead == 1 ? "" : format_qt(lead, Style::text));
  const Composition rmu = mu.reversed();
  for (const auto& [e, c] : f.terms()) {
    if (e == mu.parts()) continue;
    const Composition nu(e);
    const bool ok = precedes(nu.reversed(), rmu, Order::bracket);
    report.add("support " + nu.to_string(), ok, ok ? "" : "reversed exponent not below reversed mu");
  }
  return report;
}

Report eigenvalue_distinctness_check(int max_n, int max_size) {
  Report report("eigenvalue distinctness");
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<Composition, std::vector<QTRational>>> seen;
    for (const auto& mu : compositions_of_size_at_most(n, max_size)) {
      std::vector<QTRational> tuple;
      for (int i = 1; i <= n; ++i) tuple.push_back(eigenvalue_y(mu, i));
      std::string clash;
      for (const auto& [other, y] : seen)
        if (y == tuple) clash = other.to_string();
      report.add(mu.to_string(), clash.empty(), clash.empty() ? "" : "same eigenvalues as " + clash);
      seen.emplace_back(mu, std::move(tuple));
    }
  }
  return report;
}

}  // namespace nsmac
