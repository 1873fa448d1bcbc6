#include "nsmac/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>

#include "nsmac/errors.hpp"
#include "nsmac/format.hpp"
#include "nsmac/hecke.hpp"
#include "nsmac/hhl.hpp"
#include "nsmac/matrixprod.hpp"
#include "nsmac/serialize.hpp"
#include "nsmac/suites.hpp"
#include "nsmac/vertex_model.hpp"

namespace nsmac {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string mu;
  std::string rho;
  std::string method = "both";
  std::string output = "text";
  std::string convention = "f";
  std::string check;
  std::uint64_t seed = 1;
  int samples = 10;
  int row = 0;
  int n = 0;
};

Composition parse_mu(const std::string& text) {
  try {
    return Composition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--mu: ") + e.what());
  }
}

std::vector<int> parse_rho(const std::string& text, int n) {
  std::vector<int> rho;
  try {
    rho = Composition::parse(text).parts();
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--rho: ") + e.what());
  }
  std::vector<int> sorted = rho;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_permutation(n)) throw UsageError("--rho must be a permutation of 1.." + std::to_string(n));
  return rho;
}

std::vector<Method> methods(const std::string& name) {
  if (name == "hhl") return {Method::hhl};
  if (name == "matrix") return {Method::matrix};
  return {Method::hhl, Method::matrix};
}

const char* method_name(Method m) { return m == Method::hhl ? "hhl" : "matrix"; }

void print_poly(const XPolynomial& p, const Composition& mu, const std::string& method, const std::string& output,
                std::ostream& out) {
  if (output == "json") out << result_json(mu, method, p).dump() << "\n";
  else out << format_x(p, output == "latex" ? Style::latex : Style::text) << "\n";
}

int compute(const Options& o, std::ostream& out, std::ostream& err) {
  const Composition mu = parse_mu(o.mu);
  const bool e_convention = o.convention == "E";
  std::optional<std::vector<int>> rho;
  if (!o.rho.empty()) {
    if (o.method != "matrix") throw UsageError("--rho needs --method matrix");
    if (e_convention) throw UsageError("--rho is only available with --convention f");
    rho = parse_rho(o.rho, mu.n());
  }
  std::vector<XPolynomial> results;
  for (Method m : methods(o.method)) {
    if (rho) results.push_back(f_matrix_product(mu, *rho));
    else results.push_back(e_convention ? compute_E(mu, m) : compute_f(mu, m));
  }
  print_poly(results.front(), mu, o.method, o.output, out);
  if (results.size() == 2) {
    const bool agree = results[0] == results[1];
    (o.output == "json" ? err : out) << (agree ? "routes agree" : "routes differ") << "\n";
    if (!agree) {
      err << "matrix product route: " << format_x(results[1], Style::text) << "\n";
      return kExitCheckFailed;
    }
  }
  return kExitOk;
}

std::string filling_label(const Filling& s) {
  std::string label;
  for (const auto& col : s.columns()) {
    label += label.empty() ? "[" : " [";
    for (size_t j = 0; j < col.size(); ++j) label += (j ? "," : "") + std::to_string(col[j]);
    label += "]";
  }
  return label;
}

std::string config_label(const LatticeConfig& xi) {
  std::string label;
  for (const auto& edge : xi.k) {
    label += label.empty() ? "(" : " (";
    for (size_t r = 0; r < edge.size(); ++r) label += (r ? "," : "") + std::to_string(edge[r]);
    label += ")";
  }
  return label;
}

// One line per filling or configuration with its contribution to f_mu.
int expand(const Options& o, std::ostream& out) {
  const Composition mu = parse_mu(o.mu);
  if (o.method == "both") throw UsageError("expand needs --method hhl or --method matrix");
  std::vector<std::pair<std::string, XTerm>> rows;
  if (o.method == "hhl") {
    for (const auto& s : enumerate_fillings(mu)) rows.emplace_back(filling_label(s), hhl_summand(s));
  } else {
    for (const auto& xi : enumerate_configs(mu)) rows.emplace_back(config_label(xi), config_weight(xi, mu));
  }
  if (o.output == "json") {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [label, term] : rows)
      terms.push_back({{"object", label}, {"exps", term.exps}, {"coeff", to_json(term.coeff)}});
    out << nlohmann::ordered_json{{"mu", mu.parts()}, {"method", o.method}, {"terms", terms}}.dump() << "\n";
    return kExitOk;
  }
  const Style style = o.output == "latex" ? Style::latex : Style::text;
  for (const auto& [label, term] : rows) out << label << " : " << format_x(XPolynomial(term), style) << "\n";
  return kExitOk;
}

int verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<Composition> mu;
  if (!o.mu.empty()) mu = parse_mu(o.mu);
  auto family = [&](bool small) { return mu ? std::vector<Composition>{*mu} : (small ? small_family() : default_family()); };
  std::vector<Report> reports;
  const std::string& check = o.check;
  if (check == "eigen") {
    for (const auto& m : family(false))
      for (Method method : methods(o.method)) {
        Report r = o.convention == "E" ? verify_eigen_tilde(compute_E(m, method), m) : verify_eigen(compute_f(m, method), m);
        Report named(std::string(method_name(method)) + " eigen " + m.to_string());
        named.merge(r);
        reports.push_back(std::move(named));
      }
  } else if (check == "ybe") {
    std::vector<int> sizes = o.n ? std::vector<int>{o.n} : std::vector<int>{1, 2};
    for (int n : sizes) {
      reports.push_back(ybe_check(n, 2, default_sample_points()));
      if (n == 1) reports.push_back(ybe_check_symbolic(1, 2));
    }
  } else if (check == "exchange") {
    const int n = o.n ? o.n : 2;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) reports.push_back(exchange_check(i, j, n, 1, 1));
    if (mu) reports.push_back(exchange_property_check(*mu));
  } else if (check == "cyclic") {
    for (const auto& m : family(true)) {
      for (int i = 1; i <= m.n(); ++i)
        if (o.row == 0 || o.row == i) reports.push_back(cyclic_check(m, i));
      reports.push_back(cyclic_property_check(m));
    }
  } else if (check == "frozen") {
    for (const auto& m : family(false)) {
      const FrozenCoefficient fc = frozen_coefficient(m);
      Report r("frozen coefficient " + m.to_string());
      r.add("x^mu", fc.consistent(),
            std::to_string(fc.configs) + " configurations, lattice " + format_qt(fc.lattice, Style::text) + ", 1/Omega " +
                format_qt(fc.closed_form, Style::text));
      reports.push_back(std::move(r));
    }
  } else if (check == "bijection") {
    for (const auto& m : family(true)) {
      reports.push_back(bijection_check(m));
      reports.push_back(weight_match_check(m));
    }
  } else if (check == "hecke") {
    std::vector<int> sizes = o.n ? std::vector<int>{o.n} : std::vector<int>{2, 3, 4};
    for (int n : sizes) {
      if (n < 2) throw UsageError("--n must be at least 2 for the Hecke relations");
      reports.push_back(verify_hecke_relations(n, o.samples, o.seed));
    }
  }
  size_t checks = 0, failures = 0;
  for (const auto& r : reports) {
    checks += r.checks();
    failures += r.failures();
    if (!r.passed()) r.print(err);
  }
  out << check << ": " << (checks - failures) << "/" << checks << " checks passed in " << reports.size() << " suites\n";
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonsymmetric Macdonald polynomials by exact computation"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> method_choices{"hhl", "matrix", "both"};
  const std::vector<std::string> output_choices{"text", "json", "latex"};
  const std::vector<std::string> convention_choices{"f", "E"};

  auto* compute_cmd = app.add_subcommand("compute", "Compute f_mu (or E_mu) by one or both routes");
  compute_cmd->add_option("--mu", o.mu, "Composition, e.g. 0,2,1")->required();
  compute_cmd->add_option("--rho", o.rho, "Basement permutation for the matrix product route");
  compute_cmd->add_option("--method", o.method)->check(CLI::IsMember(method_choices));
  compute_cmd->add_option("--output", o.output)->check(CLI::IsMember(output_choices));
  compute_cmd->add_option("--convention", o.convention)->check(CLI::IsMember(convention_choices));

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--check", o.check)
      ->required()
      ->check(CLI::IsMember({"eigen", "ybe", "exchange", "cyclic", "frozen", "bijection", "hecke"}));
  verify_cmd->add_option("--mu", o.mu, "Composition; defaults to the built-in family");
  verify_cmd->add_option("--method", o.method)->check(CLI::IsMember(method_choices));
  verify_cmd->add_option("--convention", o.convention)->check(CLI::IsMember(convention_choices));
  verify_cmd->add_option("--seed", o.seed, "Seed for randomized suites");
  verify_cmd->add_option("--samples", o.samples, "Random polynomials per Hecke relation")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--i", o.row, "Only this row for the cyclic relation")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n", o.n, "Number of rows for ybe, exchange and hecke")->check(CLI::PositiveNumber);

  auto* expand_cmd = app.add_subcommand("expand", "List every filling or configuration with its term");
  expand_cmd->add_option("--mu", o.mu)->required();
  expand_cmd->add_option("--method", o.method)->check(CLI::IsMember(method_choices));
  expand_cmd->add_option("--output", o.output)->check(CLI::IsMember(output_choices));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute_cmd) return compute(o, out, err);
    if (*expand_cmd) {
      if (expand_cmd->count("--method") == 0) o.method = "hhl";
      return expand(o, out);
    }
    return verify(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace nsmac
