#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "nsmac/qt_rational.hpp"

namespace nsmac {

// Colours and rows are 1-based, columns 0-based.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);
  static Composition zero(int n) { return Composition(std::vector<int>(static_cast<size_t>(n), 0)); }
  // Comma-separated list such as "0,4,4,1,5".
  static Composition parse(std::string_view text);

  int n() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;
  const std::vector<int>& parts() const { return parts_; }
  int maxpart() const { return maxpart_; }
  int size() const;

  Composition reversed() const;
  // Parts sorted in decreasing order.
  Composition sorted() const;

  std::string to_string() const;
  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int maxpart_ = 0;
};

struct Square {
  int col = 1;
  int row = 0;
  friend auto operator<=>(const Square&, const Square&) = default;
};

int eta(const Composition& mu, int i);
// q^{mu_i} t^{eta_i + i - 1}
QTRational eigenvalue_y(const Composition& mu, int i);
int gamma(const Composition& mu, int i, int j);
int alpha(const Composition& mu, int i, int j);
// q^{mu_i - j} t^{gamma_{i,j}} when mu_i > j, otherwise 0.
QTRational v_param(const Composition& mu, int i, int j);
QTRational omega_norm(const Composition& mu);

bool in_diagram(const Composition& mu, Square s);
bool in_extended_diagram(const Composition& mu, Square s);
int leg(const Composition& mu, Square s);
int arm(const Composition& mu, Square s);
bool attacks(Square s, Square s2);

enum class Order { dominance, bracket };
// Strict orders. Dominance: nu != mu and every partial sum of nu is at most that of mu.
// Bracket: sorted(nu) dominated by sorted(mu), or equal sorted parts and nu dominated by mu.
bool precedes(const Composition& nu, const Composition& mu, Order order);

// All compositions with n parts, each at most maxpart.
std::vector<Composition> compositions_bounded(int n, int maxpart);
// All compositions with n parts and total size at most max_size.
std::vector<Composition> compositions_of_size_at_most(int n, int max_size);
// All compositions with n parts of total size exactly `size`.
std::vector<Composition> compositions_of_size(int n, int size);

}  // namespace nsmac
