#include "nsmac/rational.hpp"

#include "nsmac/errors.hpp"

namespace nsmac {

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  BigRational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("not a rational number: '" + std::string(text) + "'");
  if (r.get_den() == 0) throw DivisionByZero();
  r.canonicalize();
  return r;
}

std::string fraction_string(const BigRational& r) {
  BigRational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

BigRational rational_pow(const BigRational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw DivisionByZero();
    BigRational inv = 1 / base;
    return rational_pow(inv, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return BigRational(num, den);
}

}  // namespace nsmac
