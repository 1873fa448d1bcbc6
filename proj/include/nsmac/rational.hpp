#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nsmac {

// Always in lowest terms with a positive denominator.
using BigRational = mpq_class;

BigRational parse_rational(std::string_view text);

// "a/b", including "a/1" for integers.
std::string fraction_string(const BigRational& r);

BigRational rational_pow(const BigRational& base, int exponent);

}  // namespace nsmac
