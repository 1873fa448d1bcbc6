#pragma once

#include <string>

#include "nsmac/qt_rational.hpp"

namespace nsmac {

class XPolynomial;

enum class Style { text, latex };

// Human-readable forms. A monomial factor common to every term of a numerator is
// pulled out front, e.g. q(1-t) rather than q-qt.
std::string format_qt(const QTPolynomial& p, Style style);
std::string format_qt(const QTRational& r, Style style);

// Terms of an x-polynomial are listed leading term first: by the partition
// obtained from sorting the reversed exponent, then by the reversed exponent.
std::string format_x(const XPolynomial& p, Style style);

}  // namespace nsmac
