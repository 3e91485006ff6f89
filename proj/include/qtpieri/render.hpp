#pragma once

#include <string>

#include "qtpieri/ratfun.hpp"

namespace qtpieri {

/// Plain text: ascending graded-lex terms, `*` products and `^` powers,
/// e.g. "1 - q + t - q^2*t". Fractions print as "(num)/(den)" from the
/// canonical parts, with both negated when that makes the denominator's
/// constant term positive.
std::string to_text(const MultiPoly& p);
std::string to_text(const RatFun& r);

std::string to_latex(const MultiPoly& p);
std::string to_latex(const RatFun& r);

}  // namespace qtpieri
