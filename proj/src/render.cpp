#include "qtpieri/render.hpp"

#include <sstream>

namespace qtpieri {

namespace {

enum class Style { kText, kLatex };

std::string monomial_string(const Monomial& m, Style style) {
  std::string out;
  for (int k = 0; k < kMaxVars; ++k) {
    const unsigned e = m.exponent(Var(k));
    if (e == 0) continue;
    if (!out.empty()) out += style == Style::kText ? "*" : " ";
    out += Var(k).name();
    if (e > 1) {
      out += style == Style::kText ? "^" + std::to_string(e) : "^{" + std::to_string(e) + "}";
    }
  }
  return out;
}

std::string rational_string(const Rational& c, Style style) {
  if (style == Style::kLatex && c.get_den() != 1) {
    return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
  }
  return c.get_str();
}

std::string poly_string(const MultiPoly& p, Style style) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : p.terms()) {
    Rational c = term.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (term.mono.is_one()) {
      out += rational_string(c, style);
    } else {
      if (c != 1) out += rational_string(c, style) + (style == Style::kText ? "*" : " ");
      out += monomial_string(term.mono, style);
    }
  }
  return out;
}

std::string wrap(const MultiPoly& p, Style style) {
  const std::string s = poly_string(p, style);
  if (p.size() <= 1 && p.is_zero() == false && p.terms()[0].coeff > 0) return s;
  return "(" + s + ")";
}

std::pair<MultiPoly, MultiPoly> display_parts(const RatFun& r) {
  auto [num, den] = canonical_parts(r);
  if (den.constant_term() < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

}  // namespace

std::string to_text(const MultiPoly& p) { return poly_string(p, Style::kText); }

std::string to_text(const RatFun& r) {
  auto [num, den] = display_parts(r);
  if (den.is_one()) return to_text(num);
  return wrap(num, Style::kText) + "/" + wrap(den, Style::kText);
}

std::string to_latex(const MultiPoly& p) { return poly_string(p, Style::kLatex); }

std::string to_latex(const RatFun& r) {
  auto [num, den] = display_parts(r);
  if (den.is_one()) return to_latex(num);
  return "\\frac{" + to_latex(num) + "}{" + to_latex(den) + "}";
}

}  // namespace qtpieri
