// Multivariate GCD over Q by the recursive primitive PRS algorithm. Only used
// to normalize output and to split opaque denominator factors, never on the
// arithmetic hot path.

#include <bit>
#include <stdexcept>

#include "qtpieri/poly.hpp"

namespace qtpieri {

namespace {

using Coeffs = std::vector<MultiPoly>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

MultiPoly gcd_rec(const MultiPoly& x, const MultiPoly& y);

MultiPoly content_in(const MultiPoly& p, Var v) {
  MultiPoly g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive() : gcd_rec(g, c);
    if (g.is_constant()) return MultiPoly(1);
  }
  return g;
}

MultiPoly primitive_in(const MultiPoly& p, Var v) {
  const MultiPoly c = content_in(p, v);
  if (c.is_constant()) return p.primitive();
  return p.divide_exact(c).value().primitive();
}

int pick_shared_var(std::uint32_t shared, const MultiPoly& x, const MultiPoly& y) {
  int best = -1;
  unsigned best_deg = 0;
  for (int k = 0; k < kMaxVars; ++k) {
    if (!((shared >> k) & 1u)) continue;
    const unsigned d = std::max(x.degree_in(Var(k)), y.degree_in(Var(k)));
    if (best < 0 || d < best_deg) {
      best = k;
      best_deg = d;
    }
  }
  return best;
}

MultiPoly gcd_rec(const MultiPoly& x, const MultiPoly& y) {
  if (x.is_zero()) return y.primitive();
  if (y.is_zero()) return x.primitive();
  if (x.is_constant() || y.is_constant()) return MultiPoly(1);

  const std::uint32_t sx = x.support();
  const std::uint32_t sy = y.support();
  if (const std::uint32_t only_x = sx & ~sy; only_x != 0) {
    return gcd_rec(content_in(x, Var(std::countr_zero(only_x))), y);
  }
  if (const std::uint32_t only_y = sy & ~sx; only_y != 0) {
    return gcd_rec(x, content_in(y, Var(std::countr_zero(only_y))));
  }

  const Var v(pick_shared_var(sx & sy, x, y));
  const MultiPoly cx = content_in(x, v);
  const MultiPoly cy = content_in(y, v);
  const MultiPoly c = gcd_rec(cx, cy);

  MultiPoly a = cx.is_constant() ? x.primitive() : x.divide_exact(cx).value();
  MultiPoly b = cy.is_constant() ? y.primitive() : y.divide_exact(cy).value();
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (true) {
    MultiPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      b = MultiPoly(1);
      break;
    }
    a = std::move(b);
    b = primitive_in(r, v);
  }
  MultiPoly g = b.is_constant() ? c : (c * primitive_in(b, v));
  return g.primitive();
}

}  // namespace

MultiPoly pseudo_remainder(const MultiPoly& x, const MultiPoly& y, Var v) {
  if (y.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  Coeffs a = x.coefficients_in(v);
  const Coeffs b = y.coefficients_in(v);
  trim(a);
  const std::size_t n = b.size() - 1;
  if (a.empty() || a.size() - 1 < n) return x;
  const MultiPoly& lc = b.back();
  int e = static_cast<int>(a.size() - 1 - n) + 1;
  while (!a.empty() && a.size() - 1 >= n) {
    const std::size_t shift = a.size() - 1 - n;
    const MultiPoly s = a.back();
    for (auto& coeff : a) coeff = coeff * lc;
    for (std::size_t k = 0; k <= n; ++k) a[k + shift] -= s * b[k];
    trim(a);
    --e;
  }
  MultiPoly r = MultiPoly::from_coefficients(v, a);
  if (e > 0) r = r * lc.pow(static_cast<unsigned>(e));
  return r;
}

MultiPoly gcd(const MultiPoly& x, const MultiPoly& y) {
  if (x.is_zero() && y.is_zero()) return MultiPoly{};
  if (x.is_zero()) return y.primitive();
  if (y.is_zero()) return x.primitive();
  const Monomial mx = x.monomial_gcd();
  const Monomial my = y.monomial_gcd();
  const Monomial m = Monomial::gcd(mx, my);
  const MultiPoly xr = x.divide_exact(MultiPoly::monomial(mx)).value();
  const MultiPoly yr = y.divide_exact(MultiPoly::monomial(my)).value();
  MultiPoly g = gcd_rec(xr, yr);
  return (g * MultiPoly::monomial(m)).primitive();
}

}  // namespace qtpieri
