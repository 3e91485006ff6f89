#pragma once

#include "qtpieri/ratfun.hpp"

namespace qtpieri {

/// (a; q)_k for every integer k, with (a;q)_k = (a;q)_inf / (a q^k;q)_inf.
/// For k < 0 this is 1 / prod_{j=1}^{-k} (1 - a q^{-j}).
RatFun qpochhammer(const RatFun& a, Var q, int k);

/// Gaussian binomial [n k]_v; zero unless 0 <= k <= n.
MultiPoly gauss_binomial(int n, int k, Var v);

}  // namespace qtpieri
