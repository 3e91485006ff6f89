#include "qtpieri/qseries.hpp"

namespace qtpieri {

RatFun qpochhammer(const RatFun& a, Var q, int k) {
  const RatFun qv = RatFun::var(q);
  RatFun result(1);
  if (k >= 0) {
    RatFun shifted = a;
    for (int j = 0; j < k; ++j) {
      result *= RatFun(1) - shifted;
      shifted *= qv;
    }
    return result;
  }
  const RatFun qinv = qv.inverse();
  RatFun shifted = a * qinv;
  for (int j = 1; j <= -k; ++j) {
    result *= (RatFun(1) - shifted).inverse();
    shifted *= qinv;
  }
  return result;
}

MultiPoly gauss_binomial(int n, int k, Var v) {
  if (k < 0 || n < 0 || k > n) return MultiPoly{};
  k = std::min(k, n - k);
  MultiPoly result(1);
  for (int i = 1; i <= k; ++i) {
    result *= MultiPoly(1) - MultiPoly::var(v, static_cast<unsigned>(n - k + i));
    result = result.divide_exact(MultiPoly(1) - MultiPoly::var(v, static_cast<unsigned>(i))).value();
  }
  return result;
}

}  // namespace qtpieri
