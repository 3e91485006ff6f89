#include "qtpieri/pieri.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <stdexcept>
#include <vector>

#include "qtpieri/qseries.hpp"

namespace qtpieri {

namespace {

const RatFun kQVar = RatFun::var(kQ);
const RatFun kTVar = RatFun::var(kT);

MultiPoly t_power(int k) { return MultiPoly::var(kT, static_cast<unsigned>(k)); }

// (t;t)_k
MultiPoly t_factorial(int k) { return qpochhammer(kTVar, kT, k).num(); }

std::string t_power_latex(int k) {
  if (k == 0) return "";
  if (k == 1) return "t";
  return "t^{" + std::to_string(k) + "}";
}

std::string join_factors(const std::string& scalar, const std::vector<std::string>& num,
                         const std::vector<std::string>& den) {
  std::string top = scalar;
  for (const auto& f : num) top += f;
  if (top.empty()) top = "1";
  if (den.empty()) return top;
  std::string bottom;
  for (const auto& f : den) bottom += f;
  return "\\frac{" + top + "}{" + bottom + "}";
}

}  // namespace

std::string_view kind_name(PieriKind kind) {
  switch (kind) {
    case PieriKind::kVs: return "vs";
    case PieriKind::kHs: return "hs";
    case PieriKind::kSk: return "sk";
    case PieriKind::kHatSk: return "hat_sk";
    case PieriKind::kKs: return "ks";
  }
  return "?";
}

std::optional<PieriKind> parse_kind(std::string_view name) {
  for (PieriKind k : {PieriKind::kVs, PieriKind::kHs, PieriKind::kSk, PieriKind::kHatSk, PieriKind::kKs}) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

const Alphabet& pieri_alphabet(PieriKind kind) {
  static const std::array<Alphabet, 5> alphabets{
      Alphabet::difference(kQVar, 1, kT),
      Alphabet::single(1),
      Alphabet::difference(1, kQVar, kT),
      Alphabet::difference(1, kQVar / kTVar, kT),
      Alphabet::minus_one(),
  };
  return alphabets[static_cast<int>(kind)];
}

RatFun pieri_coeff(PieriKind kind, const Partition& lambda, const Partition& mu, bool q_zero) {
  if (!contains(lambda, mu)) return RatFun{};
  RatFun v = MacdonaldCache::macdonald().specialize_skew_Q(lambda, mu, pieri_alphabet(kind));
  if (kind == PieriKind::kVs && (lambda.size() - mu.size()) % 2 != 0) v = -v;
  if (q_zero) v = substitute(v, {{kQ, RatFun(0)}});
  return v;
}

RatFun factored_hl(PieriKind kind, const Partition& lambda, const Partition& mu) {
  const Partition lc = conjugate(lambda);
  const Partition mc = conjugate(mu);
  const int width = std::max(lambda.part(1), mu.part(1));
  auto l = [&](int i) { return lc.part(i); };
  auto m = [&](int i) { return mc.part(i); };
  MultiPoly out(1);
  switch (kind) {
    case PieriKind::kVs:
      for (int i = 1; i <= width; ++i) out = out * gauss_binomial(l(i) - l(i + 1), l(i) - m(i), kT);
      return out;
    case PieriKind::kHs:
      if (!is_horizontal_strip(lambda, mu)) return RatFun{};
      for (int i = 1; i <= width; ++i) {
        if (l(i) == m(i) + 1 && l(i + 1) == m(i + 1)) out = out * (MultiPoly(1) - t_power(l(i) - l(i + 1)));
      }
      return out;
    case PieriKind::kSk:
      if (!contains(lambda, mu)) return RatFun{};
      out = t_power(n_skew(lambda, mu));
      for (int i = 1; i <= width; ++i) out = out * gauss_binomial(l(i) - m(i + 1), l(i) - m(i), kT);
      return out;
    default:
      throw std::invalid_argument("no one-parameter product formula for this kind");
  }
}

RatFun hat_sk_as_printed(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) return RatFun{};
  const int n = lambda.length();
  RatFun out = RatFun(t_power(n_stat(lambda))) / RatFun(t_power(n_stat(mu)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const RatFun a = kQVar * kTVar.pow(j - i - 1);
      const RatFun b = kQVar * kTVar.pow(j - i);
      const int li = lambda.part(i), mi = mu.part(i), mj = mu.part(j);
      out *= qpochhammer(a, kQ, li - mj) * qpochhammer(b, kQ, mi - mj) /
             (qpochhammer(a, kQ, mi - mj) * qpochhammer(b, kQ, li - mj));
    }
  }
  return out;
}

RatFun factored_hat_sk(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) return RatFun{};
  const int n = lambda.length();
  auto correction = [n](const Partition& kappa) {
    RatFun c = 1;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const int k = kappa.part(i) - kappa.part(j);
        c *= qpochhammer(kQVar * kTVar.pow(j - i), kQ, k) / qpochhammer(kQVar * kTVar.pow(j - i - 1), kQ, k);
      }
    }
    return c;
  };
  return hat_sk_as_printed(lambda, mu) * correction(lambda) / correction(mu);
}

RatFun lascoux_modified_hl(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) return RatFun{};
  const Partition lc = conjugate(lambda);
  const Partition mc = conjugate(mu);
  MultiPoly num = t_power(n_skew(lambda, mu));
  MultiPoly den(1);
  for (int i = 1; i <= mu.length(); ++i) num = num * (MultiPoly(1) - t_power(lc.part(mu.part(i)) - i + 1));
  for (int j = 1; j <= mu.part(1); ++j) den = den * t_factorial(mc.part(j) - mc.part(j + 1));
  return RatFun(num, den);
}

std::optional<RatFun> lascoux_as_printed(const Partition& lambda, const Partition& mu, int* bad_row) {
  if (!contains(lambda, mu)) return RatFun{};
  const Partition lc = conjugate(lambda);
  const Partition mc = conjugate(mu);
  MultiPoly num = t_power(n_skew(lambda, mu));
  MultiPoly den(1);
  for (int i = 1; i <= mu.length(); ++i) {
    const int index = mu.part(i) - i + 1;
    if (index < 1) {
      if (bad_row != nullptr) *bad_row = i;
      return std::nullopt;
    }
    num = num * (MultiPoly(1) - t_power(lc.part(index)));
    den = den * t_factorial(mc.part(i) - mc.part(i + 1));
  }
  return RatFun(num, den);
}

std::string factored_hl_latex(PieriKind kind, const Partition& lambda, const Partition& mu) {
  const Partition lc = conjugate(lambda);
  const Partition mc = conjugate(mu);
  const int width = std::max(lambda.part(1), mu.part(1));
  auto l = [&](int i) { return lc.part(i); };
  auto m = [&](int i) { return mc.part(i); };
  std::vector<std::string> factors;
  auto qbin = [&](int n, int k) {
    if (k < 0 || k > n) return false;
    if (k != 0 && k != n) factors.push_back("\\qbin{" + std::to_string(n) + "}{" + std::to_string(k) + "}_t");
    return true;
  };
  std::string scalar;
  switch (kind) {
    case PieriKind::kVs:
      for (int i = 1; i <= width; ++i) {
        if (!qbin(l(i) - l(i + 1), l(i) - m(i))) return "0";
      }
      break;
    case PieriKind::kHs:
      if (!is_horizontal_strip(lambda, mu)) return "0";
      for (int i = 1; i <= width; ++i) {
        if (l(i) == m(i) + 1 && l(i + 1) == m(i + 1)) factors.push_back("(1-" + t_power_latex(l(i) - l(i + 1)) + ")");
      }
      break;
    case PieriKind::kSk:
      if (!contains(lambda, mu)) return "0";
      scalar = t_power_latex(n_skew(lambda, mu));
      for (int i = 1; i <= width; ++i) qbin(l(i) - m(i + 1), l(i) - m(i));
      break;
    default:
      throw std::invalid_argument("no one-parameter product formula for this kind");
  }
  return join_factors(scalar, factors, {});
}

std::string factored_hat_sk_latex(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) return "0";
  const int n = lambda.length();
  // (q^a t^e; q)_k as (a, e, k) with k > 0, after (x;q)_{-k} = 1/(x q^{-k};q)_k.
  using Poch = std::array<int, 3>;
  std::vector<Poch> num, den;
  auto put = [&](bool upper, int e, int k) {
    if (k > 0) (upper ? num : den).push_back({1, e, k});
    if (k < 0) (upper ? den : num).push_back({1 + k, e, -k});
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int li = lambda.part(i), mi = mu.part(i), mj = mu.part(j);
      put(true, j - i - 1, li - mj);
      put(true, j - i, mi - mj);
      put(false, j - i - 1, mi - mj);
      put(false, j - i, li - mj);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      put(true, j - i, lambda.part(i) - lambda.part(j));
      put(false, j - i - 1, lambda.part(i) - lambda.part(j));
      put(false, j - i, mu.part(i) - mu.part(j));
      put(true, j - i - 1, mu.part(i) - mu.part(j));
    }
  }
  std::sort(num.begin(), num.end());
  std::sort(den.begin(), den.end());
  std::vector<Poch> top, bottom;
  std::set_difference(num.begin(), num.end(), den.begin(), den.end(), std::back_inserter(top));
  std::set_difference(den.begin(), den.end(), num.begin(), num.end(), std::back_inserter(bottom));
  auto render = [](const std::vector<Poch>& side) {
    std::vector<std::string> out;
    for (const auto& [a, e, k] : side) {
      std::string base = a == 0 ? "" : a == 1 ? "q" : "q^{" + std::to_string(a) + "}";
      base += t_power_latex(e);
      if (base.empty()) base = "1";
      out.push_back("(" + base + ";q)_{" + std::to_string(k) + "}");
    }
    return out;
  };
  return join_factors(t_power_latex(n_stat(lambda) - n_stat(mu)), render(top), render(bottom));
}

}  // namespace qtpieri
