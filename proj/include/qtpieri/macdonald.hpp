#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qtpieri/symfunc.hpp"

namespace qtpieri {

/// Memoized Macdonald polynomials built by Gram-Schmidt over dominance.
/// A cache constructed with q_zero = true runs the same construction with
/// q bound to 0 in the scalar product. That yields the Hall-Littlewood
/// family directly; the library itself obtains Hall-Littlewood functions by
/// substitution and keeps this mode as an independent witness.
class MacdonaldCache {
 public:
  explicit MacdonaldCache(bool q_zero = false) : q_zero_(q_zero) {}
  MacdonaldCache(const MacdonaldCache&) = delete;
  MacdonaldCache& operator=(const MacdonaldCache&) = delete;

  /// Process-wide instances.
  static MacdonaldCache& macdonald();
  static MacdonaldCache& hall_littlewood();

  bool q_zero() const { return q_zero_; }

  /// P_lambda in the m-basis with cap |lambda|.
  const SymFunc& P(const Partition& lambda);
  /// 1 / <P_lambda, P_lambda>.
  const RatFun& b(const Partition& lambda);

  /// Coefficients f^lambda_{mu nu} of P_mu P_nu, keyed by lambda.
  const std::map<Partition, RatFun>& product(const Partition& mu, const Partition& nu);
  RatFun f(const Partition& lambda, const Partition& mu, const Partition& nu);

  /// Q_{lambda/mu} = sum_nu f^lambda_{mu nu} b_nu P_nu, as a P-basis expansion.
  SymFunc skew_Q_in_P(const Partition& lambda, const Partition& mu);

  /// Q_{lambda/mu} in the m-basis with cap |lambda| - |mu|; requires mu inside lambda.
  const SymFunc& skew_Q_monomial(const Partition& lambda, const Partition& mu);

  /// Rewrites a P- or Q-basis expansion in the m-basis.
  SymFunc to_monomial(const SymFunc& f);
  /// Expands an m-basis function in the P-basis.
  SymFunc to_P(const SymFunc& f);

  /// P_nu evaluated at an alphabet; memoized by alphabet name.
  RatFun specialize_P(const Partition& nu, const Alphabet& alphabet);
  /// Q_{lambda/mu} evaluated at an alphabet.
  RatFun specialize_skew_Q(const Partition& lambda, const Partition& mu, const Alphabet& alphabet);

 private:
  struct Degree {
    std::vector<SymFunc> P;  // indexed like partitions_of(n)
    std::vector<RatFun> b;
  };

  const Degree& degree(int n);
  Degree build(int n) const;
  RatFun weight(const Partition& rho) const;
  const RatFun& monomial_value(const Partition& kappa, const Alphabet& alphabet);

  bool q_zero_;
  std::mutex mutex_;
  std::mutex build_mutex_;
  std::map<int, Degree> degrees_;
  std::map<std::pair<Partition, Partition>, std::map<Partition, RatFun>> products_;
  std::map<std::pair<Partition, Partition>, SymFunc> skews_;
  std::map<std::string, std::map<Partition, RatFun>> p_values_;
  std::map<std::string, std::map<Partition, RatFun>> m_values_;
};

SymFunc macdonald_P(const Partition& lambda, int cap);
SymFunc macdonald_Q(const Partition& lambda, int cap);
RatFun b_norm(const Partition& lambda);
RatFun structure_f(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Skew functions in the m-basis; zero when mu is not inside lambda.
SymFunc skew_Q(const Partition& lambda, const Partition& mu, int cap);
SymFunc skew_P(const Partition& lambda, const Partition& mu, int cap);

/// g_r = Q_(r).
SymFunc g_row(int r, int cap);

enum class HLKind { kP, kQ };

/// Skew Hall-Littlewood P or Q in the m-basis: the Macdonald object with q
/// set to 0 coefficient-wise.
SymFunc hall_littlewood(const Partition& lambda, const Partition& mu, HLKind kind, int cap);

}  // namespace qtpieri
