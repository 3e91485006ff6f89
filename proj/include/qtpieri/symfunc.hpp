#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qtpieri/partition.hpp"

namespace qtpieri {

enum class Basis { kM, kP, kE, kH, kMacP, kMacQ };

const char* basis_name(Basis b);

/// A symmetric function of degree at most `cap`, stored as coefficients in
/// one basis. Terms above the cap are dropped by every operation.
class SymFunc {
 public:
  SymFunc(Basis basis, int cap) : basis_(basis), cap_(cap) {}

  static SymFunc one(int cap, Basis basis = Basis::kM);
  static SymFunc element(Basis basis, const Partition& lambda, int cap);
  static SymFunc e(int r, int cap) { return element(Basis::kE, Partition::row(r), cap); }
  static SymFunc h(int r, int cap) { return element(Basis::kH, Partition::row(r), cap); }
  static SymFunc p(int r, int cap) { return element(Basis::kP, Partition::row(r), cap); }

  Basis basis() const { return basis_; }
  int cap() const { return cap_; }
  const std::map<Partition, RatFun>& coeffs() const { return coeffs_; }
  RatFun coeff(const Partition& lambda) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds c to the coefficient of lambda; ignored above the cap.
  void add(const Partition& lambda, const RatFun& c);

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  friend SymFunc operator+(SymFunc x, const SymFunc& y) { return x += y; }
  friend SymFunc operator-(SymFunc x, const SymFunc& y) { return x -= y; }
  SymFunc scaled(const RatFun& c) const;

  /// Homogeneous component of degree d.
  SymFunc component(int d) const;
  /// Same element with every term of degree above d dropped and the cap
  /// lowered to d.
  SymFunc truncated(int d) const;
  SymFunc with_cap(int cap) const;

  /// Exact equality of the stored coefficients; both sides must use the
  /// same basis.
  friend bool operator==(const SymFunc& x, const SymFunc& y);

 private:
  Basis basis_;
  int cap_;
  std::map<Partition, RatFun> coeffs_;
};

/// Re-expresses f in one of the bases m, p, e, h.
SymFunc convert(const SymFunc& f, Basis target);

/// Product truncated at the common cap; the result is in the m-basis, or
/// the p-basis when both factors are.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// Coefficients of m_nu in m_lambda * m_mu.
const std::vector<std::pair<Partition, long>>& monomial_product(const Partition& lambda, const Partition& mu);

/// Transition matrix entries: row lambda of basis `from` written in the
/// p-basis, indexed like partitions_of(n).
const std::vector<std::vector<Rational>>& to_power_sums(Basis from, int n);
const std::vector<std::vector<Rational>>& from_power_sums(Basis to, int n);

Integer z_lambda(const Partition& lambda);

/// <p_rho, p_rho> = z_rho prod_i (1 - q^rho_i) / (1 - t^rho_i).
RatFun power_sum_norm(const Partition& rho);

/// The (q,t) scalar product, paired diagonally in the p-basis.
RatFun inner_product_qt(const SymFunc& f, const SymFunc& g);

SymFunc substitute(const SymFunc& f, const Bindings& bindings);

/// Specialization of the ring of symmetric functions by the images of the
/// power sums p_r.
class Alphabet {
 public:
  static constexpr int kMaxDegree = 16;

  /// p_r -> (a^r - b^r) / (1 - base^r).
  static Alphabet difference(const RatFun& a, const RatFun& b, Var base);
  /// p_r -> -1.
  static Alphabet minus_one();
  /// p_r -> u^r.
  static Alphabet single(const RatFun& u);

  const std::string& name() const { return state_->name; }
  const RatFun& p(int r) const;
  /// prod_i p(rho_i).
  RatFun p(const Partition& rho) const;

 private:
  struct State {
    std::string name;
    std::vector<RatFun> values;  // values[r-1] = image of p_r
  };
  explicit Alphabet(std::shared_ptr<const State> state) : state_(std::move(state)) {}
  std::shared_ptr<const State> state_;
};

RatFun specialize(const SymFunc& f, const Alphabet& alphabet);

/// h_r((a - b)/(1 - base)) = [z^r] (bz; base)_inf / (az; base)_inf.
RatFun h_series_coeff(int r, const RatFun& a, const RatFun& b, Var base);

std::string to_text(const SymFunc& f);
std::string to_latex(const SymFunc& f);

}  // namespace qtpieri
