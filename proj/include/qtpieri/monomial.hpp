#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace qtpieri {

/// Maximum number of distinct indeterminates alive in one process.
inline constexpr int kMaxVars = 11;

/// An interned indeterminate. The first six names are fixed so that the
/// global order q < t < a < b < c < z holds; later names are appended.
class Var {
 public:
  constexpr Var() = default;
  constexpr explicit Var(int index) : index_(static_cast<std::uint8_t>(index)) {}

  /// Interns `name`, registering it on first use.
  static Var named(std::string_view name);

  constexpr int index() const { return index_; }
  const std::string& name() const;

  friend constexpr bool operator==(Var, Var) = default;
  friend constexpr auto operator<=>(Var, Var) = default;

 private:
  std::uint8_t index_ = 0;
};

inline constexpr Var kQ{0};
inline constexpr Var kT{1};
inline constexpr Var kA{2};
inline constexpr Var kB{3};
inline constexpr Var kC{4};
inline constexpr Var kZ{5};

/// Number of variables registered so far.
int registered_var_count();

/// A power product of indeterminates, packed into three 64-bit words as
/// twelve 16-bit fields: field 11 is the total degree, field i < 11 is the
/// exponent of variable i. Comparing the words lexicographically from the
/// most significant one is exactly graded-lex order with variable index as
/// the lex priority.
class Monomial {
 public:
  Monomial() = default;

  static Monomial of(Var v, unsigned exponent = 1);

  unsigned degree() const { return field(kDegField); }
  unsigned exponent(Var v) const { return field(v.index()); }
  bool is_one() const { return w_[0] == 0 && w_[1] == 0 && w_[2] == 0; }

  /// Bit i set iff variable i occurs.
  std::uint32_t support() const;

  /// Throws std::overflow_error when the total degree leaves the field range.
  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other) { return *this = *this * other; }

  bool divides(const Monomial& other) const;
  /// Requires divides(other) on `divisor`.
  Monomial operator/(const Monomial& divisor) const;

  Monomial pow(unsigned k) const;
  Monomial with_exponent(Var v, unsigned exponent) const;
  Monomial without(Var v) const { return with_exponent(v, 0); }

  static Monomial gcd(const Monomial& x, const Monomial& y);
  static Monomial lcm(const Monomial& x, const Monomial& y);

  std::size_t hash() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& x, const Monomial& y) { return x.w_ <=> y.w_; }

 private:
  static constexpr int kDegField = 11;
  static constexpr unsigned kFieldLimit = 0x7fff;

  unsigned field(int k) const {
    return static_cast<unsigned>((w_[2 - k / 4] >> (16 * (k % 4))) & 0xffffu);
  }
  void set_field(int k, unsigned value);

  std::array<std::uint64_t, 3> w_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace qtpieri
