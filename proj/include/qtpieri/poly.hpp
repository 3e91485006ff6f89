#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "qtpieri/monomial.hpp"

namespace qtpieri {

using Rational = mpq_class;
using Integer = mpz_class;

/// Sparse multivariate polynomial over the rationals. Terms are kept sorted
/// ascending in graded-lex order, with no zero coefficients, so equality is
/// structural.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MultiPoly() = default;
  MultiPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit MultiPoly(const Rational& constant);

  static MultiPoly var(Var v, unsigned exponent = 1);
  static MultiPoly monomial(const Monomial& m, const Rational& coeff = 1);
  /// Accepts terms in any order, with repeats and zeros.
  static MultiPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Highest term in graded-lex order. Requires !is_zero().
  const Term& leading_term() const { return terms_.back(); }
  const Term& trailing_term() const { return terms_.front(); }
  unsigned degree() const { return terms_.empty() ? 0 : terms_.back().mono.degree(); }
  unsigned degree_in(Var v) const;
  std::uint32_t support() const;
  Monomial monomial_gcd() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }
  MultiPoly& operator*=(const Rational& scalar);
  friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
  friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
  friend MultiPoly operator*(MultiPoly x, const Rational& s) { return x *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly x) { return x *= s; }
  friend MultiPoly operator*(MultiPoly x, long s) { return x *= Rational(s); }
  friend MultiPoly operator*(long s, MultiPoly x) { return x *= Rational(s); }

  MultiPoly mul_term(const Monomial& m, const Rational& c) const;
  MultiPoly pow(unsigned k) const;

  /// Quotient when `divisor` divides this polynomial exactly, else nullopt.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  /// Positive rational c such that this / c has coprime integer coefficients.
  Rational content() const;
  /// this / content(), with the sign chosen so the leading coefficient is positive.
  MultiPoly primitive() const;

  /// Sets `v` to zero.
  MultiPoly drop_var(Var v) const;

  /// Coefficients with respect to `v`: entry k multiplies v^k.
  std::vector<MultiPoly> coefficients_in(Var v) const;
  static MultiPoly from_coefficients(Var v, const std::vector<MultiPoly>& coeffs);

  std::size_t hash() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::vector<Term> terms_;
};

/// Greatest common divisor over Q, normalized to a primitive integer
/// polynomial with positive leading coefficient (gcd(0, 0) = 0).
MultiPoly gcd(const MultiPoly& x, const MultiPoly& y);

/// Polynomial pseudo-remainder of x by y with respect to `v`.
MultiPoly pseudo_remainder(const MultiPoly& x, const MultiPoly& y, Var v);

}  // namespace qtpieri
