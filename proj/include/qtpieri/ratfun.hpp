#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qtpieri/poly.hpp"

namespace qtpieri {

/// An interned denominator factor: a primitive integer polynomial with
/// positive leading coefficient. Atoms live for the whole process, so raw
/// pointers to them are stable and comparable.
class Atom {
 public:
  Atom(MultiPoly poly, std::uint32_t id, bool irreducible)
      : poly_(std::move(poly)), id_(id), irreducible_(irreducible) {}

  const MultiPoly& poly() const { return poly_; }
  std::uint32_t id() const { return id_; }
  /// True when the factor is known to be irreducible over Q. Opaque
  /// factors are still valid denominators; they only weaken reduction.
  bool irreducible() const { return irreducible_; }

 private:
  MultiPoly poly_;
  std::uint32_t id_;
  bool irreducible_;
};

struct DenFactor {
  const Atom* atom;
  int exp;
  friend bool operator==(const DenFactor&, const DenFactor&) = default;
};

struct Factorization {
  Rational unit;
  std::vector<DenFactor> factors;  // sorted by atom id
};

/// Splits a nonzero polynomial into a rational unit times powers of atoms.
/// Binomials with unit coefficients split into cyclotomic pieces; other
/// polynomials are trial-divided by known atoms and cyclotomic candidates,
/// and whatever remains becomes a new atom.
Factorization factor_into_atoms(const MultiPoly& p);

/// Number of atoms interned so far.
std::size_t atom_count();

/// Rational function: a polynomial numerator over a product of atom powers.
/// The value is kept reduced (no atom of the denominator divides the
/// numerator), which is the canonical form whenever every atom involved is
/// irreducible.
class RatFun {
 public:
  RatFun() = default;
  RatFun(long constant) : num_(constant) {}            // NOLINT(google-explicit-constructor)
  RatFun(const Rational& constant) : num_(constant) {}  // NOLINT(google-explicit-constructor)
  RatFun(MultiPoly numerator) : num_(std::move(numerator)) {}  // NOLINT(google-explicit-constructor)
  /// General fraction; throws std::domain_error when den is zero.
  RatFun(const MultiPoly& num, const MultiPoly& den);

  static RatFun var(Var v) { return RatFun(MultiPoly::var(v)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  bool is_one() const { return den_.empty() && num_.is_one(); }

  const MultiPoly& num() const { return num_; }
  const std::vector<DenFactor>& den_factors() const { return den_; }
  /// Expanded denominator: primitive, positive leading coefficient.
  MultiPoly den() const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& other) { return *this = *this + other; }
  RatFun& operator-=(const RatFun& other) { return *this = *this - other; }
  RatFun& operator*=(const RatFun& other) { return *this = *this * other; }
  RatFun& operator/=(const RatFun& other) { return *this = *this / other; }
  friend RatFun operator+(const RatFun& x, const RatFun& y);
  friend RatFun operator-(const RatFun& x, const RatFun& y);
  friend RatFun operator*(const RatFun& x, const RatFun& y);
  friend RatFun operator/(const RatFun& x, const RatFun& y) { return x * y.inverse(); }

  RatFun scaled(const Rational& s) const;
  RatFun inverse() const;
  /// Integer power; negative exponents invert.
  RatFun pow(int k) const;

  /// Exact equality by cross-multiplication; independent of representation.
  friend bool operator==(const RatFun& x, const RatFun& y) { return (x - y).is_zero(); }

  /// Sum of many terms over one common denominator, reduced once.
  static RatFun sum(std::span<const RatFun> terms);

 private:
  MultiPoly num_;
  std::vector<DenFactor> den_;
};

/// Reduced representative whose expanded denominator is primitive with
/// positive leading coefficient and coprime to the numerator. Opaque atoms
/// are resolved by GCD.
RatFun canonicalize(const RatFun& r);

/// Canonical (numerator, denominator) pair as plain polynomials.
std::pair<MultiPoly, MultiPoly> canonical_parts(const RatFun& r);

using Bindings = std::vector<std::pair<Var, RatFun>>;

/// Exact evaluation of `r` with each bound indeterminate replaced by its
/// value. Throws std::domain_error when a denominator factor vanishes.
RatFun substitute(const RatFun& r, const Bindings& bindings);
RatFun substitute(const MultiPoly& p, const Bindings& bindings);

}  // namespace qtpieri
