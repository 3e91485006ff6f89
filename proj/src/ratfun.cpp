#include "qtpieri/ratfun.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace qtpieri {

namespace {

struct PolyHash {
  std::size_t operator()(const MultiPoly& p) const { return p.hash(); }
};

class AtomRegistry {
 public:
  const Atom* intern(const MultiPoly& poly, bool irreducible) {
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(poly); it != index_.end()) return it->second;
    atoms_.emplace_back(poly, static_cast<std::uint32_t>(atoms_.size()), irreducible);
    const Atom* atom = &atoms_.back();
    index_.emplace(poly, atom);
    return atom;
  }

  const Atom* find(const MultiPoly& poly) {
    std::lock_guard lock(mutex_);
    auto it = index_.find(poly);
    return it == index_.end() ? nullptr : it->second;
  }

  /// Atoms that could divide a polynomial with the given support and degree.
  std::vector<const Atom*> candidates(std::uint32_t support, unsigned degree) {
    std::lock_guard lock(mutex_);
    std::vector<const Atom*> out;
    for (const auto& atom : atoms_) {
      const MultiPoly& p = atom.poly();
      if ((p.support() & ~support) == 0 && p.degree() <= degree && p.size() > 1) out.push_back(&atom);
    }
    return out;
  }

  std::size_t size() {
    std::lock_guard lock(mutex_);
    return atoms_.size();
  }

 private:
  std::mutex mutex_;
  std::deque<Atom> atoms_;
  std::unordered_map<MultiPoly, const Atom*, PolyHash> index_;
};

AtomRegistry& registry() {
  static AtomRegistry reg;
  return reg;
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::vector<long>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long>& div = cyclotomic(d);
    const std::size_t dd = div.size() - 1;
    std::vector<long> quotient(poly.size() - dd, 0);
    for (std::size_t k = poly.size() - 1; k + 1 > dd; --k) {
      const long c = poly[k];
      quotient[k - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) poly[k - dd + j] -= c * div[j];
      if (k == dd) break;
    }
    poly = std::move(quotient);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

Monomial monomial_root(const Monomial& m, unsigned g) {
  Monomial r;
  for (int k = 0; k < kMaxVars; ++k) {
    if (const unsigned e = m.exponent(Var(k)); e != 0) r *= Monomial::of(Var(k), e / g);
  }
  return r;
}

unsigned exponent_gcd(const Monomial& m, unsigned g) {
  for (int k = 0; k < kMaxVars; ++k) g = std::gcd(g, m.exponent(Var(k)));
  return g;
}

/// Phi_d(u/v) * v^phi(d).
MultiPoly homogenized_cyclotomic(unsigned d, const Monomial& u, const Monomial& v) {
  const std::vector<long>& coeffs = cyclotomic(d);
  const unsigned deg = static_cast<unsigned>(coeffs.size() - 1);
  std::vector<MultiPoly::Term> terms;
  for (unsigned k = 0; k <= deg; ++k) {
    if (coeffs[k] != 0) terms.push_back({u.pow(k) * v.pow(deg - k), Rational(coeffs[k])});
  }
  return MultiPoly::from_terms(std::move(terms));
}

void add_factor(std::vector<DenFactor>& factors, const Atom* atom, int exp) {
  for (auto& f : factors) {
    if (f.atom == atom) {
      f.exp += exp;
      return;
    }
  }
  factors.push_back({atom, exp});
}

bool looks_irreducible(const MultiPoly& f) {
  if (f.degree() <= 1) return true;
  // Degree one in some variable with coprime coefficients.
  const std::uint32_t supp = f.support();
  for (int k = 0; k < kMaxVars; ++k) {
    if (!((supp >> k) & 1u)) continue;
    if (f.degree_in(Var(k)) != 1) continue;
    const auto coeffs = f.coefficients_in(Var(k));
    if (gcd(coeffs[0], coeffs[1]).is_constant()) return true;
  }
  return false;
}

void split_primitive(MultiPoly f, std::vector<DenFactor>& out, int exp);

/// Splits a primitive binomial with unit coefficient ratio into cyclotomic
/// factors. Returns false when the coefficients are not +-1 up to scale.
bool split_binomial(const MultiPoly& f, std::vector<DenFactor>& out, int exp) {
  const auto& lo = f.terms()[0];
  const auto& hi = f.terms()[1];
  const Rational ratio = lo.coeff / hi.coeff;
  const unsigned g = exponent_gcd(lo.mono, exponent_gcd(hi.mono, 0));
  if (ratio != 1 && ratio != -1) {
    add_factor(out, registry().intern(f, g == 1), exp);
    return true;
  }
  const Monomial u = monomial_root(hi.mono, g);
  const Monomial v = monomial_root(lo.mono, g);
  if (ratio == -1) {
    for (unsigned d = 1; d <= g; ++d) {
      if (g % d == 0) add_factor(out, registry().intern(homogenized_cyclotomic(d, u, v).primitive(), true), exp);
    }
  } else {
    for (unsigned d = 1; d <= 2 * g; ++d) {
      if ((2 * g) % d == 0 && g % d != 0) {
        add_factor(out, registry().intern(homogenized_cyclotomic(d, u, v).primitive(), true), exp);
      }
    }
  }
  return true;
}

/// Tries Phi_d(m) for monomials m whose power divides the leading monomial.
bool try_cyclotomic_candidates(MultiPoly& f, std::vector<DenFactor>& out, int exp) {
  const std::uint32_t supp = f.support();
  if (std::popcount(supp) > 3 || f.degree() > 96 || f.constant_term() == 0) return false;
  std::vector<int> vars;
  for (int k = 0; k < kMaxVars; ++k) {
    if ((supp >> k) & 1u) vars.push_back(k);
  }
  const Monomial lead = f.leading_term().mono;

  // Enumerate monomials dividing the leading monomial, by increasing degree.
  std::vector<Monomial> divisors{Monomial{}};
  for (int k : vars) {
    std::vector<Monomial> next;
    for (const auto& m : divisors) {
      for (unsigned e = 0; e <= lead.exponent(Var(k)); ++e) next.push_back(m * Monomial::of(Var(k), e));
    }
    divisors = std::move(next);
  }
  std::sort(divisors.begin(), divisors.end());

  bool found = false;
  for (const auto& m : divisors) {
    if (m.is_one() || exponent_gcd(m, 0) != 1) continue;
    for (unsigned d = 1; m.degree() * euler_phi(d) <= f.degree(); ++d) {
      if (!m.pow(euler_phi(d)).divides(f.leading_term().mono)) continue;
      const MultiPoly cand = homogenized_cyclotomic(d, m, Monomial{}).primitive();
      while (f.degree() >= cand.degree()) {
        auto quotient = f.divide_exact(cand);
        if (!quotient) break;
        add_factor(out, registry().intern(cand, true), exp);
        f = quotient->primitive();
        found = true;
      }
      if (f.is_constant()) return true;
    }
  }
  return found;
}

void split_primitive(MultiPoly f, std::vector<DenFactor>& out, int exp) {
  if (f.is_constant()) return;
  if (f.size() == 2) {
    split_binomial(f, out, exp);
    return;
  }
  if (const Atom* known = registry().find(f)) {
    add_factor(out, known, exp);
    return;
  }
  bool progressed = false;
  for (const Atom* atom : registry().candidates(f.support(), f.degree())) {
    while (f.degree() >= atom->poly().degree()) {
      auto quotient = f.divide_exact(atom->poly());
      if (!quotient) break;
      add_factor(out, atom, exp);
      f = quotient->primitive();
      progressed = true;
    }
    if (f.is_constant()) return;
  }
  if (progressed) {
    split_primitive(std::move(f), out, exp);
    return;
  }
  if (try_cyclotomic_candidates(f, out, exp)) {
    split_primitive(std::move(f), out, exp);
    return;
  }
  add_factor(out, registry().intern(f, looks_irreducible(f)), exp);
}

void sort_factors(std::vector<DenFactor>& factors) {
  std::erase_if(factors, [](const DenFactor& f) { return f.exp == 0; });
  std::sort(factors.begin(), factors.end(),
            [](const DenFactor& x, const DenFactor& y) { return x.atom->id() < y.atom->id(); });
}

MultiPoly expand(const std::vector<DenFactor>& factors) {
  MultiPoly r(1);
  for (const auto& f : factors) r *= f.atom->poly().pow(static_cast<unsigned>(f.exp));
  return r;
}

/// Cancels atoms of `den` that divide `num`.
void reduce(MultiPoly& num, std::vector<DenFactor>& den) {
  if (num.is_zero()) {
    den.clear();
    return;
  }
  bool changed = false;
  for (auto& f : den) {
    while (f.exp > 0) {
      auto quotient = num.divide_exact(f.atom->poly());
      if (!quotient) break;
      num = std::move(*quotient);
      --f.exp;
      changed = true;
    }
  }
  if (changed) std::erase_if(den, [](const DenFactor& f) { return f.exp == 0; });
}

/// Least common multiple of several atom products (max exponent per atom).
std::vector<DenFactor> lcm_factors(const std::vector<const std::vector<DenFactor>*>& dens) {
  std::vector<DenFactor> out;
  for (const auto* den : dens) {
    std::vector<DenFactor> merged;
    merged.reserve(out.size() + den->size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < out.size() || j < den->size()) {
      if (j == den->size() || (i < out.size() && out[i].atom->id() < (*den)[j].atom->id())) {
        merged.push_back(out[i++]);
      } else if (i == out.size() || (*den)[j].atom->id() < out[i].atom->id()) {
        merged.push_back((*den)[j++]);
      } else {
        merged.push_back({out[i].atom, std::max(out[i].exp, (*den)[j].exp)});
        ++i;
        ++j;
      }
    }
    out = std::move(merged);
  }
  return out;
}

/// Product of atom powers making `den` up to `lcm`.
MultiPoly cofactor(const std::vector<DenFactor>& lcm, const std::vector<DenFactor>& den) {
  MultiPoly r(1);
  std::size_t j = 0;
  for (const auto& f : lcm) {
    int e = f.exp;
    if (j < den.size() && den[j].atom == f.atom) e -= den[j++].exp;
    if (e > 0) r *= f.atom->poly().pow(static_cast<unsigned>(e));
  }
  return r;
}

}  // namespace

Factorization factor_into_atoms(const MultiPoly& p) {
  if (p.is_zero()) throw std::domain_error("division by zero");
  Factorization out;
  MultiPoly f = p.primitive();
  out.unit = p.leading_term().coeff / f.leading_term().coeff;
  const Monomial mono = f.monomial_gcd();
  if (!mono.is_one()) {
    for (int k = 0; k < kMaxVars; ++k) {
      if (const unsigned e = mono.exponent(Var(k)); e != 0) {
        add_factor(out.factors, registry().intern(MultiPoly::var(Var(k)), true), static_cast<int>(e));
      }
    }
    f = f.divide_exact(MultiPoly::monomial(mono)).value();
  }
  split_primitive(std::move(f), out.factors, 1);
  sort_factors(out.factors);
  return out;
}

std::size_t atom_count() { return registry().size(); }

RatFun::RatFun(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) return;
  MultiPoly n = num;
  MultiPoly d = den;
  if (!d.is_constant()) {
    const MultiPoly g = gcd(n, d);
    if (!g.is_constant()) {
      n = n.divide_exact(g).value();
      d = d.divide_exact(g).value();
    }
  }
  Factorization f = factor_into_atoms(d);
  num_ = n * Rational(1 / f.unit);
  den_ = std::move(f.factors);
  reduce(num_, den_);
}

MultiPoly RatFun::den() const { return expand(den_); }

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& x, const RatFun& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  RatFun r;
  if (x.den_ == y.den_) {
    r.num_ = x.num_ + y.num_;
    r.den_ = x.den_;
  } else {
    r.den_ = lcm_factors({&x.den_, &y.den_});
    r.num_ = x.num_ * cofactor(r.den_, x.den_) + y.num_ * cofactor(r.den_, y.den_);
  }
  reduce(r.num_, r.den_);
  return r;
}

RatFun operator-(const RatFun& x, const RatFun& y) { return x + (-y); }

RatFun operator*(const RatFun& x, const RatFun& y) {
  if (x.is_zero() || y.is_zero()) return RatFun{};
  if (x.is_constant()) return y.scaled(x.num_.constant_term());
  if (y.is_constant()) return x.scaled(y.num_.constant_term());
  MultiPoly nx = x.num_;
  MultiPoly ny = y.num_;
  std::vector<DenFactor> dx = x.den_;
  std::vector<DenFactor> dy = y.den_;
  reduce(nx, dy);
  reduce(ny, dx);
  RatFun r;
  r.num_ = nx * ny;
  r.den_ = std::move(dx);
  for (const auto& f : dy) add_factor(r.den_, f.atom, f.exp);
  sort_factors(r.den_);
  return r;
}

RatFun RatFun::scaled(const Rational& s) const {
  if (s == 0) return RatFun{};
  RatFun r = *this;
  r.num_ *= s;
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero rational function");
  Factorization f = factor_into_atoms(num_);
  RatFun r;
  r.num_ = expand(den_) * Rational(1 / f.unit);
  r.den_ = std::move(f.factors);
  reduce(r.num_, r.den_);
  return r;
}

RatFun RatFun::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatFun r;
  r.num_ = num_.pow(static_cast<unsigned>(k));
  if (k > 0) {
    r.den_ = den_;
    for (auto& f : r.den_) f.exp *= k;
  }
  return r;
}

RatFun RatFun::sum(std::span<const RatFun> terms) {
  // Group numerators by denominator first; most sums share a few.
  std::vector<std::pair<std::vector<DenFactor>, MultiPoly>> groups;
  for (const auto& term : terms) {
    if (term.is_zero()) continue;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == term.den_; });
    if (it == groups.end()) {
      groups.emplace_back(term.den_, term.num_);
    } else {
      it->second += term.num_;
    }
  }
  RatFun r;
  if (groups.empty()) return r;
  if (groups.size() == 1) {
    r.num_ = std::move(groups[0].second);
    r.den_ = std::move(groups[0].first);
  } else {
    std::vector<const std::vector<DenFactor>*> dens;
    for (const auto& g : groups) dens.push_back(&g.first);
    r.den_ = lcm_factors(dens);
    for (const auto& g : groups) {
      if (!g.second.is_zero()) r.num_ += g.second * cofactor(r.den_, g.first);
    }
  }
  reduce(r.num_, r.den_);
  return r;
}

RatFun canonicalize(const RatFun& r) {
  const auto& den = r.den_factors();
  if (std::all_of(den.begin(), den.end(), [](const DenFactor& f) { return f.atom->irreducible(); })) return r;
  // Opaque factors may share a factor with the numerator; the general
  // constructor cancels the full GCD.
  return RatFun(r.num(), r.den());
}

std::pair<MultiPoly, MultiPoly> canonical_parts(const RatFun& r) {
  const RatFun c = canonicalize(r);
  return {c.num(), c.den()};
}

RatFun substitute(const MultiPoly& p, const Bindings& bindings) {
  std::uint32_t bound = 0;
  for (const auto& [v, value] : bindings) bound |= 1u << v.index();
  if ((p.support() & bound) == 0) return RatFun(p);

  MultiPoly base = p;
  std::vector<std::pair<Var, const RatFun*>> active;
  for (const auto& [v, value] : bindings) {
    if (value.is_zero()) {
      base = base.drop_var(v);
    } else {
      active.emplace_back(v, &value);
    }
  }
  if (active.empty()) return RatFun(base);

  // Group terms by their exponents in the bound variables.
  std::map<Monomial, std::vector<MultiPoly::Term>> groups;
  for (const auto& term : base.terms()) {
    Monomial key;
    Monomial rest = term.mono;
    for (const auto& [v, value] : active) {
      if (const unsigned e = term.mono.exponent(v); e != 0) {
        key *= Monomial::of(v, e);
        rest = rest.without(v);
      }
    }
    groups[key].push_back({rest, term.coeff});
  }

  std::vector<std::vector<RatFun>> powers(active.size(), std::vector<RatFun>{RatFun(1)});
  auto power = [&](std::size_t i, unsigned e) -> const RatFun& {
    auto& cache = powers[i];
    while (cache.size() <= e) cache.push_back(cache.back() * *active[i].second);
    return cache[e];
  };

  std::vector<RatFun> parts;
  parts.reserve(groups.size());
  for (auto& [key, terms] : groups) {
    RatFun part(MultiPoly::from_terms(std::move(terms)));
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (const unsigned e = key.exponent(active[i].first); e != 0) part = part * power(i, e);
    }
    parts.push_back(std::move(part));
  }
  return RatFun::sum(parts);
}

RatFun substitute(const RatFun& r, const Bindings& bindings) {
  RatFun result = substitute(r.num(), bindings);
  for (const auto& f : r.den_factors()) {
    const RatFun value = substitute(f.atom->poly(), bindings);
    if (value.is_zero()) throw std::domain_error("denominator vanishes under substitution");
    result = result * value.inverse().pow(f.exp);
  }
  return result;
}

}  // namespace qtpieri
