#include "qtpieri/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>

namespace qtpieri {

MultiPoly::MultiPoly(long constant) {
  if (constant != 0) terms_.push_back({Monomial{}, Rational(constant)});
}

MultiPoly::MultiPoly(const Rational& constant) {
  if (constant != 0) terms_.push_back({Monomial{}, constant});
}

MultiPoly MultiPoly::var(Var v, unsigned exponent) { return monomial(Monomial::of(v, exponent)); }

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& coeff) {
  MultiPoly p;
  if (coeff != 0) p.terms_.push_back({m, coeff});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });
  MultiPoly p;
  p.terms_.reserve(terms.size());
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == term.mono) {
      p.terms_.back().coeff += term.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(term));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
  return 0;
}

unsigned MultiPoly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& term : terms_) d = std::max(d, term.mono.exponent(v));
  return d;
}

std::uint32_t MultiPoly::support() const {
  std::uint32_t mask = 0;
  for (const auto& term : terms_) mask |= term.mono.support();
  return mask;
}

Monomial MultiPoly::monomial_gcd() const {
  if (terms_.empty()) return Monomial{};
  Monomial g = terms_.front().mono;
  for (const auto& term : terms_) {
    if (g.is_one()) break;
    g = Monomial::gcd(g, term.mono);
  }
  return g;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& term : r.terms_) term.coeff = -term.coeff;
  return r;
}

namespace {

template <bool Subtract>
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& x,
                                         const std::vector<MultiPoly::Term>& y) {
  std::vector<MultiPoly::Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].mono < y[j].mono) {
      out.push_back(x[i++]);
    } else if (y[j].mono < x[i].mono) {
      if constexpr (Subtract) {
        out.push_back({y[j].mono, -y[j].coeff});
      } else {
        out.push_back(y[j]);
      }
      ++j;
    } else {
      Rational c = Subtract ? Rational(x[i].coeff - y[j].coeff) : Rational(x[i].coeff + y[j].coeff);
      if (c != 0) out.push_back({x[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < x.size(); ++i) out.push_back(x[i]);
  for (; j < y.size(); ++j) {
    if constexpr (Subtract) {
      out.push_back({y[j].mono, -y[j].coeff});
    } else {
      out.push_back(y[j]);
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  terms_ = merge_terms<false>(terms_, other.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms<true>(terms_, other.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else if (scalar != 1) {
    for (auto& term : terms_) term.coeff *= scalar;
  }
  return *this;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const Rational& c) const {
  MultiPoly r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& term : terms_) r.terms_.push_back({term.mono * m, term.coeff * c});
  return r;
}

namespace {

/// Integer coefficients of p times `scale`, where scale is the lcm of the
/// coefficient denominators.
struct IntegerForm {
  std::vector<Integer> owned;
  std::vector<const __mpz_struct*> coeffs;
  Integer scale = 1;
};

IntegerForm integer_form(const std::vector<MultiPoly::Term>& terms) {
  IntegerForm out;
  for (const auto& term : terms) {
    if (mpz_cmp_ui(term.coeff.get_den_mpz_t(), 1) != 0) {
      mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), term.coeff.get_den_mpz_t());
    }
  }
  out.coeffs.reserve(terms.size());
  if (out.scale == 1) {
    for (const auto& term : terms) out.coeffs.push_back(term.coeff.get_num_mpz_t());
    return out;
  }
  out.owned.reserve(terms.size());
  for (const auto& term : terms) {
    Integer c = out.scale / term.coeff.get_den();
    c *= term.coeff.get_num();
    out.owned.push_back(std::move(c));
  }
  for (const auto& c : out.owned) out.coeffs.push_back(c.get_mpz_t());
  return out;
}

Rational scaled_back(const Integer& c, const Integer& scale) {
  Rational r(c, scale);
  if (scale != 1) r.canonicalize();
  return r;
}

}  // namespace

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  if (x.terms_.empty() || y.terms_.empty()) return MultiPoly{};
  const MultiPoly& small = x.terms_.size() <= y.terms_.size() ? x : y;
  const MultiPoly& large = x.terms_.size() <= y.terms_.size() ? y : x;
  if (small.terms_.size() == 1) return large.mul_term(small.terms_[0].mono, small.terms_[0].coeff);

  const IntegerForm a = integer_form(small.terms_);
  const IntegerForm b = integer_form(large.terms_);
  const Integer scale = a.scale * b.scale;
  const std::size_t work = small.terms_.size() * large.terms_.size();

  // Dense accumulation over the exponent box when it is not much larger
  // than the number of term products.
  const std::uint32_t supp = small.support() | large.support();
  std::vector<int> vars;
  std::vector<std::size_t> stride;
  std::size_t box = 1;
  for (int k = 0; k < kMaxVars && box <= 4 * work + 64; ++k) {
    if (!((supp >> k) & 1u)) continue;
    vars.push_back(k);
    stride.push_back(box);
    box *= small.degree_in(Var(k)) + large.degree_in(Var(k)) + 1;
  }
  if (box <= 4 * work + 64) {
    auto index = [&](const Monomial& m) {
      std::size_t idx = 0;
      for (std::size_t v = 0; v < vars.size(); ++v) idx += m.exponent(Var(vars[v])) * stride[v];
      return idx;
    };
    std::vector<std::size_t> ia(small.terms_.size());
    std::vector<std::size_t> ib(large.terms_.size());
    for (std::size_t i = 0; i < ia.size(); ++i) ia[i] = index(small.terms_[i].mono);
    for (std::size_t j = 0; j < ib.size(); ++j) ib[j] = index(large.terms_[j].mono);
    std::vector<Integer> acc(box);
    std::vector<std::uint8_t> touched(box, 0);
    std::vector<std::pair<Monomial, std::size_t>> slots;
    for (std::size_t i = 0; i < ia.size(); ++i) {
      for (std::size_t j = 0; j < ib.size(); ++j) {
        const std::size_t idx = ia[i] + ib[j];
        if (!touched[idx]) {
          touched[idx] = 1;
          slots.emplace_back(small.terms_[i].mono * large.terms_[j].mono, idx);
        }
        mpz_addmul(acc[idx].get_mpz_t(), a.coeffs[i], b.coeffs[j]);
      }
    }
    std::sort(slots.begin(), slots.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    MultiPoly r;
    r.terms_.reserve(slots.size());
    for (const auto& [mono, idx] : slots) {
      if (acc[idx] != 0) r.terms_.push_back({mono, scaled_back(acc[idx], scale)});
    }
    return r;
  }

  // Johnson's heap merge: one stream per term of `small`, each stream walks
  // `large` in ascending order, so products pop out sorted.
  struct Entry {
    Monomial mono;
    std::uint32_t i;
    std::uint32_t j;
  };
  auto cmp = [](const Entry& p, const Entry& q) { return q.mono < p.mono; };
  std::vector<Entry> storage;
  storage.reserve(small.terms_.size());
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp, std::move(storage));
  for (std::uint32_t i = 0; i < small.terms_.size(); ++i) {
    heap.push({small.terms_[i].mono * large.terms_[0].mono, i, 0});
  }
  MultiPoly r;
  Integer current;
  Monomial current_mono;
  bool open = false;
  auto flush = [&] {
    if (open && current != 0) r.terms_.push_back({current_mono, scaled_back(current, scale)});
    current = 0;
  };
  while (!heap.empty()) {
    Entry e = heap.top();
    heap.pop();
    if (!open || e.mono != current_mono) {
      flush();
      current_mono = e.mono;
      open = true;
    }
    mpz_addmul(current.get_mpz_t(), a.coeffs[e.i], b.coeffs[e.j]);
    if (e.j + 1 < large.terms_.size()) {
      ++e.j;
      e.mono = small.terms_[e.i].mono * large.terms_[e.j].mono;
      heap.push(e);
    }
  }
  flush();
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & kPrime) + static_cast<std::uint64_t>(p >> 61);
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

/// Residue of c modulo kPrime; nullopt when the denominator vanishes.
std::optional<std::uint64_t> residue(const Rational& c) {
  const std::uint64_t num = mpz_fdiv_ui(c.get_num_mpz_t(), kPrime);
  if (mpz_cmp_ui(c.get_den_mpz_t(), 1) == 0) return num;
  const std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  return mul_mod(num, pow_mod(den, kPrime - 2));
}

/// Dense exponent box of a dividend, with its monomials listed in
/// decreasing term order.
struct Box {
  std::vector<int> vars;
  std::vector<unsigned> dims;
  std::vector<std::size_t> stride;
  std::size_t size = 1;
  std::vector<std::pair<Monomial, std::size_t>> descending;

  std::size_t index(const Monomial& m) const {
    std::size_t idx = 0;
    for (std::size_t v = 0; v < vars.size(); ++v) idx += m.exponent(Var(vars[v])) * stride[v];
    return idx;
  }
};

constexpr std::size_t kMaxBox = 1u << 16;

/// Boxes are shared by shape; the dividends in one computation tend to
/// repeat shapes.
const Box* box_for(const MultiPoly& f) {
  std::vector<unsigned> key;
  const std::uint32_t supp = f.support();
  std::size_t size = 1;
  for (int k = 0; k < kMaxVars; ++k) {
    if (!((supp >> k) & 1u)) continue;
    const unsigned d = f.degree_in(Var(k));
    key.push_back(static_cast<unsigned>(k));
    key.push_back(d);
    size *= d + 1;
    if (size > kMaxBox) return nullptr;
  }
  thread_local std::map<std::vector<unsigned>, Box> cache;
  if (cache.size() > 4096) cache.clear();
  auto [it, inserted] = cache.try_emplace(key);
  Box& box = it->second;
  if (!inserted) return &box;
  for (std::size_t i = 0; i < key.size(); i += 2) {
    box.vars.push_back(static_cast<int>(key[i]));
    box.dims.push_back(key[i + 1] + 1);
    box.stride.push_back(box.size);
    box.size *= key[i + 1] + 1;
  }
  box.descending.reserve(box.size);
  std::vector<unsigned> e(box.vars.size(), 0);
  for (std::size_t idx = 0; idx < box.size; ++idx) {
    Monomial m;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] != 0) m *= Monomial::of(Var(box.vars[v]), e[v]);
    }
    box.descending.emplace_back(m, idx);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (++e[v] < box.dims[v]) break;
      e[v] = 0;
    }
  }
  std::sort(box.descending.begin(), box.descending.end(),
            [](const auto& x, const auto& y) { return y.first < x.first; });
  return &box;
}

/// Per-variable headroom check for a quotient monomial.
bool fits(const Monomial& qm, const Box& box, const std::vector<unsigned>& divisor_degrees) {
  for (std::size_t v = 0; v < box.vars.size(); ++v) {
    if (qm.exponent(Var(box.vars[v])) + divisor_degrees[v] >= box.dims[v]) return false;
  }
  return true;
}

/// Division modulo a prime; false proves that divisor does not divide f.
bool divides_mod_p(const MultiPoly& f, const MultiPoly& g, const Box& box, const std::vector<unsigned>& gdeg) {
  std::vector<std::uint64_t> rem(box.size, 0);
  for (const auto& term : f.terms()) {
    const auto r = residue(term.coeff);
    if (!r) return true;
    rem[box.index(term.mono)] = *r;
  }
  std::vector<std::pair<std::size_t, std::uint64_t>> gterms;
  for (const auto& term : g.terms()) {
    const auto r = residue(term.coeff);
    if (!r) return true;
    gterms.emplace_back(box.index(term.mono), *r);
  }
  const std::uint64_t lc = gterms.back().second;
  if (lc == 0) return true;
  const std::uint64_t inv_lc = pow_mod(lc, kPrime - 2);
  const Monomial& lead = g.leading_term().mono;
  const std::size_t lead_idx = gterms.back().first;
  for (const auto& [mono, idx] : box.descending) {
    if (rem[idx] == 0) continue;
    if (!lead.divides(mono)) return false;
    const Monomial qm = mono / lead;
    if (!fits(qm, box, gdeg)) return false;
    const std::uint64_t c = mul_mod(rem[idx], inv_lc);
    const std::size_t base = idx - lead_idx;
    for (const auto& [gidx, gc] : gterms) {
      std::uint64_t& slot = rem[base + gidx];
      const std::uint64_t sub = mul_mod(c, gc);
      slot = slot >= sub ? slot - sub : slot + kPrime - sub;
    }
  }
  return true;
}

/// Exact division over the integers for a divisor with integer
/// coefficients and unit leading coefficient.
std::optional<std::vector<MultiPoly::Term>> divide_dense(const MultiPoly& f, const MultiPoly& g, const Box& box,
                                                         const std::vector<unsigned>& gdeg) {
  Integer scale = 1;
  for (const auto& term : f.terms()) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), term.coeff.get_den_mpz_t());
  }
  std::vector<Integer> rem(box.size);
  for (const auto& term : f.terms()) {
    Integer& slot = rem[box.index(term.mono)];
    slot = scale / term.coeff.get_den();
    slot *= term.coeff.get_num();
  }
  std::vector<std::pair<std::size_t, const __mpz_struct*>> gterms;
  for (const auto& term : g.terms()) gterms.emplace_back(box.index(term.mono), term.coeff.get_num_mpz_t());
  const bool negate = g.leading_term().coeff < 0;
  const Monomial& lead = g.leading_term().mono;
  const std::size_t lead_idx = gterms.back().first;

  std::vector<MultiPoly::Term> quotient;
  Integer c;
  for (const auto& [mono, idx] : box.descending) {
    if (rem[idx] == 0) continue;
    if (!lead.divides(mono)) return std::nullopt;
    const Monomial qm = mono / lead;
    if (!fits(qm, box, gdeg)) return std::nullopt;
    c = negate ? Integer(-rem[idx]) : rem[idx];
    const std::size_t base = idx - lead_idx;
    for (const auto& [gidx, gc] : gterms) mpz_submul(rem[base + gidx].get_mpz_t(), c.get_mpz_t(), gc);
    Rational qc(c, scale);
    if (scale != 1) qc.canonicalize();
    quotient.push_back({qm, std::move(qc)});
  }
  std::reverse(quotient.begin(), quotient.end());
  return quotient;
}

}  // namespace

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (terms_.empty()) return MultiPoly{};

  const Term& lead = divisor.leading_term();
  if (divisor.terms_.size() == 1) {
    MultiPoly q;
    q.terms_.reserve(terms_.size());
    for (const auto& term : terms_) {
      if (!lead.mono.divides(term.mono)) return std::nullopt;
      q.terms_.push_back({term.mono / lead.mono, term.coeff / lead.coeff});
    }
    return q;
  }

  // Leading and trailing terms of a product are products of the leading and
  // trailing terms of the factors.
  if (!lead.mono.divides(leading_term().mono)) return std::nullopt;
  if (!divisor.trailing_term().mono.divides(trailing_term().mono)) return std::nullopt;
  if (degree() < divisor.degree()) return std::nullopt;
  const std::uint32_t dsupp = divisor.support();
  if ((dsupp & ~support()) != 0) return std::nullopt;
  for (int k = 0; k < kMaxVars; ++k) {
    if ((dsupp >> k) & 1u) {
      if (degree_in(Var(k)) < divisor.degree_in(Var(k))) return std::nullopt;
    }
  }

  if (const Box* box = box_for(*this)) {
    std::vector<unsigned> gdeg;
    for (int v : box->vars) gdeg.push_back(divisor.degree_in(Var(v)));
    if (!divides_mod_p(*this, divisor, *box, gdeg)) return std::nullopt;
    const bool integral = std::all_of(divisor.terms_.begin(), divisor.terms_.end(), [](const Term& t) {
      return mpz_cmp_ui(t.coeff.get_den_mpz_t(), 1) == 0;
    });
    if (integral && (lead.coeff == 1 || lead.coeff == -1)) {
      auto quotient = divide_dense(*this, divisor, *box, gdeg);
      if (!quotient) return std::nullopt;
      MultiPoly q;
      q.terms_ = std::move(*quotient);
      return q;
    }
  }

  std::map<Monomial, Rational, std::greater<>> rem;
  for (const auto& term : terms_) rem.emplace_hint(rem.end(), term.mono, term.coeff);

  std::vector<Term> quotient;
  Rational qc;
  Rational delta;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead.mono.divides(top->first)) return std::nullopt;
    const Monomial qm = top->first / lead.mono;
    qc = top->second / lead.coeff;
    rem.erase(top);
    for (std::size_t s = 0; s + 1 < divisor.terms_.size(); ++s) {
      const Term& dt = divisor.terms_[s];
      mpq_mul(delta.get_mpq_t(), qc.get_mpq_t(), dt.coeff.get_mpq_t());
      auto [it, inserted] = rem.try_emplace(qm * dt.mono);
      it->second -= delta;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back({qm, qc});
  }
  std::reverse(quotient.begin(), quotient.end());
  MultiPoly q;
  q.terms_ = std::move(quotient);
  return q;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return 0;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& term : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), term.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), term.coeff.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (leading_term().coeff < 0) c = -c;
  MultiPoly r = *this;
  if (c != 1) {
    for (auto& term : r.terms_) term.coeff /= c;
  }
  return r;
}

MultiPoly MultiPoly::drop_var(Var v) const {
  MultiPoly r;
  for (const auto& term : terms_) {
    if (term.mono.exponent(v) == 0) r.terms_.push_back(term);
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
  for (const auto& term : terms_) {
    buckets[term.mono.exponent(v)].push_back({term.mono.without(v), term.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& bucket : buckets) out.push_back(from_terms(std::move(bucket)));
  return out;
}

MultiPoly MultiPoly::from_coefficients(Var v, const std::vector<MultiPoly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Monomial shift = Monomial::of(v, static_cast<unsigned>(k));
    for (const auto& term : coeffs[k].terms()) terms.push_back({term.mono * shift, term.coeff});
  }
  return from_terms(std::move(terms));
}

std::size_t MultiPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& term : terms_) {
    const std::size_t th = term.mono.hash() ^ (mpz_get_ui(term.coeff.get_num_mpz_t()) * 0x9e3779b97f4a7c15ull) ^
                           mpz_get_ui(term.coeff.get_den_mpz_t());
    h = h * 1099511628211ull ^ th;
  }
  return h;
}

}  // namespace qtpieri
