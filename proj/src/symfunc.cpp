#include "qtpieri/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "qtpieri/render.hpp"

namespace qtpieri {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

void require_same_cap(const SymFunc& f, const SymFunc& g) {
  if (f.cap() != g.cap()) throw std::invalid_argument("symmetric functions with different degree caps");
}

Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix invert(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular transition matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = 1 / a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] *= scale;
      inv[col][k] *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[row][k] -= factor * a[col][k];
        inv[row][k] -= factor * inv[col][k];
      }
    }
  }
  return inv;
}

/// Number of ways to distribute the parts of rho into rows with sums
/// lambda: the coefficient of m_lambda in p_rho.
long count_fillings(const std::vector<int>& rho, std::size_t next, std::vector<int>& room) {
  if (next == rho.size()) {
    return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; }) ? 1 : 0;
  }
  long total = 0;
  for (auto& r : room) {
    if (r < rho[next]) continue;
    r -= rho[next];
    total += count_fillings(rho, next + 1, room);
    r += rho[next];
  }
  return total;
}

Partition merge_parts(const Partition& x, const Partition& y) {
  std::vector<int> parts = x.parts();
  parts.insert(parts.end(), y.parts().begin(), y.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

/// Row r of basis e or h: the one-part generator of degree r in the
/// p-basis, as (rho, coefficient) pairs.
std::vector<std::pair<Partition, Rational>> generator_in_p(Basis basis, int r) {
  std::vector<std::pair<Partition, Rational>> out;
  for (const auto& rho : partitions_of(r)) {
    Rational c(Integer(1), z_lambda(rho));
    if (basis == Basis::kE && (r - rho.length()) % 2 != 0) c = -c;
    out.emplace_back(rho, c);
  }
  return out;
}

Matrix build_to_p(Basis basis, int n);

Matrix p_to_m(int n) {
  const auto& parts = partitions_of(n);
  Matrix m(parts.size(), std::vector<Rational>(parts.size(), 0));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      std::vector<int> room = parts[j].parts();
      m[i][j] = count_fillings(parts[i].parts(), 0, room);
    }
  }
  return m;
}

Matrix build_to_p(Basis basis, int n) {
  const auto& parts = partitions_of(n);
  switch (basis) {
    case Basis::kP:
      return identity(parts.size());
    case Basis::kM:
      return invert(p_to_m(n));
    case Basis::kE:
    case Basis::kH: {
      Matrix m(parts.size(), std::vector<Rational>(parts.size(), 0));
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::map<Partition, Rational> acc{{Partition{}, Rational(1)}};
        for (int r : parts[i].parts()) {
          std::map<Partition, Rational> next;
          for (const auto& [rho, c] : acc) {
            for (const auto& [sigma, d] : generator_in_p(basis, r)) next[merge_parts(rho, sigma)] += c * d;
          }
          acc = std::move(next);
        }
        for (const auto& [rho, c] : acc) m[i][partition_index(rho)] = c;
      }
      return m;
    }
    default:
      throw std::invalid_argument("transition matrices exist only for the bases m, p, e, h");
  }
}

struct MatrixCache {
  std::mutex mutex;
  std::map<std::pair<int, int>, Matrix> to_p;
  std::map<std::pair<int, int>, Matrix> from_p;
};

MatrixCache& matrix_cache() {
  static MatrixCache cache;
  return cache;
}

/// Dense coefficient vectors per degree.
std::map<int, std::vector<RatFun>> by_degree(const SymFunc& f) {
  std::map<int, std::vector<RatFun>> out;
  for (const auto& [lambda, c] : f.coeffs()) {
    auto& v = out[lambda.size()];
    if (v.empty()) v.resize(partitions_of(lambda.size()).size());
    v[partition_index(lambda)] = c;
  }
  return out;
}

/// w = v * M for a rational matrix M.
std::vector<RatFun> times_matrix(const std::vector<RatFun>& v, const Matrix& m) {
  const std::size_t n = v.size();
  std::vector<RatFun> out(n);
  std::vector<RatFun> terms;
  for (std::size_t j = 0; j < n; ++j) {
    terms.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (!v[i].is_zero() && m[i][j] != 0) terms.push_back(v[i].scaled(m[i][j]));
    }
    out[j] = RatFun::sum(terms);
  }
  return out;
}

}  // namespace

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::kM: return "m";
    case Basis::kP: return "p";
    case Basis::kE: return "e";
    case Basis::kH: return "h";
    case Basis::kMacP: return "P";
    case Basis::kMacQ: return "Q";
  }
  return "?";
}

SymFunc SymFunc::one(int cap, Basis basis) { return element(basis, Partition{}, cap); }

SymFunc SymFunc::element(Basis basis, const Partition& lambda, int cap) {
  SymFunc f(basis, cap);
  f.add(lambda, RatFun(1));
  return f;
}

RatFun SymFunc::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? RatFun{} : it->second;
}

void SymFunc::add(const Partition& lambda, const RatFun& c) {
  if (lambda.size() > cap_ || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& [lambda, c] : r.coeffs_) c = -c;
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  require_same_cap(*this, other);
  if (basis_ != other.basis_) throw std::invalid_argument("adding symmetric functions in different bases");
  for (const auto& [lambda, c] : other.coeffs_) add(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) { return *this += -other; }

SymFunc SymFunc::scaled(const RatFun& c) const {
  SymFunc r(basis_, cap_);
  if (c.is_zero()) return r;
  for (const auto& [lambda, x] : coeffs_) r.coeffs_.emplace(lambda, x * c);
  return r;
}

SymFunc SymFunc::component(int d) const {
  SymFunc r(basis_, cap_);
  for (const auto& [lambda, c] : coeffs_) {
    if (lambda.size() == d) r.coeffs_.emplace(lambda, c);
  }
  return r;
}

SymFunc SymFunc::truncated(int d) const { return with_cap(std::min(d, cap_)); }

SymFunc SymFunc::with_cap(int cap) const {
  SymFunc r(basis_, cap);
  for (const auto& [lambda, c] : coeffs_) {
    if (lambda.size() <= cap) r.coeffs_.emplace(lambda, c);
  }
  return r;
}

bool operator==(const SymFunc& x, const SymFunc& y) {
  if (x.basis_ != y.basis_) throw std::invalid_argument("comparing symmetric functions in different bases");
  if (x.coeffs_.size() != y.coeffs_.size()) return false;
  for (auto i = x.coeffs_.begin(), j = y.coeffs_.begin(); i != x.coeffs_.end(); ++i, ++j) {
    if (i->first != j->first || !(i->second == j->second)) return false;
  }
  return true;
}

const Matrix& to_power_sums(Basis from, int n) {
  MatrixCache& cache = matrix_cache();
  const std::pair key{static_cast<int>(from), n};
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.to_p.find(key); it != cache.to_p.end()) return it->second;
  }
  Matrix m = build_to_p(from, n);
  std::lock_guard lock(cache.mutex);
  return cache.to_p.try_emplace(key, std::move(m)).first->second;
}

const Matrix& from_power_sums(Basis to, int n) {
  MatrixCache& cache = matrix_cache();
  const std::pair key{static_cast<int>(to), n};
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.from_p.find(key); it != cache.from_p.end()) return it->second;
  }
  Matrix m = to == Basis::kM ? p_to_m(n) : invert(to_power_sums(to, n));
  std::lock_guard lock(cache.mutex);
  return cache.from_p.try_emplace(key, std::move(m)).first->second;
}

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  auto supported = [](Basis b) { return b == Basis::kM || b == Basis::kP || b == Basis::kE || b == Basis::kH; };
  if (!supported(f.basis()) || !supported(target)) {
    throw std::invalid_argument("convert handles the bases m, p, e, h; use the Macdonald cache for P and Q");
  }
  SymFunc out(target, f.cap());
  for (auto& [n, v] : by_degree(f)) {
    std::vector<RatFun> w = f.basis() == Basis::kP ? v : times_matrix(v, to_power_sums(f.basis(), n));
    if (target != Basis::kP) w = times_matrix(w, from_power_sums(target, n));
    const auto& parts = partitions_of(n);
    for (std::size_t k = 0; k < w.size(); ++k) out.add(parts[k], w[k]);
  }
  return out;
}

const std::vector<std::pair<Partition, long>>& monomial_product(const Partition& lambda, const Partition& mu) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, Partition>, std::vector<std::pair<Partition, long>>> cache;
  const auto key = lambda <= mu ? std::pair{lambda, mu} : std::pair{mu, lambda};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const Partition& x = key.first;
  const Partition& y = key.second;
  std::vector<std::pair<Partition, long>> out;
  for (const auto& nu : partitions_of(x.size() + y.size())) {
    const int len = nu.length();
    if (len < std::max(x.length(), y.length()) || len > x.length() + y.length()) continue;
    std::vector<int> alpha(static_cast<std::size_t>(len), 0);
    std::copy(x.parts().begin(), x.parts().end(), alpha.begin());
    std::sort(alpha.begin(), alpha.end());
    std::vector<int> target = y.parts();
    target.resize(static_cast<std::size_t>(len), 0);
    long count = 0;
    std::vector<int> beta(static_cast<std::size_t>(len));
    do {
      bool ok = true;
      for (int i = 0; i < len && ok; ++i) {
        beta[static_cast<std::size_t>(i)] = nu.part(i + 1) - alpha[static_cast<std::size_t>(i)];
        ok = beta[static_cast<std::size_t>(i)] >= 0;
      }
      if (!ok) continue;
      std::sort(beta.begin(), beta.end(), std::greater<>());
      if (beta == target) ++count;
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    if (count != 0) out.emplace_back(nu, count);
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(out)).first->second;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  require_same_cap(f, g);
  const int cap = f.cap();
  std::map<Partition, std::vector<RatFun>> acc;
  if (f.basis() == Basis::kP && g.basis() == Basis::kP) {
    for (const auto& [x, a] : f.coeffs()) {
      for (const auto& [y, b] : g.coeffs()) {
        if (x.size() + y.size() <= cap) acc[merge_parts(x, y)].push_back(a * b);
      }
    }
  } else {
    const SymFunc fm = convert(f, Basis::kM);
    const SymFunc gm = convert(g, Basis::kM);
    for (const auto& [x, a] : fm.coeffs()) {
      for (const auto& [y, b] : gm.coeffs()) {
        if (x.size() + y.size() > cap) continue;
        const RatFun ab = a * b;
        for (const auto& [nu, count] : monomial_product(x, y)) acc[nu].push_back(ab.scaled(count));
      }
    }
  }
  SymFunc out(f.basis() == Basis::kP && g.basis() == Basis::kP ? Basis::kP : Basis::kM, cap);
  for (auto& [nu, terms] : acc) out.add(nu, RatFun::sum(terms));
  return out;
}

Integer z_lambda(const Partition& lambda) {
  Integer z = 1;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto mult = static_cast<unsigned long>(j - i);
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), mult);
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts[i]), mult);
    z *= f * pw;
    i = j;
  }
  return z;
}

RatFun power_sum_norm(const Partition& rho) {
  static std::mutex mutex;
  static std::map<Partition, RatFun> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(rho); it != cache.end()) return it->second;
  }
  RatFun w(Rational(z_lambda(rho)));
  for (int r : rho.parts()) {
    const auto ur = static_cast<unsigned>(r);
    w *= RatFun(1 - MultiPoly::var(kQ, ur), 1 - MultiPoly::var(kT, ur));
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(rho, w).first->second;
}

RatFun inner_product_qt(const SymFunc& f, const SymFunc& g) {
  require_same_cap(f, g);
  const SymFunc fp = convert(f, Basis::kP);
  const SymFunc gp = convert(g, Basis::kP);
  std::vector<RatFun> terms;
  for (const auto& [rho, a] : fp.coeffs()) {
    auto it = gp.coeffs().find(rho);
    if (it != gp.coeffs().end()) terms.push_back(a * it->second * power_sum_norm(rho));
  }
  return RatFun::sum(terms);
}

SymFunc substitute(const SymFunc& f, const Bindings& bindings) {
  SymFunc out(f.basis(), f.cap());
  for (const auto& [lambda, c] : f.coeffs()) out.add(lambda, substitute(c, bindings));
  return out;
}

Alphabet Alphabet::difference(const RatFun& a, const RatFun& b, Var base) {
  auto state = std::make_shared<State>();
  state->name = "(" + to_text(a) + " - " + to_text(b) + ")/(1 - " + base.name() + ")";
  RatFun ar = a;
  RatFun br = b;
  for (int r = 1; r <= kMaxDegree; ++r) {
    const RatFun diff = ar - br;
    state->values.push_back(diff.is_zero() ? RatFun{}
                                           : diff * RatFun(MultiPoly(1), 1 - MultiPoly::var(base, static_cast<unsigned>(r))));
    ar *= a;
    br *= b;
  }
  return Alphabet(std::move(state));
}

Alphabet Alphabet::minus_one() {
  auto state = std::make_shared<State>();
  state->name = "-1";
  state->values.assign(kMaxDegree, RatFun(-1));
  return Alphabet(std::move(state));
}

Alphabet Alphabet::single(const RatFun& u) {
  auto state = std::make_shared<State>();
  state->name = "single(" + to_text(u) + ")";
  RatFun ur = u;
  for (int r = 1; r <= kMaxDegree; ++r) {
    state->values.push_back(ur);
    ur *= u;
  }
  return Alphabet(std::move(state));
}

const RatFun& Alphabet::p(int r) const {
  if (r < 1 || r > kMaxDegree) throw std::out_of_range("alphabet evaluated beyond its degree range");
  return state_->values[static_cast<std::size_t>(r - 1)];
}

RatFun Alphabet::p(const Partition& rho) const {
  RatFun v(1);
  for (int r : rho.parts()) {
    v *= p(r);
    if (v.is_zero()) break;
  }
  return v;
}

RatFun specialize(const SymFunc& f, const Alphabet& alphabet) {
  const SymFunc fp = convert(f, Basis::kP);
  std::vector<RatFun> terms;
  for (const auto& [rho, c] : fp.coeffs()) terms.push_back(c * alphabet.p(rho));
  return RatFun::sum(terms);
}

RatFun h_series_coeff(int r, const RatFun& a, const RatFun& b, Var base) {
  if (r < 0) throw std::invalid_argument("negative degree");
  return specialize(SymFunc::h(r, r), Alphabet::difference(a, b, base));
}

namespace {

std::string render(const SymFunc& f, bool latex) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : f.coeffs()) {
    const std::string label = latex ? std::string(basis_name(f.basis())) + "_{" + lambda.str() + "}"
                                    : std::string(basis_name(f.basis())) + "[" + lambda.str() + "]";
    const auto [num, den] = canonical_parts(c);
    const bool negative = den.is_one() && num.size() == 1 && num.terms()[0].coeff < 0;
    const RatFun mag = negative ? -c : c;
    std::string coeff = latex ? to_latex(mag) : to_text(mag);
    const bool simple = den.is_one() && num.size() == 1;
    if (!first) out += negative ? " - " : " + ";
    if (first && negative) out += "-";
    first = false;
    if (lambda.empty()) {
      out += simple ? coeff : "(" + coeff + ")";
    } else if (mag.is_one()) {
      out += label;
    } else {
      out += (simple ? coeff : "(" + coeff + ")") + (latex ? " " : "*") + label;
    }
  }
  return out;
}

}  // namespace

std::string to_text(const SymFunc& f) { return render(f, false); }
std::string to_latex(const SymFunc& f) { return render(f, true); }

}  // namespace qtpieri
