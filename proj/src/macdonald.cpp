#include "qtpieri/macdonald.hpp"

#include <stdexcept>
#include <tuple>

namespace qtpieri {

MacdonaldCache& MacdonaldCache::macdonald() {
  static MacdonaldCache cache(false);
  return cache;
}

MacdonaldCache& MacdonaldCache::hall_littlewood() {
  static MacdonaldCache cache(true);
  return cache;
}

RatFun MacdonaldCache::weight(const Partition& rho) const {
  const RatFun w = power_sum_norm(rho);
  return q_zero_ ? substitute(w, {{kQ, RatFun(0)}}) : w;
}

MacdonaldCache::Degree MacdonaldCache::build(int n) const {
  const auto& parts = partitions_of(n);
  const std::size_t N = parts.size();
  const auto& to_p = to_power_sums(Basis::kM, n);

  std::vector<RatFun> w;
  w.reserve(N);
  for (const auto& rho : parts) w.push_back(weight(rho));

  // Gram matrix of the monomial basis.
  std::vector<std::vector<RatFun>> gram(N, std::vector<RatFun>(N));
  std::vector<RatFun> terms;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t k = i; k < N; ++k) {
      terms.clear();
      for (std::size_t r = 0; r < N; ++r) {
        const Rational c = to_p[i][r] * to_p[k][r];
        if (c != 0) terms.push_back(w[r].scaled(c));
      }
      gram[i][k] = RatFun::sum(terms);
      gram[k][i] = gram[i][k];
    }
  }

  // Smallest partitions in dominance come last in enumeration order.
  std::vector<std::map<std::size_t, RatFun>> u(N);
  std::vector<RatFun> norm(N);
  for (std::size_t i = N; i-- > 0;) {
    std::map<std::size_t, std::vector<RatFun>> acc;
    acc[i].push_back(RatFun(1));
    for (std::size_t j = i + 1; j < N; ++j) {
      if (!dominance_leq(parts[j], parts[i])) continue;
      terms.clear();
      for (const auto& [k, c] : u[j]) terms.push_back(c * gram[i][k]);
      const RatFun ip = RatFun::sum(terms);
      if (ip.is_zero()) continue;
      const RatFun coeff = -(ip / norm[j]);
      for (const auto& [k, c] : u[j]) acc[k].push_back(coeff * c);
    }
    for (auto& [k, list] : acc) {
      RatFun c = RatFun::sum(list);
      if (!c.is_zero()) u[i].emplace(k, std::move(c));
    }
    terms.clear();
    for (const auto& [k, c] : u[i]) terms.push_back(c * gram[i][k]);
    norm[i] = RatFun::sum(terms);
  }

  Degree d;
  for (std::size_t i = 0; i < N; ++i) {
    SymFunc p(Basis::kM, n);
    for (const auto& [k, c] : u[i]) p.add(parts[k], c);
    d.P.push_back(std::move(p));
    d.b.push_back(norm[i].inverse());
  }
  return d;
}

const MacdonaldCache::Degree& MacdonaldCache::degree(int n) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = degrees_.find(n); it != degrees_.end()) return it->second;
  }
  std::lock_guard build_lock(build_mutex_);
  {
    std::lock_guard lock(mutex_);
    if (auto it = degrees_.find(n); it != degrees_.end()) return it->second;
  }
  Degree d = build(n);
  std::lock_guard lock(mutex_);
  return degrees_.try_emplace(n, std::move(d)).first->second;
}

const SymFunc& MacdonaldCache::P(const Partition& lambda) {
  return degree(lambda.size()).P[partition_index(lambda)];
}

const RatFun& MacdonaldCache::b(const Partition& lambda) {
  return degree(lambda.size()).b[partition_index(lambda)];
}

SymFunc MacdonaldCache::to_monomial(const SymFunc& f) {
  if (f.basis() != Basis::kMacP && f.basis() != Basis::kMacQ) return convert(f, Basis::kM);
  std::map<Partition, std::vector<RatFun>> acc;
  for (const auto& [nu, c] : f.coeffs()) {
    const RatFun scale = f.basis() == Basis::kMacQ ? c * b(nu) : c;
    for (const auto& [kappa, u] : P(nu).coeffs()) acc[kappa].push_back(scale * u);
  }
  SymFunc out(Basis::kM, f.cap());
  for (auto& [kappa, terms] : acc) out.add(kappa, RatFun::sum(terms));
  return out;
}

SymFunc MacdonaldCache::to_P(const SymFunc& f) {
  const SymFunc fm = convert(f, Basis::kM);
  SymFunc out(Basis::kMacP, f.cap());
  std::map<int, std::vector<std::vector<RatFun>>> pending;
  for (const auto& [kappa, c] : fm.coeffs()) {
    auto& level = pending[kappa.size()];
    if (level.empty()) level.resize(partitions_of(kappa.size()).size());
    level[partition_index(kappa)].push_back(c);
  }
  for (auto& [n, level] : pending) {
    const auto& parts = partitions_of(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (level[i].empty()) continue;
      const RatFun c = RatFun::sum(level[i]);
      if (c.is_zero()) continue;
      out.add(parts[i], c);
      for (const auto& [kappa, u] : P(parts[i]).coeffs()) {
        if (kappa != parts[i]) level[partition_index(kappa)].push_back(-(c * u));
      }
    }
  }
  return out;
}

const std::map<Partition, RatFun>& MacdonaldCache::product(const Partition& mu, const Partition& nu) {
  const auto key = mu <= nu ? std::pair{mu, nu} : std::pair{nu, mu};
  {
    std::lock_guard lock(mutex_);
    if (auto it = products_.find(key); it != products_.end()) return it->second;
  }
  std::map<Partition, RatFun> out;
  if (key.first.empty()) {
    out.emplace(key.second, RatFun(1));
  } else {
    const int n = mu.size() + nu.size();
    const SymFunc prod = multiply(P(key.first).with_cap(n), P(key.second).with_cap(n));
    const SymFunc in_p = to_P(prod);
    for (const auto& [lambda, c] : in_p.coeffs()) out.emplace(lambda, c);
  }
  std::lock_guard lock(mutex_);
  return products_.try_emplace(key, std::move(out)).first->second;
}

RatFun MacdonaldCache::f(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size()) return RatFun{};
  const auto& row = product(mu, nu);
  auto it = row.find(lambda);
  return it == row.end() ? RatFun{} : it->second;
}

SymFunc MacdonaldCache::skew_Q_in_P(const Partition& lambda, const Partition& mu) {
  const int d = lambda.size() - mu.size();
  SymFunc out(Basis::kMacP, std::max(d, 0));
  if (!contains(lambda, mu)) return out;
  for (const auto& nu : partitions_of(d)) {
    const RatFun c = f(lambda, mu, nu);
    if (!c.is_zero()) out.add(nu, c * b(nu));
  }
  return out;
}

const SymFunc& MacdonaldCache::skew_Q_monomial(const Partition& lambda, const Partition& mu) {
  const auto key = std::pair{lambda, mu};
  {
    std::lock_guard lock(mutex_);
    if (auto it = skews_.find(key); it != skews_.end()) return it->second;
  }
  SymFunc q = to_monomial(skew_Q_in_P(lambda, mu));
  std::lock_guard lock(mutex_);
  return skews_.try_emplace(key, std::move(q)).first->second;
}

const RatFun& MacdonaldCache::monomial_value(const Partition& kappa, const Alphabet& alphabet) {
  {
    std::lock_guard lock(mutex_);
    auto& table = m_values_[alphabet.name()];
    if (auto it = table.find(kappa); it != table.end()) return it->second;
  }
  const auto& row = to_power_sums(Basis::kM, kappa.size())[partition_index(kappa)];
  const auto& parts = partitions_of(kappa.size());
  std::vector<RatFun> terms;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    if (row[r] != 0) terms.push_back(alphabet.p(parts[r]).scaled(row[r]));
  }
  RatFun v = RatFun::sum(terms);
  std::lock_guard lock(mutex_);
  return m_values_[alphabet.name()].try_emplace(kappa, std::move(v)).first->second;
}

RatFun MacdonaldCache::specialize_P(const Partition& nu, const Alphabet& alphabet) {
  {
    std::lock_guard lock(mutex_);
    auto& table = p_values_[alphabet.name()];
    if (auto it = table.find(nu); it != table.end()) return it->second;
  }
  std::vector<RatFun> terms;
  for (const auto& [kappa, u] : P(nu).coeffs()) terms.push_back(u * monomial_value(kappa, alphabet));
  RatFun v = RatFun::sum(terms);
  std::lock_guard lock(mutex_);
  return p_values_[alphabet.name()].try_emplace(nu, std::move(v)).first->second;
}

RatFun MacdonaldCache::specialize_skew_Q(const Partition& lambda, const Partition& mu, const Alphabet& alphabet) {
  std::vector<RatFun> terms;
  const SymFunc skew = skew_Q_in_P(lambda, mu);
  for (const auto& [nu, c] : skew.coeffs()) terms.push_back(c * specialize_P(nu, alphabet));
  return RatFun::sum(terms);
}

SymFunc macdonald_P(const Partition& lambda, int cap) {
  if (lambda.size() > cap) throw std::invalid_argument("partition larger than the degree cap");
  return MacdonaldCache::macdonald().P(lambda).with_cap(cap);
}

SymFunc macdonald_Q(const Partition& lambda, int cap) {
  return macdonald_P(lambda, cap).scaled(MacdonaldCache::macdonald().b(lambda));
}

RatFun b_norm(const Partition& lambda) { return MacdonaldCache::macdonald().b(lambda); }

RatFun structure_f(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return MacdonaldCache::macdonald().f(lambda, mu, nu);
}

namespace {

SymFunc skew(MacdonaldCache& cache, const Partition& lambda, const Partition& mu, int cap, bool p_normalized) {
  if (lambda.size() - mu.size() > cap || !contains(lambda, mu)) return SymFunc(Basis::kM, cap);
  SymFunc q = cache.skew_Q_monomial(lambda, mu).with_cap(cap);
  if (!p_normalized) return q;
  return q.scaled(cache.b(mu) / cache.b(lambda));
}

}  // namespace

SymFunc skew_Q(const Partition& lambda, const Partition& mu, int cap) {
  return skew(MacdonaldCache::macdonald(), lambda, mu, cap, false);
}

SymFunc skew_P(const Partition& lambda, const Partition& mu, int cap) {
  return skew(MacdonaldCache::macdonald(), lambda, mu, cap, true);
}

SymFunc g_row(int r, int cap) { return macdonald_Q(Partition::row(r), cap); }

SymFunc hall_littlewood(const Partition& lambda, const Partition& mu, HLKind kind, int cap) {
  static std::mutex mutex;
  static std::map<std::tuple<Partition, Partition, HLKind>, SymFunc> memo;
  if (lambda.size() - mu.size() > cap || !contains(lambda, mu)) return SymFunc(Basis::kM, cap);
  const auto key = std::tuple{lambda, mu, kind};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second.with_cap(cap);
  }
  const int d = lambda.size() - mu.size();
  SymFunc hl = substitute(kind == HLKind::kP ? skew_P(lambda, mu, d) : skew_Q(lambda, mu, d), {{kQ, RatFun(0)}});
  std::lock_guard lock(mutex);
  return memo.try_emplace(key, std::move(hl)).first->second.with_cap(cap);
}

}  // namespace qtpieri
