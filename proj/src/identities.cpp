#include "qtpieri/identities.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qtpieri/qseries.hpp"
#include "qtpieri/render.hpp"

namespace qtpieri {

namespace {

const RatFun kQVar = RatFun::var(kQ);
const RatFun kTVar = RatFun::var(kT);
const RatFun kAVar = RatFun::var(kA);
const RatFun kBVar = RatFun::var(kB);
const RatFun kCVar = RatFun::var(kC);
const Bindings kQZero{{kQ, RatFun(0)}};

RatFun sign(int n) { return n % 2 == 0 ? RatFun(1) : RatFun(-1); }
RatFun t_pow(int k) { return kTVar.pow(k); }

/// Partitions containing mu with k more cells.
std::vector<Partition> superpartitions(const Partition& mu, int k) {
  std::vector<Partition> out;
  for (const auto& lambda : partitions_of(mu.size() + k)) {
    if (contains(lambda, mu)) out.push_back(lambda);
  }
  return out;
}

/// Partitions kappa with mu inside kappa inside lambda.
std::vector<Partition> between(const Partition& mu, const Partition& lambda) {
  std::vector<Partition> out;
  if (!contains(lambda, mu)) return out;
  for (const auto& kappa : subpartitions(lambda)) {
    if (contains(kappa, mu)) out.push_back(kappa);
  }
  return out;
}

/// Accumulates sum_i c_i f_i coefficient-wise and reduces each coefficient
/// once.
class Combination {
 public:
  explicit Combination(int cap) : cap_(cap) {}

  void add(const RatFun& c, const SymFunc& f) {
    if (c.is_zero()) return;
    for (const auto& [kappa, u] : f.coeffs()) terms_[kappa].push_back(c * u);
  }

  SymFunc result() const {
    SymFunc out(Basis::kM, cap_);
    for (const auto& [kappa, list] : terms_) out.add(kappa, RatFun::sum(list));
    return out;
  }

 private:
  int cap_;
  std::map<Partition, std::vector<RatFun>> terms_;
};

class Checker {
 public:
  explicit Checker(CheckReport& report) : report_(report) {}

  template <typename T>
  void equal(std::string_view part, const T& lhs, const T& rhs) {
    if (!report_.pass) return;
    if (lhs == rhs) return;
    report_.pass = false;
    report_.witness = Witness{std::string(part), to_text(lhs), to_text(rhs)};
  }

 private:
  CheckReport& report_;
};

const Alphabet& difference(const RatFun& a, const RatFun& b) {
  // Alphabets are cheap handles, but keeping one instance per pair lets the
  // Macdonald cache key its memo tables on a stable name.
  static std::mutex mutex;
  static std::map<std::string, Alphabet> alphabets;
  const std::string key = to_text(a) + "|" + to_text(b);
  std::lock_guard lock(mutex);
  auto it = alphabets.find(key);
  if (it == alphabets.end()) it = alphabets.emplace(key, Alphabet::difference(a, b, kT)).first;
  return it->second;
}

RatFun skew_Q_at(const Partition& lambda, const Partition& mu, const Alphabet& alphabet) {
  if (!contains(lambda, mu)) return RatFun{};
  return MacdonaldCache::macdonald().specialize_skew_Q(lambda, mu, alphabet);
}

RatFun c_prime(const Partition& lambda) { return RatFun(hook_products(lambda).c_prime); }

/// Right-hand side shared by all skew Pieri rules:
/// sum over lambda, eta with |lambda - mu| + |nu - eta| = r of
/// A(lambda) B(eta) P_{lambda/eta}.
SymFunc pieri_sum(const Partition& mu, const Partition& nu, int r, const std::function<RatFun(const Partition&)>& a,
                  const std::function<RatFun(const Partition&)>& b,
                  const std::function<SymFunc(const Partition&, const Partition&, int)>& skew) {
  const int degree = mu.size() - nu.size() + r;
  Combination rhs(degree);
  for (int k = 0; k <= r; ++k) {
    const int drop = r - k;
    if (drop > nu.size()) continue;
    std::vector<std::pair<Partition, RatFun>> etas;
    for (const auto& eta : partitions_of(nu.size() - drop)) {
      if (!contains(nu, eta)) continue;
      RatFun c = b(eta);
      if (!c.is_zero()) etas.emplace_back(eta, std::move(c));
    }
    if (etas.empty()) continue;
    for (const auto& lambda : superpartitions(mu, k)) {
      const RatFun ca = a(lambda);
      if (ca.is_zero()) continue;
      for (const auto& [eta, cb] : etas) rhs.add(ca * cb, skew(lambda, eta, degree));
    }
  }
  return rhs.result();
}

SymFunc hl_skew_P(const Partition& lambda, const Partition& mu, int cap) {
  return hall_littlewood(lambda, mu, HLKind::kP, cap);
}

void require_inside(const Partition& mu, const Partition& nu, int r) {
  if (!contains(mu, nu)) throw std::invalid_argument("skew Pieri checks need nu inside mu");
  if (r < 0) throw std::invalid_argument("r must be non-negative");
}

struct Sides {
  SymFunc lhs;
  SymFunc rhs;
};

Sides hl_pieri_sides(const Partition& mu, const Partition& nu, int r, PieriSide kind) {
  const int degree = mu.size() - nu.size() + r;
  auto vs = [](const Partition& l, const Partition& m) { return factored_hl(PieriKind::kVs, l, m); };
  auto sk = [](const Partition& l, const Partition& m) { return factored_hl(PieriKind::kSk, l, m); };
  auto hs = [](const Partition& l, const Partition& m) { return factored_hl(PieriKind::kHs, l, m); };

  SymFunc factor(Basis::kM, degree);
  std::function<RatFun(const Partition&)> a;
  std::function<RatFun(const Partition&)> b;
  switch (kind) {
    case PieriSide::kE:
      factor = convert(SymFunc::e(r, degree), Basis::kM);
      a = [&](const Partition& l) { return vs(l, mu); };
      b = [&](const Partition& e) { return sign(nu.size() - e.size()) * sk(nu, e); };
      break;
    case PieriSide::kH:
      factor = convert(SymFunc::h(r, degree), Basis::kM);
      a = [&](const Partition& l) { return sk(l, mu); };
      b = [&](const Partition& e) { return sign(nu.size() - e.size()) * vs(nu, e); };
      break;
    case PieriSide::kQ:
      factor = hall_littlewood(Partition::row(r), {}, HLKind::kQ, degree);
      a = [&](const Partition& l) { return hs(l, mu); };
      b = [&](const Partition& e) {
        std::vector<RatFun> terms;
        for (const auto& omega : between(e, nu)) {
          terms.push_back(sign(nu.size() - omega.size()) * t_pow(omega.size() - e.size()) * vs(nu, omega) *
                          sk(omega, e));
        }
        return RatFun::sum(terms);
      };
      break;
  }
  return {multiply(hl_skew_P(mu, nu, degree), factor), pieri_sum(mu, nu, r, a, b, hl_skew_P)};
}

std::string side_name(PieriSide kind) {
  switch (kind) {
    case PieriSide::kE: return "e";
    case PieriSide::kH: return "h";
    case PieriSide::kQ: return "q";
  }
  return "?";
}

std::string side_name(QtPieriSide kind) {
  switch (kind) {
    case QtPieriSide::kE: return "e";
    case QtPieriSide::kH: return "h";
    case QtPieriSide::kG3: return "g3";
    case QtPieriSide::kG4: return "g4";
  }
  return "?";
}

}  // namespace

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::kHlSkewPieri: return "hl_skew_pieri";
    case IdentityId::kQtSkewPieri: return "qt_skew_pieri";
    case IdentityId::kKsVsHatSk: return "ks_vs_hatsk";
    case IdentityId::kQbt: return "qbt";
    case IdentityId::kOrtho: return "ortho";
    case IdentityId::kPfaffSaalschutz: return "pfaff_saalschutz";
    case IdentityId::kLemma5Q: return "lemma5_q";
    case IdentityId::kSom: return "som";
    case IdentityId::kThm7: return "thm7";
  }
  return "?";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (IdentityId id : kAllIdentities) {
    if (identity_name(id) == name) return id;
  }
  return std::nullopt;
}

CheckReport check_hl_skew_pieri(const Partition& mu, const Partition& nu, int r, PieriSide kind) {
  require_inside(mu, nu, r);
  CheckReport report{IdentityId::kHlSkewPieri, {{"mu", mu}, {"nu", nu}, {"r", r}, {"kind", side_name(kind)}}, true, std::nullopt};
  const Sides s = hl_pieri_sides(mu, nu, r, kind);
  Checker(report).equal("main", s.lhs, s.rhs);
  return report;
}

CheckReport check_qt_skew_pieri(const Partition& mu, const Partition& nu, int r, QtPieriSide kind) {
  require_inside(mu, nu, r);
  CheckReport report{IdentityId::kQtSkewPieri, {{"mu", mu}, {"nu", nu}, {"r", r}, {"kind", side_name(kind)}}, true, std::nullopt};
  Checker check(report);
  const int degree = mu.size() - nu.size() + r;
  auto coeff = [](PieriKind k) {
    return [k](const Partition& l, const Partition& m) { return pieri_coeff(k, l, m); };
  };
  const auto vs = coeff(PieriKind::kVs);
  const auto hs = coeff(PieriKind::kHs);
  const auto sk = coeff(PieriKind::kSk);
  const auto hat_sk = coeff(PieriKind::kHatSk);
  const auto ks = coeff(PieriKind::kKs);

  auto sum = [&](auto a, auto b) { return pieri_sum(mu, nu, r, a, b, skew_P); };
  auto pm3 = [&] {
    return sum([&](const Partition& l) { return hs(l, mu); }, [&](const Partition& e) { return ks(nu, e); });
  };
  auto pm4 = [&] {
    return sum([&](const Partition& l) { return hs(l, mu); },
               [&](const Partition& e) {
                 std::vector<RatFun> terms;
                 for (const auto& omega : between(e, nu)) {
                   terms.push_back(sign(nu.size() - omega.size()) * t_pow(omega.size() - e.size()) * vs(nu, omega) *
                                   hat_sk(omega, e));
                 }
                 return RatFun::sum(terms);
               });
  };

  SymFunc factor(Basis::kM, degree);
  SymFunc rhs(Basis::kM, degree);
  PieriSide hl_kind = PieriSide::kQ;
  switch (kind) {
    case QtPieriSide::kE:
      factor = convert(SymFunc::e(r, degree), Basis::kM);
      rhs = sum([&](const Partition& l) { return vs(l, mu); },
                [&](const Partition& e) { return sign(nu.size() - e.size()) * sk(nu, e); });
      hl_kind = PieriSide::kE;
      break;
    case QtPieriSide::kH:
      factor = convert(SymFunc::h(r, degree), Basis::kM);
      rhs = sum([&](const Partition& l) { return sk(l, mu); },
                [&](const Partition& e) { return sign(nu.size() - e.size()) * vs(nu, e); });
      hl_kind = PieriSide::kH;
      break;
    case QtPieriSide::kG3:
      factor = g_row(r, degree);
      rhs = pm3();
      break;
    case QtPieriSide::kG4:
      factor = g_row(r, degree);
      rhs = pm4();
      check.equal("pm3=pm4", pm3(), rhs);
      break;
  }
  const SymFunc lhs = multiply(skew_P(mu, nu, degree), factor);
  check.equal("main", lhs, rhs);

  const Sides hl = hl_pieri_sides(mu, nu, r, hl_kind);
  check.equal("q=0 lhs", substitute(lhs, kQZero), hl.lhs);
  check.equal("q=0 rhs", substitute(rhs, kQZero), hl.rhs);
  return report;
}

CheckReport check_ks_vs_hatsk(const Partition& lambda, const Partition& mu) {
  CheckReport report{IdentityId::kKsVsHatSk, {{"lambda", lambda}, {"mu", mu}}, true, std::nullopt};
  Checker check(report);
  const RatFun ks = pieri_coeff(PieriKind::kKs, lambda, mu);
  const RatFun a_q = kAVar / kQVar;
  const RatFun a_t = kAVar / kTVar;
  std::vector<RatFun> limit;
  std::vector<RatFun> finite;
  for (const auto& nu : between(mu, lambda)) {
    const RatFun term = sign(lambda.size() - nu.size()) * pieri_coeff(PieriKind::kVs, lambda, nu) *
                        pieri_coeff(PieriKind::kHatSk, nu, mu);
    limit.push_back(t_pow(nu.size() - mu.size()) * term);
    finite.push_back(gen_pochhammer(kAVar, nu) / gen_pochhammer(a_t, nu) * term);
  }
  check.equal("main", ks, RatFun::sum(limit));
  const int d = lambda.size() - mu.size();
  RatFun prefactor(0);
  if (contains(lambda, mu)) {
    prefactor = (kTVar / kQVar).pow(d) * gen_pochhammer(a_q, mu) * gen_pochhammer(a_t, lambda) /
                (gen_pochhammer(kAVar, mu) * gen_pochhammer(a_q, lambda));
  }
  check.equal("finite a", ks, prefactor * RatFun::sum(finite));
  return report;
}

namespace {

/// prod over the variables of sum_k h_k(weights) x^k, truncated at cap, in
/// the m-basis: the coefficient of m_kappa is prod_i c(kappa_i).
SymFunc product_series(int cap, const std::function<RatFun(int)>& c) {
  std::vector<RatFun> coeff;
  for (int k = 0; k <= cap; ++k) coeff.push_back(c(k));
  SymFunc out(Basis::kM, cap);
  for (const auto& kappa : enumerate(cap)) {
    RatFun v = 1;
    for (int part : kappa.parts()) v *= coeff[part];
    out.add(kappa, v);
  }
  return out;
}

}  // namespace

CheckReport check_qbt(const Partition& mu, const Partition& nu, int cap) {
  if (cap < std::max(mu.size(), nu.size())) throw std::invalid_argument("cap must be at least max(|mu|, |nu|)");
  CheckReport report{IdentityId::kQbt, {{"mu", mu}, {"nu", nu}, {"cap", cap}}, true, std::nullopt};
  Checker check(report);
  const Alphabet& alpha = difference(kAVar, kBVar);

  Combination lhs(cap);
  for (int k = 0; k <= cap; ++k) {
    for (const auto& lambda : superpartitions(mu, k)) {
      if (!contains(lambda, nu)) continue;
      lhs.add(skew_Q_at(lambda, nu, alpha), skew_P(lambda, mu, cap));
    }
  }
  Combination inner(cap);
  for (const auto& kappa : subpartitions(mu)) {
    if (contains(nu, kappa)) inner.add(skew_Q_at(mu, kappa, alpha), skew_P(nu, kappa, cap));
  }
  const SymFunc kernel = product_series(cap, [](int k) { return h_series_coeff(k, kAVar, kBVar, kQ); });
  check.equal("main", lhs.result(), multiply(kernel, inner.result()));

  if (mu.empty() && nu.empty()) {
    Combination km(cap);
    for (const auto& lambda : enumerate(cap)) {
      km.add(t_pow(n_stat(lambda)) * gen_pochhammer(kAVar, lambda) / c_prime(lambda), macdonald_P(lambda, cap));
    }
    const SymFunc km_rhs = product_series(cap, [](int k) { return h_series_coeff(k, 1, kAVar, kQ); });
    check.equal("km", km.result(), km_rhs);
  }
  return report;
}

CheckReport check_ortho(const Partition& lambda, const Partition& mu) {
  CheckReport report{IdentityId::kOrtho, {{"lambda", lambda}, {"mu", mu}}, true, std::nullopt};
  const Alphabet& ab = difference(kAVar, kBVar);
  const Alphabet& ba = difference(kBVar, kAVar);
  std::vector<RatFun> terms;
  for (const auto& nu : between(mu, lambda)) terms.push_back(skew_Q_at(lambda, nu, ab) * skew_Q_at(nu, mu, ba));
  Checker(report).equal("main", RatFun::sum(terms), RatFun(lambda == mu ? 1 : 0));
  return report;
}

CheckReport check_pfaff_saalschutz(const Partition& lambda, const Partition& mu) {
  CheckReport report{IdentityId::kPfaffSaalschutz, {{"lambda", lambda}, {"mu", mu}}, true, std::nullopt};
  Checker check(report);
  const Alphabet& ab = difference(kAVar, kBVar);
  const Alphabet& bc = difference(kBVar, kCVar);
  const Alphabet& ac = difference(kAVar, kCVar);
  const Alphabet& ba = difference(kBVar, kAVar);

  std::vector<RatFun> terms;
  std::vector<RatFun> ortho_terms;
  for (const auto& nu : between(mu, lambda)) {
    terms.push_back(gen_pochhammer(kAVar, nu) / gen_pochhammer(kCVar, nu) * skew_Q_at(lambda, nu, ab) *
                    skew_Q_at(nu, mu, bc));
    ortho_terms.push_back(skew_Q_at(lambda, nu, ab) * skew_Q_at(nu, mu, ba));
  }
  const RatFun lhs = RatFun::sum(terms);
  RatFun rhs(0);
  if (contains(lambda, mu)) {
    rhs = gen_pochhammer(kAVar, mu) * gen_pochhammer(kBVar, lambda) /
          (gen_pochhammer(kBVar, mu) * gen_pochhammer(kCVar, lambda)) * skew_Q_at(lambda, mu, ac);
  }
  check.equal("main", lhs, rhs);

  const Bindings c_is_a{{kC, kAVar}};
  check.equal("c=a lhs", substitute(lhs, c_is_a), RatFun::sum(ortho_terms));
  check.equal("c=a rhs", substitute(rhs, c_is_a), RatFun(lambda == mu ? 1 : 0));
  return report;
}

CheckReport check_lemma5_q(const Partition& lambda, const Partition& nu) {
  CheckReport report{IdentityId::kLemma5Q, {{"lambda", lambda}, {"nu", nu}}, true, std::nullopt};
  Checker check(report);
  const Alphabet& gamma = difference(1, kQVar * kTVar);
  const RatFun a_q = kAVar / kQVar;
  const RatFun at = kAVar * kTVar;

  std::vector<RatFun> finite;
  std::vector<RatFun> limit;
  std::vector<RatFun> classical;
  for (const auto& mu : between(nu, lambda)) {
    const int d = lambda.size() - mu.size();
    const RatFun vs_q = pieri_coeff(PieriKind::kVs, lambda, mu);
    const RatFun q_mu = skew_Q_at(mu, nu, gamma);
    finite.push_back(gen_pochhammer(kAVar, mu) / gen_pochhammer(at, mu) * sign(d) * vs_q * q_mu);
    limit.push_back((-kTVar).pow(d) * vs_q * q_mu);
    classical.push_back((-kTVar).pow(d) * factored_hl(PieriKind::kVs, lambda, mu) *
                        factored_hl(PieriKind::kSk, mu, nu));
  }
  const RatFun hs = pieri_coeff(PieriKind::kHs, lambda, nu);
  RatFun finite_rhs(0);
  if (contains(lambda, nu)) {
    finite_rhs = gen_pochhammer(kAVar, nu) * gen_pochhammer(a_q, lambda) /
                 (gen_pochhammer(a_q, nu) * gen_pochhammer(at, lambda)) * kQVar.pow(lambda.size() - nu.size()) * hs;
  }
  check.equal("finite a", RatFun::sum(finite), finite_rhs);
  const RatFun limit_lhs = RatFun::sum(limit);
  check.equal("main", limit_lhs, hs);
  const RatFun classical_lhs = RatFun::sum(classical);
  const RatFun hs_t = factored_hl(PieriKind::kHs, lambda, nu);
  check.equal("q=0", classical_lhs, hs_t);
  check.equal("q=0 lhs", substitute(limit_lhs, kQZero), classical_lhs);
  check.equal("q=0 rhs", substitute(hs, kQZero), hs_t);
  return report;
}

CheckReport check_som(const Partition& lambda, const Partition& mu) {
  CheckReport report{IdentityId::kSom, {{"lambda", lambda}, {"mu", mu}}, true, std::nullopt};
  Checker check(report);
  std::vector<RatFun> terms;
  std::vector<RatFun> classical;
  if (lambda.size() >= mu.size()) {
    for (const auto& nu : partitions_of(lambda.size() - mu.size())) {
      const RatFun f = structure_f(lambda, mu, nu);
      if (f.is_zero()) continue;
      terms.push_back(t_pow(n_stat(nu)) * gen_pochhammer(kAVar, nu) / c_prime(nu) * f);
      classical.push_back(t_pow(n_stat(nu)) * substitute(f, kQZero));
    }
  }
  const RatFun lhs = RatFun::sum(terms);
  check.equal("main", lhs, skew_Q_at(lambda, mu, difference(1, kAVar)));
  const RatFun classical_lhs = RatFun::sum(classical);
  check.equal("a=q=0", classical_lhs, factored_hl(PieriKind::kSk, lambda, mu));
  check.equal("a=q=0 lhs", substitute(lhs, {{kA, RatFun(0)}, {kQ, RatFun(0)}}), classical_lhs);
  return report;
}

namespace {

/// sum_{|kappa| <= cap} t^{n(kappa)} (q)_kappa / c'_kappa P_kappa and
/// sum_{r <= cap} h_r; memoized per cap.
const std::pair<SymFunc, SymFunc>& km_at_q(int cap) {
  static std::mutex mutex;
  static std::map<int, std::pair<SymFunc, SymFunc>> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(cap); it != memo.end()) return it->second;
  }
  Combination lhs(cap);
  SymFunc rhs(Basis::kM, cap);
  for (const auto& kappa : enumerate(cap)) {
    lhs.add(t_pow(n_stat(kappa)) * gen_pochhammer(kQVar, kappa) / c_prime(kappa), macdonald_P(kappa, cap));
  }
  for (int r = 0; r <= cap; ++r) rhs += convert(SymFunc::h(r, cap), Basis::kM);
  std::lock_guard lock(mutex);
  return memo.try_emplace(cap, lhs.result(), rhs).first->second;
}

}  // namespace

CheckReport check_thm7(const Partition& lambda, const Partition& nu, int m, int cap) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  CheckReport report{IdentityId::kThm7, {{"lambda", lambda}, {"nu", nu}, {"m", m}, {"cap", cap}}, true, std::nullopt};
  Checker check(report);
  const Partition column = Partition::column(m);

  std::vector<RatFun> lhs_terms;
  std::vector<RatFun> lhs0_terms;
  if (lambda.size() >= m) {
    for (const auto& mu : partitions_of(lambda.size() - m)) {
      if (!contains(lambda, mu) || !contains(mu, nu)) continue;
      lhs_terms.push_back(pieri_coeff(PieriKind::kVs, lambda, mu) * pieri_coeff(PieriKind::kSk, mu, nu));
      lhs0_terms.push_back(factored_hl(PieriKind::kVs, lambda, mu) * factored_hl(PieriKind::kSk, mu, nu));
    }
  }
  std::vector<RatFun> rhs_terms;
  std::vector<RatFun> rhs0_terms;
  if (lambda.size() >= nu.size()) {
    for (const auto& mu : partitions_of(lambda.size() - nu.size())) {
      const RatFun f = structure_f(lambda, mu, nu);
      if (f.is_zero()) continue;
      rhs_terms.push_back(pieri_coeff(PieriKind::kSk, mu, column) * f);
      // t^{n(mu)} [mu'_1 choose m]_{1/t}, the classical sk_{mu/(1^m)} times t^{binom(m,2)}.
      const int height = mu.length();
      const RatFun binom_inv = RatFun(gauss_binomial(height, m, kT)) / t_pow(m * std::max(height - m, 0));
      rhs0_terms.push_back(t_pow(n_stat(mu)) * substitute(f, kQZero) * binom_inv);
    }
  }
  const RatFun lhs = RatFun::sum(lhs_terms);
  const RatFun rhs = RatFun::sum(rhs_terms);
  check.equal("main", lhs, rhs);
  const RatFun lhs0 = RatFun::sum(lhs0_terms);
  const RatFun scale = t_pow(m * (m - 1) / 2);
  check.equal("q=0", scale * lhs0, RatFun::sum(rhs0_terms));
  check.equal("q=0 lhs", substitute(lhs, kQZero), lhs0);
  check.equal("q=0 rhs", scale * substitute(rhs, kQZero), RatFun::sum(rhs0_terms));

  const auto& [km_lhs, km_rhs] = km_at_q(cap);
  check.equal("km a=q", km_lhs, km_rhs);
  return report;
}

std::vector<CheckReport> run_suite(const SuiteOptions& options) {
  if (options.max_size < 0) throw std::invalid_argument("max_size must be non-negative");
  const std::vector<Partition> shapes = enumerate(options.max_size);
  struct Task {
    IdentityId id;
    std::function<CheckReport()> run;
  };
  std::vector<Task> tasks;
  for (IdentityId id : options.selection) {
    switch (id) {
      case IdentityId::kHlSkewPieri:
      case IdentityId::kQtSkewPieri:
        for (const auto& mu : shapes) {
          for (const auto& nu : subpartitions(mu)) {
            for (int r = 0; r <= options.max_r; ++r) {
              if (id == IdentityId::kHlSkewPieri) {
                for (PieriSide k : {PieriSide::kE, PieriSide::kH, PieriSide::kQ}) {
                  tasks.push_back({id, [=] { return check_hl_skew_pieri(mu, nu, r, k); }});
                }
              } else {
                for (QtPieriSide k : {QtPieriSide::kE, QtPieriSide::kH, QtPieriSide::kG3, QtPieriSide::kG4}) {
                  tasks.push_back({id, [=] { return check_qt_skew_pieri(mu, nu, r, k); }});
                }
              }
            }
          }
        }
        break;
      case IdentityId::kQbt:
        for (const auto& mu : shapes) {
          for (const auto& nu : shapes) {
            if (options.cap < std::max(mu.size(), nu.size())) continue;
            tasks.push_back({id, [=, cap = options.cap] { return check_qbt(mu, nu, cap); }});
          }
        }
        break;
      case IdentityId::kThm7:
        for (const auto& lambda : shapes) {
          for (const auto& nu : shapes) {
            for (int m = 0; m <= options.max_r; ++m) {
              tasks.push_back({id, [=, cap = options.cap] { return check_thm7(lambda, nu, m, cap); }});
            }
          }
        }
        break;
      default: {
        using Pairwise = CheckReport (*)(const Partition&, const Partition&);
        Pairwise check = nullptr;
        if (id == IdentityId::kKsVsHatSk) check = check_ks_vs_hatsk;
        if (id == IdentityId::kOrtho) check = check_ortho;
        if (id == IdentityId::kPfaffSaalschutz) check = check_pfaff_saalschutz;
        if (id == IdentityId::kLemma5Q) check = check_lemma5_q;
        if (id == IdentityId::kSom) check = check_som;
        for (const auto& x : shapes) {
          for (const auto& y : shapes) tasks.push_back({id, [=] { return check(x, y); }});
        }
      }
    }
  }

  std::vector<CheckReport> reports(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        reports[i] = tasks[i].run();
      } catch (const std::exception& e) {
        reports[i].id = tasks[i].id;
        reports[i].pass = false;
        reports[i].witness = Witness{"error", e.what(), ""};
      }
    }
  };
  const int jobs = std::max(1, options.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return reports;
}

std::string params_text(const std::vector<Param>& params) {
  std::string out;
  for (const auto& p : params) {
    if (!out.empty()) out += " ";
    out += p.name + "=";
    if (const auto* lambda = std::get_if<Partition>(&p.value)) {
      out += "(" + lambda->str() + ")";
    } else if (const auto* n = std::get_if<int>(&p.value)) {
      out += std::to_string(*n);
    } else {
      out += std::get<std::string>(p.value);
    }
  }
  return out;
}

}  // namespace qtpieri
