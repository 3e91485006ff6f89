#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qtpieri/macdonald.hpp"

namespace qtpieri {

enum class PieriKind { kVs, kHs, kSk, kHatSk, kKs };

std::string_view kind_name(PieriKind kind);
std::optional<PieriKind> parse_kind(std::string_view name);

/// The alphabet at which Q_{lambda/mu} is evaluated for each kind:
/// vs at (q - 1)/(1 - t), hs at the single letter 1, sk at (1 - q)/(1 - t),
/// hat_sk at (1 - q/t)/(1 - t) and ks at the plethystic -1.
const Alphabet& pieri_alphabet(PieriKind kind);

/// Q_{lambda/mu} at the kind's alphabet, times (-1)^{|lambda - mu|} for vs.
/// With q_zero the result has q set to 0.
RatFun pieri_coeff(PieriKind kind, const Partition& lambda, const Partition& mu, bool q_zero = false);

/// The one-parameter product formulas for vs, hs and sk in t.
/// Throws std::invalid_argument for the other kinds.
RatFun factored_hl(PieriKind kind, const Partition& lambda, const Partition& mu);

/// factored_hl as a LaTeX product of \qbin{n}{k}_t and (1-t^k) factors.
std::string factored_hl_latex(PieriKind kind, const Partition& lambda, const Partition& mu);

/// Product formula for hat_sk over Q(q,t): the typeset double product over
/// 1 <= i, j <= l(lambda) multiplied by C(lambda)/C(mu), where
/// C(kappa) = prod_{i<j<=l(lambda)} (q t^(j-i); q)_{kappa_i - kappa_j} / (q t^(j-i-1); q)_{kappa_i - kappa_j}.
/// Without that factor the product misses c'_lambda already at mu = 0.
RatFun factored_hat_sk(const Partition& lambda, const Partition& mu);
/// factored_hat_sk as LaTeX in (a;q)_k notation, equal factors cancelled.
std::string factored_hat_sk_latex(const Partition& lambda, const Partition& mu);
/// The double product exactly as typeset, with no correction.
RatFun hat_sk_as_printed(const Partition& lambda, const Partition& mu);

/// Lascoux's expression for Q'_{lambda/mu}(1), read with numerator factors
/// 1 - t^(lambda'_{mu_i} - i + 1) for i <= l(mu) and denominator factors
/// (t;t)_{mu'_j - mu'_{j+1}} over all columns j of mu.
RatFun lascoux_modified_hl(const Partition& lambda, const Partition& mu);

/// The same expression with the index and range exactly as typeset:
/// numerator exponent lambda'_{mu_i - i + 1}, both products over i <= l(mu).
/// Returns nullopt, with the offending row in `bad_row`, when mu_i - i + 1
/// drops below 1.
std::optional<RatFun> lascoux_as_printed(const Partition& lambda, const Partition& mu, int* bad_row = nullptr);

}  // namespace qtpieri
