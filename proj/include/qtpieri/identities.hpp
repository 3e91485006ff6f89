#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qtpieri/pieri.hpp"

namespace qtpieri {

enum class IdentityId {
  kHlSkewPieri,
  kQtSkewPieri,
  kKsVsHatSk,
  kQbt,
  kOrtho,
  kPfaffSaalschutz,
  kLemma5Q,
  kSom,
  kThm7,
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::kHlSkewPieri, IdentityId::kQtSkewPieri, IdentityId::kKsVsHatSk,
    IdentityId::kQbt,         IdentityId::kOrtho,       IdentityId::kPfaffSaalschutz,
    IdentityId::kLemma5Q,     IdentityId::kSom,         IdentityId::kThm7,
};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

struct Param {
  std::string name;
  std::variant<Partition, int, std::string> value;
};

/// Rendered sides of the first equation that failed. `part` names which of
/// the equations in a check it was, e.g. "main" or "q=0".
struct Witness {
  std::string part;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  IdentityId id;
  std::vector<Param> params;
  bool pass = true;
  std::optional<Witness> witness;
};

enum class PieriSide { kE, kH, kQ };
enum class QtPieriSide { kE, kH, kG3, kG4 };

/// HL skew Pieri rules: P_{mu/nu} times e_r, h_r or q_r against the double
/// or triple sums with the one-parameter coefficients. Compared in the
/// m-basis at degree |mu| - |nu| + r. Throws unless nu is inside mu and r >= 0.
CheckReport check_hl_skew_pieri(const Partition& mu, const Partition& nu, int r, PieriSide kind);

/// (q,t) skew Pieri rules. g3 and g4 are the two right-hand sides for g_r;
/// g4 also compares them with each other. Every kind additionally checks
/// that q = 0 reproduces both sides of the HL rule.
CheckReport check_qt_skew_pieri(const Partition& mu, const Partition& nu, int r, QtPieriSide kind);

/// ks = sum_nu (-1)^{|lambda-nu|} t^{|nu-mu|} vs_{lambda/nu} hat_sk_{nu/mu},
/// together with its finite-a form.
CheckReport check_ks_vs_hatsk(const Partition& lambda, const Partition& mu);

/// q-binomial theorem truncated at degree cap, over Q(q,t,a,b). The left sum
/// runs over |lambda| <= |mu| + cap. Throws when cap < max(|mu|, |nu|).
CheckReport check_qbt(const Partition& mu, const Partition& nu, int cap);

CheckReport check_ortho(const Partition& lambda, const Partition& mu);

/// Pfaff-Saalschutz sum over Q(q,t,a,b,c), and its c = a case against ortho.
CheckReport check_pfaff_saalschutz(const Partition& lambda, const Partition& mu);

/// The b = a/q, c = at specialization, its a -> infinity form and the q = 0
/// form with the one-parameter coefficients.
CheckReport check_lemma5_q(const Partition& lambda, const Partition& nu);

/// sum_nu t^{n(nu)} (a)_nu / c'_nu f^lambda_{mu nu} = Q_{lambda/mu}((1-a)/(1-t)),
/// and its a = q = 0 form against the one-parameter sk.
CheckReport check_som(const Partition& lambda, const Partition& mu);

/// Both finite sums for P_nu e_m sum_r h_r, the q = 0 form with
/// t-binomials in 1/t, and the a = q Kaneko-Macdonald expansion up to cap.
CheckReport check_thm7(const Partition& lambda, const Partition& nu, int m, int cap);

struct SuiteOptions {
  int max_size = 3;
  int cap = 5;
  /// Upper bound for r in the skew Pieri checks and for m in thm7.
  int max_r = 3;
  std::vector<IdentityId> selection;
  int jobs = 1;
};

/// Every admissible parameter tuple of the selected identities, in a fixed
/// enumeration order; the result does not depend on jobs.
std::vector<CheckReport> run_suite(const SuiteOptions& options);

std::string params_text(const std::vector<Param>& params);

}  // namespace qtpieri
