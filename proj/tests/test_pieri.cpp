#include <gtest/gtest.h>

#include "printers.hpp"
#include "qtpieri/pieri.hpp"
#include "qtpieri/qseries.hpp"

using namespace qtpieri;

namespace {

const RatFun q = RatFun::var(kQ);
const RatFun t = RatFun::var(kT);
const RatFun a = RatFun::var(kA);

constexpr PieriKind kAllKinds[] = {PieriKind::kVs, PieriKind::kHs, PieriKind::kSk, PieriKind::kHatSk, PieriKind::kKs};

RatFun at_q_zero(const RatFun& r) { return substitute(r, {{kQ, RatFun(0)}}); }

}  // namespace

TEST(Pieri, KindNames) {
  for (PieriKind k : kAllKinds) EXPECT_EQ(parse_kind(kind_name(k)), k);
  EXPECT_FALSE(parse_kind("nope").has_value());
}

TEST(Pieri, GoldenValues) {
  const RatFun sk = pieri_coeff(PieriKind::kSk, {2, 1}, {1});
  EXPECT_EQ(sk, (1 - q - q * q + t + q * t - q * q * t) / (1 - q * q * t));
  const RatFun ks = pieri_coeff(PieriKind::kKs, {2, 1}, {1});
  EXPECT_EQ(ks, (1 - t) * (1 + q - t + q * t - t * t - q * t * t) / ((1 - q) * (1 - q * q * t)));
  EXPECT_EQ(pieri_coeff(PieriKind::kKs, {2, 1}, {1}, true), (1 - t) * (1 - t - t * t));
  EXPECT_EQ(pieri_coeff(PieriKind::kSk, {2, 1}, {1}, true), 1 + t);
}

TEST(Pieri, EqualShapesGiveOne) {
  for (PieriKind k : kAllKinds) {
    for (const auto& lambda : enumerate(3)) EXPECT_TRUE(pieri_coeff(k, lambda, lambda).is_one());
  }
}

TEST(Pieri, FactoredExamples) {
  EXPECT_TRUE(factored_hl(PieriKind::kVs, {2, 1}, {1}).is_one());
  EXPECT_EQ(factored_hl(PieriKind::kHs, {2}, {1}), 1 - t);
  EXPECT_EQ(factored_hl(PieriKind::kSk, {2, 1}, {1}), 1 + t);
  EXPECT_TRUE(factored_hl(PieriKind::kVs, {2}, {}).is_zero());
  EXPECT_TRUE(pieri_coeff(PieriKind::kVs, {2}, {}).is_zero());
  EXPECT_THROW(factored_hl(PieriKind::kKs, {1}, {}), std::invalid_argument);

  EXPECT_TRUE(factored_hat_sk({1}, {1}).is_one());
  EXPECT_EQ(factored_hat_sk({1}, {}), (1 - q / t) / (1 - q));
  EXPECT_EQ(factored_hat_sk({1}, {}), pieri_coeff(PieriKind::kHatSk, {1}, {}));
  EXPECT_EQ(at_q_zero(factored_hat_sk({2, 1}, {1})), 1 + t);

  // The uncorrected product agrees on rows and columns at mu = 0 but not in
  // general.
  EXPECT_EQ(hat_sk_as_printed({3}, {}), factored_hat_sk({3}, {}));
  EXPECT_EQ(hat_sk_as_printed({1, 1, 1}, {}), factored_hat_sk({1, 1, 1}, {}));
  EXPECT_EQ(hat_sk_as_printed({2, 1}, {}) / factored_hat_sk({2, 1}, {}), (1 - q) / (1 - q * t));
  EXPECT_EQ(hat_sk_as_printed({1, 1}, {1}) / factored_hat_sk({1, 1}, {1}), (1 - q * t) / (1 - q));
  EXPECT_EQ(at_q_zero(hat_sk_as_printed({2, 1}, {1})), 1 + t);
}

TEST(Pieri, LascouxExamples) {
  EXPECT_EQ(lascoux_modified_hl({2, 1}, {1}), 1 + t);
  EXPECT_TRUE(lascoux_modified_hl({1}, {2}).is_zero());
  for (const auto& lambda : enumerate(5)) {
    EXPECT_EQ(lascoux_modified_hl(lambda, {}), factored_hl(PieriKind::kSk, lambda, {}));
  }

  EXPECT_EQ(lascoux_as_printed({2, 1}, {1}).value(), 1 + t);
  int bad_row = 0;
  EXPECT_FALSE(lascoux_as_printed({2, 1}, {1, 1}, &bad_row).has_value());
  EXPECT_EQ(bad_row, 2);
  // Every index is in range here, yet the typeset product misses the second
  // column of mu and disagrees with sk.
  EXPECT_EQ(lascoux_as_printed({2, 1}, {2}).value(), 1 - t);
  EXPECT_TRUE(factored_hl(PieriKind::kSk, {2, 1}, {2}).is_one());
}

TEST(Pieri, FactoredMatchesPlethysticAtQZero) {
  for (const auto& lambda : enumerate(6)) {
    for (const auto& mu : subpartitions(lambda)) {
      for (PieriKind k : {PieriKind::kVs, PieriKind::kHs, PieriKind::kSk}) {
        EXPECT_EQ(pieri_coeff(k, lambda, mu, true), factored_hl(k, lambda, mu))
            << kind_name(k) << " " << lambda.str() << "/" << mu.str();
      }
    }
  }
}

TEST(Pieri, HatSkProductFormula) {
  for (const auto& lambda : enumerate(5)) {
    for (const auto& mu : subpartitions(lambda)) {
      EXPECT_EQ(pieri_coeff(PieriKind::kHatSk, lambda, mu), factored_hat_sk(lambda, mu))
          << lambda.str() << "/" << mu.str();
    }
  }
}

TEST(Pieri, HatSkReducesToSkAtQZero) {
  for (const auto& lambda : enumerate(5)) {
    for (const auto& mu : subpartitions(lambda)) {
      EXPECT_EQ(at_q_zero(factored_hat_sk(lambda, mu)), factored_hl(PieriKind::kSk, lambda, mu));
    }
  }
}

TEST(Pieri, LascouxMatchesSk) {
  for (const auto& lambda : enumerate(6)) {
    for (const auto& mu : subpartitions(lambda)) {
      EXPECT_EQ(lascoux_modified_hl(lambda, mu), factored_hl(PieriKind::kSk, lambda, mu))
          << lambda.str() << "/" << mu.str();
    }
  }
}

TEST(Pieri, VanishingPatterns) {
  for (const auto& lambda : enumerate(6)) {
    for (const auto& mu : enumerate(lambda.size())) {
      const bool inside = contains(lambda, mu);
      EXPECT_EQ(factored_hl(PieriKind::kVs, lambda, mu).is_zero(), !is_vertical_strip(lambda, mu));
      EXPECT_EQ(factored_hl(PieriKind::kHs, lambda, mu).is_zero(), !is_horizontal_strip(lambda, mu));
      EXPECT_EQ(factored_hl(PieriKind::kSk, lambda, mu).is_zero(), !inside);
      if (lambda.size() <= 5) EXPECT_EQ(factored_hat_sk(lambda, mu).is_zero(), !inside);
    }
  }
}

TEST(Pieri, KanekoMacdonaldWeight) {
  const Alphabet alphabet = Alphabet::difference(1, a, kT);
  for (const auto& lambda : enumerate(5)) {
    const RatFun lhs = MacdonaldCache::macdonald().specialize_skew_Q(lambda, {}, alphabet);
    const RatFun rhs = RatFun(MultiPoly::var(kT, n_stat(lambda))) * gen_pochhammer(a, lambda) /
                       RatFun(hook_products(lambda).c_prime);
    EXPECT_EQ(lhs, rhs) << lambda.str();
  }
}

TEST(Pieri, LatexProducts) {
  EXPECT_EQ(factored_hl_latex(PieriKind::kSk, {2, 1}, {1}), "\\qbin{2}{1}_t");
  EXPECT_EQ(factored_hl_latex(PieriKind::kVs, {2}, {}), "0");
  EXPECT_EQ(factored_hl_latex(PieriKind::kHs, {2}, {1}), "(1-t)");
  EXPECT_EQ(factored_hl_latex(PieriKind::kSk, {1, 1}, {}), "t");
  EXPECT_EQ(factored_hat_sk_latex({1}, {}), "\\frac{(qt^{-1};q)_{1}}{(q;q)_{1}}");
  EXPECT_EQ(factored_hat_sk_latex({1}, {2}), "0");
}
