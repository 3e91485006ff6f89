#include <random>

#include <gtest/gtest.h>

#include "printers.hpp"

#include "qtpieri/qseries.hpp"
#include "qtpieri/render.hpp"

using namespace qtpieri;

namespace {

const MultiPoly q = MultiPoly::var(kQ);
const MultiPoly t = MultiPoly::var(kT);
const MultiPoly a = MultiPoly::var(kA);

RatFun frac(const MultiPoly& n, const MultiPoly& d) { return RatFun(n, d); }

RatFun random_ratfun(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(0, 2);
  auto poly = [&](int terms) {
    std::vector<MultiPoly::Term> out;
    for (int k = 0; k < terms; ++k) {
      const Monomial m = Monomial::of(kQ, expo(rng)) * Monomial::of(kT, expo(rng));
      out.push_back({m, Rational(coeff(rng))});
    }
    return MultiPoly::from_terms(std::move(out));
  };
  MultiPoly den = poly(2);
  while (den.is_zero()) den = poly(2);
  return RatFun(poly(3), den);
}

}  // namespace

TEST(Poly, DifferenceOfSquares) {
  EXPECT_EQ((1 - q) * (1 + q), 1 - q * q);
  EXPECT_EQ(to_text((1 - q) * (1 + q)), "1 - q^2");
}

TEST(Poly, DivideExact) {
  const MultiPoly p = (1 - q * t) * (1 + q + t * t) * (q - a);
  EXPECT_EQ(p.divide_exact(1 - q * t).value(), (1 + q + t * t) * (q - a));
  EXPECT_FALSE(p.divide_exact(1 - q).has_value());
}

TEST(Poly, Gcd) {
  const MultiPoly g = (1 - q * t) * (q + 2 * t);
  const MultiPoly x = g * (1 + q * q * t);
  const MultiPoly y = g * (3 - t) * (q - 1);
  EXPECT_EQ(gcd(x, y), g.primitive());
  EXPECT_TRUE(gcd(1 - q, 1 + q).is_one());
  EXPECT_EQ(gcd(q * q * t, q * t * t), q * t);
}

TEST(RatFun, ReducesCommonFactors) {
  const RatFun r = frac(1 - q * q, (1 - q) * (1 - t));
  EXPECT_EQ(r, frac(1 + q, 1 - t));
  auto [num, den] = canonical_parts(r);
  EXPECT_EQ(num, -(1 + q));
  EXPECT_EQ(den, t - 1);
  EXPECT_EQ(to_text(r), "(1 + q)/(1 - t)");
}

TEST(RatFun, ZeroDenominatorThrows) {
  EXPECT_THROW(frac(q, MultiPoly{}), std::domain_error);
  EXPECT_THROW(RatFun(0).inverse(), std::domain_error);
}

TEST(RatFun, CyclotomicDenominators) {
  const RatFun x = frac(1, 1 - q * q * q * q * q * q);
  const RatFun y = frac(1, 1 - q * q * q);
  const RatFun s = x + y;
  EXPECT_EQ(s, frac(2 + q * q * q, 1 - q * q * q * q * q * q));
  EXPECT_EQ(y / x, RatFun(1 + q * q * q));
}

TEST(RatFun, FieldAxioms) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const RatFun x = random_ratfun(rng);
    const RatFun y = random_ratfun(rng);
    const RatFun z = random_ratfun(rng);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_TRUE((x - x).is_zero());
    if (!x.is_zero()) EXPECT_TRUE((x / x).is_one());
  }
}

TEST(RatFun, CanonicalizeIsIdempotent) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const RatFun x = random_ratfun(rng) * random_ratfun(rng) + random_ratfun(rng);
    const auto once = canonical_parts(x);
    const auto twice = canonical_parts(RatFun(once.first, once.second));
    EXPECT_EQ(once, twice);
    if (!once.second.is_zero()) {
      EXPECT_GT(once.second.leading_term().coeff, 0);
      EXPECT_TRUE(gcd(once.first, once.second).is_constant());
    }
  }
}

TEST(RatFun, SubstituteAtZero) {
  // (1 - q t)/(1 - q) at q = 0 and at q = t.
  const RatFun r = frac(1 - q * t, 1 - q);
  EXPECT_TRUE(substitute(r, {{kQ, RatFun(0)}}).is_one());
  EXPECT_EQ(substitute(r, {{kQ, RatFun::var(kT)}}), frac(1 - t * t, 1 - t));
  EXPECT_THROW(substitute(r, {{kQ, RatFun(1)}}), std::domain_error);
}

TEST(RatFun, SubstituteIsSimultaneous) {
  const RatFun r = frac(q - t, 1 + q * t);
  const RatFun swapped = substitute(r, {{kQ, RatFun::var(kT)}, {kT, RatFun::var(kQ)}});
  EXPECT_EQ(swapped, -r);
}

TEST(QSeries, NegativePochhammer) {
  const RatFun av = RatFun::var(kA);
  EXPECT_EQ(qpochhammer(av, kQ, -1), frac(q, q - a));
  EXPECT_TRUE(qpochhammer(av, kQ, 0).is_one());
  EXPECT_EQ(qpochhammer(av, kQ, 2), RatFun((1 - a) * (1 - a * q)));
}

TEST(QSeries, PochhammerRecurrence) {
  const RatFun av = RatFun::var(kA);
  const RatFun qv = RatFun::var(kQ);
  for (int k = -4; k <= 4; ++k) {
    const RatFun lhs = qpochhammer(av, kQ, k + 1);
    const RatFun rhs = qpochhammer(av, kQ, k) * (1 - av * qv.pow(k));
    EXPECT_EQ(lhs, rhs) << "k=" << k;
  }
}

TEST(QSeries, GaussBinomial) {
  EXPECT_EQ(gauss_binomial(2, 1, kT), 1 + t);
  EXPECT_EQ(gauss_binomial(4, 2, kT), 1 + t + 2 * t * t + t * t * t + t * t * t * t);
  EXPECT_TRUE(gauss_binomial(3, 4, kT).is_zero());
  EXPECT_TRUE(gauss_binomial(3, -1, kT).is_zero());
}

TEST(QSeries, GaussBinomialPascal) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      const MultiPoly lhs = gauss_binomial(n, k, kT);
      const MultiPoly rhs =
          gauss_binomial(n - 1, k - 1, kT) + t.pow(static_cast<unsigned>(k)) * gauss_binomial(n - 1, k, kT);
      EXPECT_EQ(lhs, rhs) << n << " " << k;
    }
  }
}

TEST(Render, Latex) {
  EXPECT_EQ(to_latex(q * q * t - 1), "-1 + q^{2} t");
  EXPECT_EQ(to_latex(frac(1, 1 - t)), "\\frac{1}{1 - t}");
  EXPECT_EQ(to_text(MultiPoly(Rational(1, 2)) * q), "1/2*q");
}
