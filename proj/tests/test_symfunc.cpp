#include <random>

#include <gtest/gtest.h>

#include "printers.hpp"

#include "qtpieri/render.hpp"
#include "qtpieri/symfunc.hpp"

using namespace qtpieri;

namespace {

const RatFun q = RatFun::var(kQ);
const RatFun t = RatFun::var(kT);
const RatFun a = RatFun::var(kA);
const RatFun b = RatFun::var(kB);

SymFunc m(std::initializer_list<std::pair<Partition, RatFun>> terms, int cap) {
  SymFunc f(Basis::kM, cap);
  for (const auto& [lambda, c] : terms) f.add(lambda, c);
  return f;
}

SymFunc random_symfunc(std::mt19937& rng, int max_degree, int cap) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  SymFunc f(Basis::kM, cap);
  for (const auto& lambda : enumerate(max_degree)) {
    const int c = coeff(rng);
    if (c != 0) f.add(lambda, RatFun(c) + RatFun(coeff(rng)) * q - t.pow(c < 0 ? 1 : 2));
  }
  return f;
}

}  // namespace

TEST(SymFunc, ConvertExamples) {
  EXPECT_EQ(convert(SymFunc::p(1, 3), Basis::kM), m({{{1}, 1}}, 3));

  const SymFunc e2 = convert(SymFunc::e(2, 3), Basis::kP);
  SymFunc expected(Basis::kP, 3);
  expected.add({1, 1}, RatFun(Rational(1, 2)));
  expected.add({2}, RatFun(Rational(-1, 2)));
  EXPECT_EQ(e2, expected);

  EXPECT_EQ(convert(SymFunc::h(2, 3), Basis::kM), m({{{2}, 1}, {{1, 1}, 1}}, 3));
  EXPECT_EQ(convert(SymFunc::e(3, 3), Basis::kM), m({{{1, 1, 1}, 1}}, 3));
}

TEST(SymFunc, RoundTrips) {
  const Basis bases[] = {Basis::kM, Basis::kP, Basis::kE, Basis::kH};
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (Basis from : bases) {
        const SymFunc f = SymFunc::element(from, lambda, 6).scaled(1 - q * t);
        for (Basis to : bases) EXPECT_EQ(convert(convert(f, to), from), f);
      }
    }
  }
}

TEST(SymFunc, MultiplyExamples) {
  const SymFunc m1 = m({{{1}, 1}}, 4);
  EXPECT_EQ(multiply(m1, m1), m({{{2}, 1}, {{1, 1}, 2}}, 4));
  const SymFunc f = m({{{2, 1}, q}, {{1}, t}}, 4);
  EXPECT_EQ(multiply(f, SymFunc::one(4)), f);
  EXPECT_THROW(multiply(f, SymFunc::one(5)), std::invalid_argument);
  // Truncation at the cap.
  EXPECT_EQ(multiply(m({{{2, 1}, 1}}, 4), m({{{2}, 1}}, 4)), SymFunc(Basis::kM, 4));
}

TEST(SymFunc, MultiplyAgreesAcrossBases) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    const SymFunc f = random_symfunc(rng, 3, 6);
    const SymFunc g = random_symfunc(rng, 3, 6);
    const SymFunc via_m = multiply(f, g);
    const SymFunc via_p = convert(multiply(convert(f, Basis::kP), convert(g, Basis::kP)), Basis::kM);
    EXPECT_EQ(via_m, via_p);
    EXPECT_EQ(via_m, multiply(g, f));
  }
  const SymFunc e1 = SymFunc::e(1, 4);
  const SymFunc lhs = convert(multiply(e1, e1), Basis::kP);
  SymFunc rhs(Basis::kP, 4);
  rhs.add({1, 1}, RatFun(1));
  EXPECT_EQ(lhs, rhs);
}

TEST(SymFunc, InnerProduct) {
  EXPECT_EQ(inner_product_qt(SymFunc::p(1, 2), SymFunc::p(1, 2)), (1 - q) / (1 - t));
  EXPECT_TRUE(inner_product_qt(SymFunc::p(2, 2), SymFunc::p(1, 2)).is_zero());
  EXPECT_EQ(inner_product_qt(SymFunc::p(2, 2), SymFunc::p(2, 2)), 2 * (1 - q * q) / (1 - t * t));
}

TEST(SymFunc, HallPairingAtQEqualsT) {
  const Bindings q_is_t{{kQ, t}};
  for (int n = 0; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) {
        const RatFun v = substitute(
            inner_product_qt(SymFunc::element(Basis::kH, lambda, n), SymFunc::element(Basis::kM, mu, n)), q_is_t);
        EXPECT_EQ(v, RatFun(lambda == mu ? 1 : 0)) << lambda.str() << " " << mu.str();
      }
    }
  }
}

TEST(SymFunc, SpecializeExamples) {
  const Alphabet sk = Alphabet::difference(1, q, kT);
  EXPECT_EQ(specialize(SymFunc::p(3, 3), sk), (1 - q.pow(3)) / (1 - t.pow(3)));
  EXPECT_TRUE(specialize(SymFunc::h(2, 3), Alphabet::difference(a, a, kT)).is_zero());
  EXPECT_TRUE(specialize(SymFunc::h(2, 3), Alphabet::single(1)).is_one());
  EXPECT_TRUE(specialize(SymFunc::e(2, 3), Alphabet::minus_one()).is_one());
  EXPECT_TRUE(specialize(SymFunc::h(2, 3), Alphabet::minus_one()).is_zero());
  EXPECT_EQ(specialize(SymFunc::e(1, 3), Alphabet::minus_one()), RatFun(-1));
}

TEST(SymFunc, SpecializeIsMultiplicative) {
  std::mt19937 rng(5);
  const Alphabet alpha = Alphabet::difference(a, b, kT);
  for (int trial = 0; trial < 4; ++trial) {
    const SymFunc f = random_symfunc(rng, 2, 5);
    const SymFunc g = random_symfunc(rng, 3, 5);
    const SymFunc fg = multiply(f, g);
    // Compare only below the cap, where the product is complete.
    EXPECT_EQ(specialize(fg, alpha), specialize(f, alpha) * specialize(g, alpha));
  }
}

TEST(SymFunc, HSeriesInverse) {
  // sum_r h_r((a-b)/(1-t)) z^r and its (b-a) counterpart multiply to 1.
  constexpr int kDeg = 6;
  std::vector<RatFun> x, y;
  for (int r = 0; r <= kDeg; ++r) {
    x.push_back(h_series_coeff(r, a, b, kT));
    y.push_back(h_series_coeff(r, b, a, kT));
  }
  EXPECT_TRUE(x[0].is_one());
  EXPECT_EQ(x[1], (a - b) / (1 - t));
  for (int n = 0; n <= kDeg; ++n) {
    std::vector<RatFun> terms;
    for (int r = 0; r <= n; ++r) terms.push_back(x[static_cast<std::size_t>(r)] * y[static_cast<std::size_t>(n - r)]);
    EXPECT_EQ(RatFun::sum(terms), RatFun(n == 0 ? 1 : 0)) << n;
  }
}

TEST(SymFunc, Render) {
  const SymFunc f = m({{{2}, 1}, {{1, 1}, (1 + q) * (1 - t) / (1 - q * t)}}, 2);
  EXPECT_EQ(to_text(f), "m[2] + ((1 + q - t - q*t)/(1 - q*t))*m[1,1]");
  EXPECT_EQ(to_text(SymFunc::one(2)), "1");
  EXPECT_EQ(to_text(m({{{1}, -1}}, 2)), "-m[1]");
  EXPECT_EQ(to_text(SymFunc(Basis::kM, 2)), "0");
}
