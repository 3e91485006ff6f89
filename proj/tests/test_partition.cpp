#include <gtest/gtest.h>

#include "printers.hpp"

#include "qtpieri/partition.hpp"

using namespace qtpieri;

namespace {
const MultiPoly q = MultiPoly::var(kQ);
const MultiPoly t = MultiPoly::var(kT);
}  // namespace

TEST(Partition, TrimsZeros) {
  EXPECT_EQ(Partition({1, 0}), Partition({1}));
  EXPECT_EQ(Partition({0, 0}), Partition{});
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({-1}), std::invalid_argument);
}

TEST(Partition, ParseAndFormat) {
  EXPECT_EQ(Partition::parse("2,1"), Partition({2, 1}));
  EXPECT_EQ(Partition::parse(""), Partition{});
  EXPECT_EQ(Partition::parse("(3, 1, 1)"), Partition({3, 1, 1}));
  EXPECT_EQ(Partition({2, 1}).str(), "2,1");
  EXPECT_EQ(Partition{}.str(), "");
  EXPECT_THROW(Partition::parse("2,x"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("1,2"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2,,1"), std::invalid_argument);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate({2, 1}), Partition({2, 1}));
  EXPECT_EQ(conjugate({3}), Partition({1, 1, 1}));
  EXPECT_EQ(conjugate({}), Partition{});
  EXPECT_EQ(conjugate({4, 2, 1}), Partition({3, 2, 1, 1}));
}

TEST(Partition, ConjugateIsInvolution) {
  for (const auto& lambda : enumerate(8)) {
    const Partition lc = conjugate(lambda);
    EXPECT_EQ(conjugate(lc), lambda);
    EXPECT_EQ(lc.size(), lambda.size());
  }
}

TEST(Partition, StripTests) {
  StripInfo s = strip_tests({2, 1}, {1});
  EXPECT_TRUE(s.contains);
  EXPECT_EQ(s.horizontal_r, 2);
  EXPECT_EQ(s.vertical_r, 2);

  s = strip_tests({2}, {});
  EXPECT_FALSE(s.vertical_r.has_value());
  EXPECT_EQ(s.horizontal_r, 2);

  s = strip_tests({1}, {2});
  EXPECT_FALSE(s.contains);
  EXPECT_FALSE(s.horizontal_r.has_value());
}

TEST(Partition, StripsByColumns) {
  for (const auto& lambda : enumerate(7)) {
    const Partition lc = conjugate(lambda);
    for (const auto& mu : subpartitions(lambda)) {
      const Partition mc = conjugate(mu);
      bool horizontal = true;
      for (int i = 1; i <= lc.length(); ++i) horizontal = horizontal && lc.part(i) - mc.part(i) <= 1;
      EXPECT_EQ(is_horizontal_strip(lambda, mu), horizontal) << lambda.str() << "/" << mu.str();
      EXPECT_EQ(is_vertical_strip(lambda, mu), is_horizontal_strip(lc, mc));
    }
  }
}

TEST(Partition, NStatistic) {
  EXPECT_EQ(n_stat({2, 1}), 1);
  EXPECT_EQ(n_stat({}), 0);
  EXPECT_EQ(n_skew({2, 1}, {1}), 0);
  EXPECT_THROW(n_skew({1}, {2}), std::invalid_argument);
  for (const auto& lambda : enumerate(8)) {
    const Partition lc = conjugate(lambda);
    int by_columns = 0;
    for (int c : lc.parts()) by_columns += c * (c - 1) / 2;
    EXPECT_EQ(n_stat(lambda), by_columns);
    EXPECT_EQ(n_skew(lambda, {}), n_stat(lambda));
  }
}

TEST(Partition, HookProducts) {
  HookProducts h = hook_products({1});
  EXPECT_EQ(h.c, 1 - t);
  EXPECT_EQ(h.c_prime, 1 - q);
  h = hook_products({});
  EXPECT_TRUE(h.c.is_one());
  EXPECT_TRUE(h.c_prime.is_one());
  h = hook_products({2});
  EXPECT_EQ(h.c, (1 - q * t) * (1 - t));
  EXPECT_EQ(h.c_prime, (1 - q * q) * (1 - q));
}

TEST(Partition, HookDuality) {
  const Bindings swap{{kQ, RatFun::var(kT)}, {kT, RatFun::var(kQ)}};
  for (const auto& lambda : enumerate(6)) {
    const RatFun c(hook_products(lambda).c);
    const RatFun cp_conj(hook_products(conjugate(lambda)).c_prime);
    EXPECT_EQ(c, substitute(cp_conj, swap)) << lambda.str();
  }
}

TEST(Partition, GeneralizedPochhammer) {
  const RatFun a = RatFun::var(kA);
  EXPECT_EQ(gen_pochhammer(a, {1}), 1 - a);
  EXPECT_TRUE(gen_pochhammer(a, {}).is_one());
  EXPECT_EQ(gen_pochhammer(a, {1, 1}), (1 - a) * (1 - a / RatFun::var(kT)));
}

TEST(Partition, Enumerate) {
  const std::vector<Partition> expected{{}, {1}, {2}, {1, 1}};
  EXPECT_EQ(enumerate(2), expected);
  EXPECT_EQ(partitions_of(8).size(), 22u);
  const auto all = enumerate(8);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  for (std::size_t k = 0; k < partitions_of(6).size(); ++k) EXPECT_EQ(partition_index(partitions_of(6)[k]), k);
}

TEST(Partition, Dominance) {
  EXPECT_TRUE(dominance_leq({1, 1}, {2}));
  EXPECT_FALSE(dominance_leq({2}, {1, 1}));
  EXPECT_THROW(dominance_leq({1}, {2}), std::invalid_argument);
  EXPECT_FALSE(dominance_leq({3, 1, 1, 1}, {2, 2, 2}));
  EXPECT_FALSE(dominance_leq({2, 2, 2}, {3, 1, 1, 1}));
  // Enumeration order is a linear extension with larger partitions first.
  for (int n = 0; n <= 7; ++n) {
    const auto& level = partitions_of(n);
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (std::size_t j = i + 1; j < level.size(); ++j) EXPECT_FALSE(dominance_leq(level[i], level[j]));
    }
  }
}
