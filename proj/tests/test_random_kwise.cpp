#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "lamis/errors.hpp"
#include "lamis/kwise_hash.hpp"
#include "lamis/random.hpp"

using namespace lamis;

TEST(Random, SplitMixReferenceValues) {
  // First outputs of SplitMix64 seeded with 0, as published with the reference C code.
  SplitMix64 rng(0);
  EXPECT_EQ(rng(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng(), 0x06C45D188009454FULL);
}

TEST(Random, DeriveSeedIsStableAndDistinct) {
  EXPECT_EQ(derive_seed(42, 3), derive_seed(42, 3));
  EXPECT_NE(derive_seed(42, 3), derive_seed(42, 4));
  EXPECT_NE(derive_seed(42, 3), derive_seed(43, 3));
  EXPECT_EQ(derive_seed(7, 0), mix64(mix64(7) ^ 0xD1B54A32D192ED03ULL));
}

TEST(Random, UniformBelowCoversRange) {
  SplitMix64 rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 70000; ++i) ++hits[uniform_below(rng, 7)];
  for (int h : hits) EXPECT_NEAR(h, 10000, 500);
  EXPECT_EQ(uniform_below(rng, 1), 0u);
}

TEST(Random, ShuffleIsPermutation) {
  SplitMix64 rng(2);
  std::vector<int> v(100);
  std::iota(v.begin(), v.end(), 0);
  shuffle(v.begin(), v.end(), rng);
  auto sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sorted[i], i);
  EXPECT_FALSE(std::is_sorted(v.begin(), v.end()));
}

TEST(Random, NormalMoments) {
  SplitMix64 rng(4);
  NormalSampler normal;
  const int n = 200000;
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = normal(rng);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  EXPECT_NEAR(mean, 0.0, 5.0 / std::sqrt(n));
  EXPECT_NEAR(sq / n - mean * mean, 1.0, 0.02);
}

TEST(KWiseHash, RejectsSmallK) { EXPECT_THROW(KWiseHash(1, 0), ConfigError); }

TEST(KWiseHash, DeterministicGivenSeed) {
  const KWiseHash h(2, 99);
  const KWiseHash same(2, 99);
  for (std::uint64_t v = 0; v < 1000; ++v) {
    EXPECT_EQ(h(v), h(v));
    EXPECT_EQ(h(v), same(v));
    EXPECT_LT(h(v), KWiseHash::kPrime);
  }
  EXPECT_EQ(kwise_answer(99, 2, 17, 0.5), h.biased_bit(17, 0.5));
}

TEST(KWiseHash, BiasOneAlwaysTrue) {
  const KWiseHash h(4, 5);
  for (std::uint64_t v = 0; v < 10000; ++v) EXPECT_TRUE(h.biased_bit(v, 1.0));
  EXPECT_FALSE(h.biased_bit(3, 0.0));
}

TEST(KWiseHash, EmpiricalBias) {
  const KWiseHash h(64, 12345);
  std::size_t yes = 0;
  const std::size_t n = 100000;
  for (std::uint64_t v = 0; v < n; ++v) yes += h.biased_bit(v, 0.75) ? 1 : 0;
  EXPECT_NEAR(static_cast<double>(yes) / n, 0.75, 0.01);
}

TEST(KWiseHash, ThresholdQuantization) {
  for (double bias : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const double realized = static_cast<double>(KWiseHash::threshold(bias)) / KWiseHash::kPrime;
    EXPECT_LE(bias - realized, 1.0 / KWiseHash::kPrime);
    EXPECT_GE(bias - realized, 0.0);
  }
}

TEST(KWiseHash, PairwiseIndependenceProxy) {
  // For k=2 the pair (h(x), h(y)) is uniform over hash draws; check the joint
  // frequency of two biased bits across many seeds.
  const double bias = 0.5;
  std::size_t both = 0;
  const std::size_t seeds = 40000;
  for (std::uint64_t s = 0; s < seeds; ++s) {
    const KWiseHash h(2, s);
    both += (h.biased_bit(10, bias) && h.biased_bit(11, bias)) ? 1 : 0;
  }
  EXPECT_NEAR(static_cast<double>(both) / seeds, 0.25, 4.0 * std::sqrt(0.25 * 0.75 / seeds));
}
