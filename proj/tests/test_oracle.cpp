#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "lamis/errors.hpp"
#include "lamis/instance.hpp"
#include "lamis/oracle.hpp"
#include "test_util.hpp"

using namespace lamis;

namespace {

VertexSet every_other(std::size_t n) {
  std::vector<Vertex> ids;
  for (Vertex v = 0; v < n; v += 2) ids.push_back(v);
  return VertexSet(n, ids);
}

// Fraction of correct Bernoulli answers over one query per vertex.
double correctness(Oracle& o, const VertexSet& truth) {
  const auto mask = truth.mask();
  std::size_t correct = 0;
  for (Vertex v = 0; v < o.num_vertices(); ++v) correct += o.query_bool(v) == (mask[v] != 0) ? 1 : 0;
  return static_cast<double>(correct) / static_cast<double>(o.num_vertices());
}

}  // namespace

TEST(OracleConfig, CapFlipProbability) {
  EXPECT_DOUBLE_EQ(cap_flip_probability(0.5), 0.25);
  EXPECT_DOUBLE_EQ(cap_flip_probability(0.25), 0.0);
  OracleConfig c{0.5, NoiseMode::persistent_random, 2, 1, true};
  EXPECT_TRUE(c.capped());
  EXPECT_DOUBLE_EQ(c.effective_epsilon(), 0.25);
  // (1/2 - eps) + p (1/2 + eps) = 1/4 exactly.
  EXPECT_DOUBLE_EQ((0.5 - 0.5) + c.flip_probability() * (0.5 + 0.5), 0.25);
  c.mode = NoiseMode::bandit_bernoulli;
  EXPECT_FALSE(c.capped());
  EXPECT_DOUBLE_EQ(c.effective_epsilon(), 0.5);
}

TEST(OracleConfig, Validation) {
  const VertexSet truth(3, {0});
  EXPECT_THROW(Oracle(truth, {0.0, NoiseMode::bandit_bernoulli, 2, 0, true}), ConfigError);
  EXPECT_THROW(Oracle(truth, {0.51, NoiseMode::bandit_bernoulli, 2, 0, true}), ConfigError);
  EXPECT_THROW(Oracle(truth, {0.25, NoiseMode::persistent_kwise, 1, 0, true}), ConfigError);
  EXPECT_NO_THROW(Oracle(truth, {0.5, NoiseMode::bandit_bernoulli, 2, 0, true}));
  EXPECT_EQ(parse_noise_mode(to_string(NoiseMode::persistent_kwise)), NoiseMode::persistent_kwise);
  EXPECT_THROW(parse_noise_mode("noisy"), ConfigError);
}

TEST(MakeOracle, RejectsDependentPlantedSet) {
  PlantedInstance bad{testutil::path(2), VertexSet(2, {0, 1}), {}};
  EXPECT_THROW(make_oracle(bad, {}), ConfigError);
}

TEST(Oracle, PerfectOracleAlwaysCorrect) {
  const VertexSet truth = every_other(1000);
  for (NoiseMode m : {NoiseMode::persistent_random, NoiseMode::persistent_kwise, NoiseMode::bandit_bernoulli}) {
    Oracle o(truth, {0.5, m, 8, 3, false});
    for (int rep = 0; rep < 3; ++rep) EXPECT_DOUBLE_EQ(correctness(o, truth), 1.0) << to_string(m);
  }
}

TEST(Oracle, PersistentAnswersRepeat) {
  const VertexSet truth = every_other(500);
  for (NoiseMode m : {NoiseMode::persistent_random, NoiseMode::persistent_kwise}) {
    Oracle o(truth, {0.25, m, 4, 9, true});
    std::vector<bool> first;
    for (Vertex v = 0; v < 500; ++v) first.push_back(o.query_bool(v));
    for (Vertex v = 500; v-- > 0;) EXPECT_EQ(o.query_bool(v), first[v]);
    EXPECT_EQ(o.queries(7), 2u);
    EXPECT_EQ(o.total_queries(), 1000u);
  }
}

TEST(Oracle, NonPersistentFalseRate) {
  Oracle o(VertexSet(1, {}), {0.25, NoiseMode::bandit_bernoulli, 2, 17, true});
  std::size_t yes = 0;
  const std::size_t n = 1000000;
  for (std::size_t i = 0; i < n; ++i) yes += o.query_bool(0) ? 1 : 0;
  EXPECT_NEAR(static_cast<double>(yes) / n, 0.25, 0.005);
}

TEST(Oracle, GaussianMoments) {
  const VertexSet truth(2, {0});
  Oracle o(truth, {0.25, NoiseMode::bandit_gaussian, 2, 21, true});
  const int n = 100000;
  double sum_in = 0.0;
  double sum_out = 0.0;
  double sq_out = 0.0;
  for (int i = 0; i < n; ++i) {
    sum_in += o.query_real(0);
    const double x = o.query_real(1);
    sum_out += x;
    sq_out += x * x;
  }
  EXPECT_NEAR(sum_in / n, 0.75, 0.02);
  const double mean_out = sum_out / n;
  EXPECT_NEAR(sq_out / n - mean_out * mean_out, 1.0, 0.05);
  EXPECT_NE(o.query_real(1), o.query_real(1));
}

TEST(Oracle, ModeErrors) {
  const VertexSet truth(2, {0});
  Oracle g(truth, {0.25, NoiseMode::bandit_gaussian, 2, 0, true});
  EXPECT_THROW(g.query_bool(0), ModeError);
  Oracle b(truth, {0.25, NoiseMode::bandit_bernoulli, 2, 0, true});
  EXPECT_THROW(b.query_real(0), ModeError);
  EXPECT_THROW(b.query_bool(2), InputError);
}

TEST(Oracle, Ledger) {
  Oracle o(every_other(10), {0.25, NoiseMode::bandit_bernoulli, 2, 5, true});
  EXPECT_EQ(total_queries(o), 0u);
  o.query_bool(1);
  o.query_bool(1);
  o.query_bool(4);
  EXPECT_EQ(total_queries(o), 3u);
  Oracle fresh(every_other(10), {0.25, NoiseMode::persistent_random, 2, 5, true});
  for (Vertex v = 0; v < 10; ++v) fresh.query_bool(v);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(fresh.queries(v), 1u);
  std::uint64_t sum = 0;
  for (auto c : fresh.ledger().per_vertex) sum += c;
  EXPECT_EQ(sum, fresh.ledger().total);
}

TEST(Oracle, AdvantageAcrossModes) {
  const std::size_t n = 1000000;
  const double tol = 4.0 * std::sqrt(0.25 / static_cast<double>(n));
  const VertexSet truth = every_other(n);
  for (NoiseMode m : {NoiseMode::persistent_random, NoiseMode::persistent_kwise, NoiseMode::bandit_bernoulli}) {
    for (double eps : {0.1, 0.25, 0.4, 0.5}) {
      Oracle o(truth, {eps, m, 16, 77, true});
      EXPECT_NEAR(correctness(o, truth), 0.5 + o.effective_epsilon(), tol) << to_string(m) << " eps " << eps;
    }
  }
}

TEST(Oracle, SameSeedSameAnswers) {
  const VertexSet truth = every_other(2000);
  for (NoiseMode m : {NoiseMode::persistent_random, NoiseMode::persistent_kwise, NoiseMode::bandit_bernoulli}) {
    Oracle a(truth, {0.2, m, 4, 31, true});
    Oracle b(truth, {0.2, m, 4, 31, true});
    Oracle c(truth, {0.2, m, 4, 32, true});
    std::size_t differ = 0;
    for (Vertex v = 0; v < 2000; ++v) {
      const bool x = a.query_bool(v);
      EXPECT_EQ(x, b.query_bool(v));
      differ += x != c.query_bool(v) ? 1 : 0;
    }
    EXPECT_GT(differ, 0u);
  }
}
