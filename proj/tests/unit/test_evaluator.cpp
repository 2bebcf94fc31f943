#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "seasons/errors.hpp"
#include "seasons/evaluator.hpp"

using namespace seasons;

TEST(Reconstruct, Examples) {
  EXPECT_EQ(reconstruct({{{0, 0.0}, {2, 2.0}}}, 3), (std::vector<double>{0, 1, 2}));
  EXPECT_EQ(reconstruct({{{1, 5.0}}}, 3), (std::vector<double>{5, 5, 5}));
  EXPECT_EQ(reconstruct({{{0, 0.0}, {4, 0.0}}}, 5), (std::vector<double>(5, 0.0)));
  EXPECT_EQ(reconstruct({}, 4), (std::vector<double>(4, 0.0)));
}

TEST(Reconstruct, RejectsBadLogs) {
  EXPECT_THROW(reconstruct({{{2, 0.0}, {2, 1.0}}}, 5), InputError);
  EXPECT_THROW(reconstruct({{{3, 0.0}, {1, 1.0}}}, 5), InputError);
  EXPECT_THROW(reconstruct({{{5, 0.0}}}, 5), InputError);
  EXPECT_THROW(reconstruct({{{-1, 0.0}}}, 5), InputError);
  EXPECT_THROW(reconstruct({}, 0), InputError);
}

TEST(Reconstruct, FullLogIsExact) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> val;
  std::vector<double> truth(300);
  ReceivedLog log;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    truth[i] = val(rng);
    log.entries.emplace_back(static_cast<Tick>(i), truth[i]);
  }
  const auto r = reconstruct(log, truth.size());
  EXPECT_EQ(r, truth);
  EXPECT_EQ(mae(r, truth), 0.0);
}

TEST(Reconstruct, MatchesBruteForceOracle) {
  std::mt19937_64 rng(1000);
  std::uniform_int_distribution<std::size_t> horizon(1, 100);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t h = horizon(rng);
    const auto entries = oracle::random_log(rng, 20, h);
    const auto got = reconstruct({entries}, h);
    const auto want = oracle::interpolate(entries, h);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < h; ++i) ASSERT_NEAR(got[i], want[i], 1e-12) << trial;

    std::vector<double> truth(h);
    std::uniform_real_distribution<double> val(-10.0, 10.0);
    for (auto& x : truth) x = val(rng);
    EXPECT_NEAR(mae(got, truth), oracle::mae(want, truth), 1e-12);
  }
}

TEST(Mae, Examples) {
  const std::vector<double> gt{0, 1, 2, 1, 0};
  EXPECT_EQ(mae(gt, gt), 0.0);
  EXPECT_DOUBLE_EQ(mae(std::vector<double>(5, 0.0), gt), 0.8);
  std::vector<double> shifted = gt;
  for (auto& x : shifted) x += 2.5;
  EXPECT_DOUBLE_EQ(mae(shifted, gt), 2.5);
  EXPECT_THROW(mae(std::vector<double>{1.0}, gt), InputError);
  EXPECT_THROW(mae(std::vector<double>{}, std::vector<double>{}), InputError);
}

TEST(Mae, NonNegativeAndTranslationCovariant) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> val(-100.0, 100.0);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> a(1 + trial % 50), b(a.size());
    for (auto& x : a) x = val(rng);
    for (auto& x : b) x = val(rng);
    const double m = mae(a, b);
    EXPECT_GE(m, 0.0);
    const double c = val(rng);
    auto a2 = a, b2 = b;
    for (auto& x : a2) x += c;
    for (auto& x : b2) x += c;
    EXPECT_NEAR(mae(a2, b2), m, 1e-9);
  }
}

// On a convex piecewise-linear truth, dropping any interior received sample
// never makes the reconstruction better.
TEST(Reconstruct, RemovingSamplesNeverHelpsOnConvexSegments) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> pieces(2, 6), len(2, 12);
  std::uniform_real_distribution<double> slope_step(0.1, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> truth{0.0};
    double slope = -5.0;
    const int n = pieces(rng);
    for (int p = 0; p < n; ++p) {
      slope += slope_step(rng);  // increasing slopes: convex
      const int l = len(rng);
      for (int i = 0; i < l; ++i) truth.push_back(truth.back() + slope);
    }
    const std::size_t h = truth.size();
    auto log = oracle::random_log(rng, 12, h);
    for (auto& e : log) e.second = truth[static_cast<std::size_t>(e.first)];
    // Keep both ends pinned so only interior samples are removed.
    if (log.empty() || log.front().first != 0) log.insert(log.begin(), {0, truth[0]});
    if (log.back().first != static_cast<Tick>(h - 1))
      log.emplace_back(static_cast<Tick>(h - 1), truth[h - 1]);

    const double full = mae(reconstruct({log}, h), truth);
    for (std::size_t k = 1; k + 1 < log.size(); ++k) {
      auto fewer = log;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
      EXPECT_LE(full, mae(reconstruct({fewer}, h), truth) + 1e-12) << trial << " " << k;
    }
  }
}

TEST(Improvement, Examples) {
  EXPECT_DOUBLE_EQ(*improvement(0.65, 1.0), 0.35);
  EXPECT_EQ(*improvement(1.0, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(*improvement(1.2, 1.0), -0.2);
  EXPECT_FALSE(improvement(0.5, 0.0).has_value());
}

TEST(NormalizedImprovement, Examples) {
  EXPECT_NEAR(*normalized_improvement(0.31, 0.35), 0.8857142857, 1e-9);
  EXPECT_EQ(*normalized_improvement(0.35, 0.35), 1.0);
  EXPECT_EQ(*normalized_improvement(0.0, 0.35), 0.0);
  EXPECT_FALSE(normalized_improvement(0.2, 0.0).has_value());
  EXPECT_FALSE(normalized_improvement(0.2, -0.1).has_value());
}
