// Copyright 2026 The Partisel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "partisel/errors.hpp"
#include "partisel/multinoulli.hpp"
#include "partisel/objectives/coverage.hpp"
#include "partisel/rounding.hpp"

using namespace partisel;

TEST(Rounding, DeterministicBlocks) {
  Partition p({{0, 1, 2}}, {1});
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(round_without_replacement(Eigen::Vector3d(1, 0, 0), p, rng), (Subset{0}));
  }
  Partition two({{0, 1, 2}}, {2});
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(round_without_replacement(Eigen::Vector3d(0.5, 0.5, 0), two, rng),
              (Subset{0, 1}));
  }
}

TEST(Rounding, ZeroBlockIsUniformOverBudgetSubsets) {
  Partition p({{0, 1, 2}}, {2});
  Rng rng(2);
  const int N = 60'000;
  std::map<std::vector<Index>, int> counts;
  for (int i = 0; i < N; ++i) {
    const Subset s = round_without_replacement(Eigen::Vector3d::Zero(), p, rng);
    ASSERT_EQ(s.size(), 2u);
    ++counts[std::vector<Index>(s.begin(), s.end())];
  }
  ASSERT_EQ(counts.size(), 3u);
  const double sd = std::sqrt((1.0 / 3) * (2.0 / 3) / N);
  for (const auto& [s, c] : counts) EXPECT_LE(std::abs(c / double(N) - 1.0 / 3), 3 * sd);
}

TEST(Rounding, NaiveRounding) {
  Partition p({{0, 1}}, {2});
  Rng rng(3);
  EXPECT_TRUE(round_naive(Eigen::Vector2d::Zero(), p, rng).empty());
  EXPECT_EQ(round_naive(Eigen::Vector2d(0, 1), p, rng), (Subset{1}));
  auto f = make_handle(2, true, [](std::span<const Index> s) {
    bool b = false, a = false;
    for (Index v : s) (v == 0 ? a : b) = true;
    return b ? 2.0 : (a ? 1.0 : 0.0);
  });
  const int N = 100'000;
  double sum = 0, sq = 0;
  for (int i = 0; i < N; ++i) {
    const double v = f.evaluate(round_naive(Eigen::Vector2d(0.5, 0.25), p, rng));
    sum += v;
    sq += v * v;
  }
  const double mean = sum / N;
  const double se = std::sqrt((sq / N - mean * mean) / N);
  EXPECT_LE(std::abs(mean - 1.375), 3 * se);
}

TEST(Rounding, BestOfRounds) {
  const CoverageProblem c = coverage_build(20, 5, 0.01);
  Point x = Point::Zero(40);
  for (int i = 1; i <= 20; ++i) x[c.partition.coordinate_of(c.instance.b_id(i))] = 1.0;
  Rng rng(4);
  const auto handle = c.handle.fresh();
  const RoundingResult r =
      best_of_rounds(x, c.partition, handle, {RoundingMode::WithoutReplacement, 25}, rng);
  EXPECT_DOUBLE_EQ(r.value, 34.0);
  EXPECT_EQ(r.queries, 25);
  EXPECT_EQ(handle.queries(), 25);
  EXPECT_THROW(best_of_rounds(x, c.partition, handle, {RoundingMode::Naive, 0}, rng),
               InputError);

  // Retry i draws from substream(master, i) with master taken from rng, so
  // the batch can be replayed: the best dominates every member and one
  // retry is a single rounding.
  const Point u = uniform_point(c.partition);
  Rng a(9);
  const RoundingResult best =
      best_of_rounds(u, c.partition, handle, {RoundingMode::WithoutReplacement, 30}, a);
  Rng replay(9);
  const std::uint64_t master = replay();
  for (int i = 0; i < 30; ++i) {
    Rng local = substream(master, i);
    EXPECT_GE(best.value,
              c.handle.evaluate(round_without_replacement(u, c.partition, local)));
  }
  Rng one(10), one_replay(10);
  const RoundingResult single =
      best_of_rounds(u, c.partition, handle, {RoundingMode::WithoutReplacement, 1}, one);
  Rng local = substream(one_replay(), 0);
  EXPECT_EQ(single.subset, round_without_replacement(u, c.partition, local));
}

TEST(Rounding, LosslessOnRandomInstances) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 3; ++trial) {
    const Partition p = oracle::random_partition(7, 3, 2, gen);
    const auto cov = oracle::random_coverage(7, 9, gen);
    auto h = make_handle(7, true, [cov](std::span<const Index> s) {
      return cov(std::vector<Index>(s.begin(), s.end()));
    });
    const Eigen::VectorXd x = oracle::random_point(p, gen);
    const double F = oracle::multinoulli_value(cov, p, x);
    Rng rng(trial);
    const int N = 20'000;
    double sum = 0, sq = 0;
    for (int i = 0; i < N; ++i) {
      const Subset s = round_without_replacement(x, p, rng);
      const auto counts = community_counts(p, s);
      for (int k = 0; k < p.num_communities(); ++k) ASSERT_EQ(counts[k], p.budget(k));
      const double v = h.evaluate(s);
      sum += v;
      sq += v * v;
    }
    const double mean = sum / N;
    const double se = std::sqrt((sq / N - mean * mean) / N);
    EXPECT_GE(mean, F - 3 * se);
  }
}
