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

#include <cstdlib>
#include <random>
#include <set>
#include <thread>

#include "oracles.hpp"
#include "partisel/errors.hpp"
#include "partisel/partition.hpp"
#include "partisel/rng.hpp"
#include "partisel/set_function.hpp"
#include "partisel/subset.hpp"

using namespace partisel;

TEST(Partition, LayoutAndLookups) {
  Partition p({{3, 0}, {1, 4, 2}}, {1, 2});
  EXPECT_EQ(p.num_communities(), 2);
  EXPECT_EQ(p.ground_size(), 5);
  EXPECT_EQ(p.rank(), 3);
  EXPECT_EQ(p.max_budget(), 2);
  EXPECT_EQ(p.offset(1), 2);
  for (Eigen::Index i = 0; i < 5; ++i) {
    const Index v = p.element_at(i);
    EXPECT_EQ(p.coordinate_of(v), i);
  }
  EXPECT_EQ(p.element_at(0), 3);
  EXPECT_EQ(p.community_of(4), 1);
}

TEST(Partition, RejectsBadInput) {
  EXPECT_THROW(Partition({}, {}), InputError);
  EXPECT_THROW(Partition({{0, 1}}, {1, 1}), InputError);
  EXPECT_THROW(Partition({{0, 1}, {1}}, {1, 1}), InputError);     // overlap
  EXPECT_THROW(Partition({{0, 2}}, {1}), InputError);             // gap
  EXPECT_THROW(Partition({{0, 1}}, {3}), InputError);             // budget > size
  EXPECT_THROW(Partition({{0, 1}}, {0}), InputError);             // budget < 1
  EXPECT_THROW(Partition({{0}, {}}, {1, 1}), InputError);         // empty
}

TEST(Partition, FeasibleFamilySizeMatchesEnumeration) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Partition p = oracle::random_partition(9, 3, 3, rng);
    EXPECT_EQ(p.feasible_family_size(1'000'000),
              static_cast<std::int64_t>(oracle::feasible_family(p).size()));
  }
  const Partition big = Partition::uniform(40, 10, 5);
  EXPECT_EQ(big.feasible_family_size(1000), 1001);
}

TEST(Partition, GroupBuilders) {
  const Partition c = consecutive_groups(60, 25, 1);
  ASSERT_EQ(c.num_communities(), 3);
  EXPECT_EQ(c.size(2), 10);
  EXPECT_EQ(c.community(1)[0], 25);
  Rng rng(3);
  const Partition r = random_groups(23, 10, 1, rng);
  EXPECT_EQ(r.num_communities(), 10);
  EXPECT_EQ(r.ground_size(), 23);
  for (int k = 0; k < 10; ++k) {
    EXPECT_GE(r.size(k), 2);
    EXPECT_LE(r.size(k), 3);
  }
  EXPECT_THROW(random_groups(5, 6, 1, rng), InputError);
}

TEST(Subset, SortedUnique) {
  Subset s({4, 1, 3});
  EXPECT_EQ(std::vector<Index>(s.begin(), s.end()), (std::vector<Index>{1, 3, 4}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.with(2).size(), 4u);
  EXPECT_EQ(s.with(3), s);
  EXPECT_THROW(Subset({1, 1}), InputError);
  EXPECT_THROW(Subset({-1}), InputError);
}

TEST(Subset, Feasibility) {
  Partition p({{0, 1, 2}, {3, 4}}, {2, 1});
  EXPECT_TRUE(feasibility_check(p, {0, 2, 4}));
  EXPECT_FALSE(feasibility_check(p, {3, 4}));
  EXPECT_FALSE(feasibility_check(p, {0, 9}));
  EXPECT_EQ(community_counts(p, {0, 1, 3}), (std::vector<int>{2, 1}));
  EXPECT_THROW(community_counts(p, {7}), InputError);
}

TEST(SetFunction, HandleCountsEveryEvaluation) {
  auto h = make_handle(4, true, [](std::span<const Index> s) {
    return static_cast<double>(s.size());
  });
  EXPECT_EQ(h.queries(), 0);
  EXPECT_DOUBLE_EQ(h.evaluate(Subset{0, 2}), 2.0);
  EXPECT_DOUBLE_EQ(marginal(h, 1, Subset{0}), 1.0);
  EXPECT_EQ(h.queries(), 3);
  EXPECT_DOUBLE_EQ(marginal(h, 1, Subset{0}, 1.0), 1.0);
  EXPECT_EQ(h.queries(), 4);
  EXPECT_THROW(marginal(h, 0, Subset{0}), InputError);
  EXPECT_THROW(h.evaluate(Subset{4}), InputError);
  auto g = h.fresh();
  EXPECT_EQ(g.queries(), 0);
  SetFunctionHandle moved(std::move(g));
  moved.evaluate(Subset{});
  EXPECT_EQ(moved.queries(), 1);
}

TEST(SetFunction, NormalizedSubtractsEmptyValue) {
  auto inner = std::make_shared<LambdaSetFunction>(
      3, true, [](std::span<const Index> s) { return 5.0 + static_cast<double>(s.size()); });
  NormalizedSetFunction f(inner);
  EXPECT_DOUBLE_EQ(f.empty_value(), 5.0);
  const Index ids[] = {0, 1};
  EXPECT_DOUBLE_EQ(f.value(ids), 2.0);
}

TEST(Rng, SubstreamsAreDeterministicAndDistinct) {
  EXPECT_EQ(substream_seed(1, 2), substream_seed(1, 2));
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(substream_seed(42, i));
  EXPECT_EQ(seen.size(), 1000u);
}

TEST(Rng, ParallelForCoversEveryIndexAndPropagatesErrors) {
  setenv("PARTISEL_THREADS", "3", 1);
  EXPECT_EQ(worker_count(), 3);
  std::vector<int> hits(1000, 0);
  parallel_for(1000, [&](std::int64_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10,
                            [](std::int64_t i) {
                              if (i == 7) throw InputError("boom");
                            }),
               InputError);
  unsetenv("PARTISEL_THREADS");
  EXPECT_EQ(worker_count(), 1);
}
