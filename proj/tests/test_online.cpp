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

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "partisel/errors.hpp"
#include "partisel/multinoulli.hpp"
#include "partisel/objectives/coverage.hpp"
#include "partisel/objectives/modular.hpp"
#include "partisel/online.hpp"

using namespace partisel;

TEST(Online, OracleStepBasics) {
  Partition p({{0, 1, 2}, {3, 4}}, {1, 1});
  LinearOracle o(p, 0.1);
  const Point start = o.play();
  o.step(Eigen::VectorXd::Zero(5), p);
  EXPECT_TRUE(o.play().isApprox(start));
  EXPECT_EQ(o.steps(), 1);

  LinearOracle neg = o;
  for (int i = 0; i < 50; ++i) neg = oracle_step(neg, -Eigen::VectorXd::Ones(5), p);
  EXPECT_TRUE(neg.play().isZero());
  EXPECT_THROW(o.step(Eigen::VectorXd::Zero(3), p), InputError);
}

TEST(Online, ConstantFeedbackRegretVanishes) {
  Partition p({{0, 1, 2}, {3, 4}}, {1, 1});
  Eigen::VectorXd g(5);
  g << 0.2, 1.0, 0.5, -0.3, 0.4;
  const double best = linear_argmax_subset(g, p).value;
  // Projected gradient bound D^2 / (2 eta) + eta G^2 T / 2, where each
  // block contributes at most 2 to the squared diameter.
  const double D2 = 2.0 * p.num_communities();
  double previous = 1e9;
  for (int T : {10, 100, 1000}) {
    LinearOracle o(p, 1.0 / std::sqrt(static_cast<double>(T)));
    double earned = 0.0;
    for (int t = 0; t < T; ++t) {
      earned += g.dot(o.play());
      o.step(g, p);
    }
    const double per_round = (T * best - earned) / T;
    EXPECT_GE(per_round, -1e-12);
    EXPECT_LT(per_round, previous);
    const double eta = 1.0 / std::sqrt(static_cast<double>(T));
    EXPECT_LE(per_round * T, D2 / (2 * eta) + eta * g.squaredNorm() * T / 2);
    previous = per_round;
  }
}

TEST(Online, AdaptiveStep) {
  AdaptiveStep s{2.0, 4};
  EXPECT_EQ(s.next(0.0), 0.0);
  EXPECT_DOUBLE_EQ(s.next(4.0), 2.0 / (4.0 * 2.0));
  EXPECT_DOUBLE_EQ(s.next(1.0), 2.0 / (4.0 * 2.0));
}

TEST(Online, ProtocolIsEnforced) {
  const CoverageProblem c = coverage_build(6, 2, 0.01);
  OsgaSession osga(c.partition, {});
  EXPECT_THROW(osga.observe(c.handle), ProtocolError);
  osga.commit();
  EXPECT_THROW(osga.commit(), ProtocolError);
  osga.observe(c.handle);
  EXPECT_THROW(osga.observe(c.handle), ProtocolError);

  OscgConfig cfg;
  cfg.Q = 2;
  cfg.L = 2;
  OscgSession oscg(c.partition, cfg);
  EXPECT_THROW(oscg.observe(c.handle), ProtocolError);
  oscg.commit();
  EXPECT_THROW(oscg.commit(), ProtocolError);
  auto wrong = cardinality_build(5);
  EXPECT_THROW(oscg.observe(wrong), InputError);
}

TEST(Online, OsgaZeroStepKeepsThePoint) {
  const CoverageProblem c = coverage_build(6, 2, 0.01);
  OsgaConfig cfg;
  cfg.eta = 0.0;
  OsgaSession s(c.partition, cfg);
  const Point x0 = s.point();
  for (int t = 0; t < 5; ++t) {
    s.commit();
    s.observe(c.handle);
  }
  EXPECT_TRUE(s.point().isApprox(x0));
  EXPECT_EQ(s.history().size(), 5u);
  EXPECT_EQ(s.history().back().t, 5);
}

TEST(Online, OscgSingleOracleGetsExactBaseGradient) {
  const CoverageProblem c = coverage_build(6, 2, 0.01);
  OscgConfig cfg;
  cfg.Q = 1;
  cfg.L = 3;
  cfg.eta = 0.5;
  OscgSession s(c.partition, cfg);
  s.commit();
  const SetFunctionHandle h = c.handle.fresh();
  const OnlineRound& r = s.observe(h);
  const SpiderState exact = spider_init(c.handle, c.partition);
  ASSERT_EQ(r.feedback_norms.size(), 1u);
  EXPECT_DOUBLE_EQ(r.feedback_norms[0], exact.g.norm());
  const Point expect = project(uniform_point(c.partition) + 0.5 * exact.g, c.partition);
  EXPECT_TRUE(s.oracles()[0].play().isApprox(expect));
  // Reward evaluation plus the n + 1 evaluations of the base gradient.
  EXPECT_EQ(h.queries(), 1 + 13);
  EXPECT_EQ(r.queries, h.queries());
}

TEST(Online, OscgQueryAudit) {
  const CoverageProblem c = coverage_build(6, 2, 0.01);
  OscgConfig cfg;
  cfg.Q = 3;
  cfg.L = 2;
  OscgSession s(c.partition, cfg);
  const SetFunctionHandle h = c.handle.fresh();
  for (int t = 0; t < 4; ++t) {
    s.commit();
    s.observe(h);
  }
  EXPECT_EQ(s.history().back().queries, h.queries());
}

TEST(Online, StationaryStreamImproves) {
  const CoverageProblem c = coverage_build(8, 3, 0.01);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    OscgConfig cfg;
    cfg.T = 200;
    cfg.Q = 4;
    cfg.L = 4;
    cfg.seed = seed;
    OscgSession s(c.partition, cfg);
    for (int t = 0; t < 200; ++t) {
      s.commit();
      s.observe(c.handle);
    }
    double first = 0.0, last = 0.0;
    for (int t = 0; t < 50; ++t) {
      first += s.history()[t].reward;
      last += s.history()[150 + t].reward;
    }
    EXPECT_GE(last, first) << "seed " << seed;
  }
}

TEST(Online, RhoRegretAndHindsight) {
  std::mt19937_64 gen(3);
  const Partition p = oracle::random_partition(7, 3, 2, gen);
  std::vector<SetFunctionHandle> stream;
  std::vector<oracle::RandomCoverage> covs;
  for (int t = 0; t < 6; ++t) {
    covs.push_back(oracle::random_coverage(7, 6, gen));
    auto cov = covs.back();
    stream.push_back(make_handle(7, true, [cov](std::span<const Index> s) {
      return cov(std::vector<Index>(s.begin(), s.end()));
    }));
  }
  std::vector<const SetFunctionHandle*> ptrs;
  for (const auto& h : stream) ptrs.push_back(&h);

  double brute = -1.0;
  std::vector<Index> arg;
  for (const auto& s : oracle::feasible_family(p)) {
    double total = 0.0;
    for (const auto& cov : covs) total += cov(s);
    if (total > brute) {
      brute = total;
      arg = s;
    }
  }
  const Hindsight best = best_fixed_in_hindsight(ptrs, p);
  EXPECT_FALSE(best.approximate);
  EXPECT_NEAR(best.total, brute, 1e-12);

  OsgaConfig cfg;
  cfg.T = 6;
  OsgaSession s(p, cfg);
  for (const auto& h : stream) {
    s.commit();
    s.observe(h);
  }
  double earned = 0.0, comparator = 0.0;
  for (std::size_t t = 0; t < covs.size(); ++t) {
    earned += s.history()[t].reward;
    comparator += covs[t](arg);
  }
  EXPECT_NEAR(rho_regret(s.history(), 0.5, best.subset, p, ptrs),
              0.5 * comparator - earned, 1e-12);
  EXPECT_NEAR(rho_regret(s.history(), 0.0, best.subset, p, ptrs), -earned, 1e-12);
  EXPECT_THROW(rho_regret(s.history(), 1.0, best.subset, p,
                          std::span<const SetFunctionHandle* const>(ptrs).first(2)),
               InputError);

  const Hindsight approx = best_fixed_in_hindsight(ptrs, p, 1);
  EXPECT_TRUE(approx.approximate);
  EXPECT_LE(approx.total, best.total + 1e-12);
}

TEST(Online, RhoRegretOfPlayingTheComparator) {
  auto h = modular_build({1, 2, 3});
  Partition p({{0, 1, 2}}, {1});
  std::vector<OnlineRound> history;
  for (int t = 1; t <= 4; ++t) {
    OnlineRound r;
    r.t = t;
    r.subset = Subset{2};
    r.reward = 3.0;
    history.push_back(r);
  }
  std::vector<const SetFunctionHandle*> ptrs(4, &h);
  EXPECT_NEAR(rho_regret(history, 0.7, Subset{2}, p, ptrs), (0.7 - 1.0) * 4 * 3.0, 1e-12);
}

TEST(Online, HistoryCsv) {
  std::vector<OnlineRound> history(2);
  history[0].t = 1;
  history[0].reward = 2.0;
  history[0].cumulative_reward = 2.0;
  history[0].queries = 5;
  history[1].t = 2;
  history[1].reward = 4.0;
  history[1].cumulative_reward = 6.0;
  history[1].queries = 9;
  std::ostringstream os;
  write_history_csv(os, history);
  EXPECT_EQ(os.str(), "t,reward,running_average,queries\n1,2,2,5\n2,4,3,9\n");
}
