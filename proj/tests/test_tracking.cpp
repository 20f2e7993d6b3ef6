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

#include <cmath>
#include <numbers>

#include "partisel/errors.hpp"
#include "partisel/tracking.hpp"

using namespace partisel;

TEST(TrackingSim, MixCounts) {
  EXPECT_EQ(mix_counts({4, 5, 1}, 30), (std::array<int, 3>{12, 15, 3}));
  EXPECT_EQ(mix_counts({4, 5, 1}, 8), (std::array<int, 3>{3, 4, 1}));
  EXPECT_EQ(mix_counts({1, 0, 0}, 5), (std::array<int, 3>{5, 0, 0}));
  EXPECT_EQ(parse_mix("R:A:P=4:5:1"), (std::array<int, 3>{4, 5, 1}));
  EXPECT_EQ(parse_mix("2:1:1"), (std::array<int, 3>{2, 1, 1}));
  EXPECT_THROW(parse_mix("4-5-1"), InputError);
  EXPECT_THROW(mix_counts({0, 0, 0}, 3), InputError);
}

TEST(TrackingSim, TimeStep) {
  Scenario full_scale;
  full_scale.T = 1250;
  full_scale.horizon = 25.0;
  EXPECT_DOUBLE_EQ(full_scale.dt(), 0.02);
  EXPECT_EQ(evasion_steps(full_scale.dt()), 50);
  Scenario desk;
  EXPECT_DOUBLE_EQ(desk.dt(), 0.02);
}

TEST(TrackingSim, PolylineKinematics) {
  Rng rng(1);
  std::vector<TargetState> s(1);
  s[0].kind = TargetKind::Polyline;
  s[0].heading = 0.0;
  s[0].speed = 10.0;
  s[0].waypoint_interval = 100;
  s[0].age = 5;
  step_targets(s, {}, 0.02, 20.0, 15.0, rng);
  EXPECT_NEAR(s[0].position.x(), 0.2, 1e-15);
  EXPECT_NEAR(s[0].position.y(), 0.0, 1e-15);
  EXPECT_EQ(s[0].age, 6);
}

TEST(TrackingSim, AdversarialOutsideTriggerActsRandomly) {
  std::vector<TargetState> adv(1), rnd(1);
  adv[0].kind = TargetKind::Adversarial;
  rnd[0].kind = TargetKind::Random;
  const std::vector<Eigen::Vector2d> agents = {{25.0, 0.0}};
  Rng a(3), b(3);
  step_targets(adv, agents, 0.02, 20.0, 15.0, a);
  step_targets(rnd, agents, 0.02, 20.0, 15.0, b);
  EXPECT_EQ(adv[0].position, rnd[0].position);
  EXPECT_EQ(adv[0].evasion_left, 0);
}

TEST(TrackingSim, AdversarialEvadesInsideTrigger) {
  std::vector<TargetState> adv(1);
  adv[0].kind = TargetKind::Adversarial;
  const std::vector<Eigen::Vector2d> agents = {{-5.0, 0.0}};
  Rng rng(3);
  step_targets(adv, agents, 0.02, 20.0, 15.0, rng);
  EXPECT_EQ(adv[0].evasion_left, 49);
  EXPECT_NEAR(adv[0].position.x(), 0.3, 1e-12);  // straight away at speed 15
  EXPECT_NEAR(adv[0].position.y(), 0.0, 1e-12);
}

TEST(TrackingSim, ActionsAndPartition) {
  Scenario s;
  s.num_agents = 20;
  const Partition p = tracking_partition(s);
  EXPECT_EQ(p.ground_size(), 480);
  EXPECT_EQ(p.rank(), 20);
  Scenario ekf;
  ekf.mode = TrackingMode::EkfAOptimal;
  EXPECT_EQ(ekf.speed_set(), (std::vector<double>{2.0, 7.0, 12.0}));
  EXPECT_EQ(s.speed_set(), (std::vector<double>{5.0, 10.0, 15.0}));

  Scenario one;
  one.num_agents = 2;
  const std::vector<Eigen::Vector2d> agents = {{0, 0}, {10, 0}};
  const auto actions = action_positions(one, agents);
  ASSERT_EQ(actions.size(), 48u);
  // Agent 1, speed 10, direction 2 (angle pi/2): id 24 + 8 + 1.
  EXPECT_NEAR((actions[33] - Eigen::Vector2d(10.0, 10.0 * one.dt())).norm(), 0.0, 1e-12);
  // Direction 8 points along +x.
  EXPECT_NEAR((actions[7] - Eigen::Vector2d(5.0 * one.dt(), 0.0)).norm(), 0.0, 1e-12);
}

TEST(TrackingSim, EpisodesAreDeterministicAndNonnegative) {
  Scenario s;
  s.T = 30;
  s.seed = 4;
  PolicyConfig pc;
  pc.oscg_Q = 2;
  pc.oscg_L = 2;
  for (Policy policy : {Policy::RANDOM, Policy::OSGA, Policy::OSCG}) {
    const EpisodeTrace a = run_episode(s, policy, pc);
    const EpisodeTrace b = run_episode(s, policy, pc);
    ASSERT_EQ(a.rows.size(), 30u);
    for (std::size_t t = 0; t < a.rows.size(); ++t) {
      EXPECT_EQ(a.rows[t].reward, b.rows[t].reward);
      EXPECT_EQ(a.rows[t].queries, b.rows[t].queries);
      EXPECT_GE(a.rows[t].reward, 0.0);
    }
  }
  EXPECT_EQ(parse_policy("osga"), Policy::OSGA);
  EXPECT_EQ(policy_name(Policy::RANDOM), "RANDOM");
  EXPECT_THROW(parse_policy("greedy"), InputError);
}

TEST(TrackingSim, EnvironmentDoesNotDependOnPolicyRandomness) {
  // Targets move with the environment stream only, so the RANDOM reward
  // sequence is unchanged by the policy settings of other policies.
  Scenario s;
  s.T = 10;
  s.seed = 9;
  PolicyConfig a, b;
  b.osga_L = 3;
  const EpisodeTrace x = run_episode(s, Policy::RANDOM, a);
  const EpisodeTrace y = run_episode(s, Policy::RANDOM, b);
  for (std::size_t t = 0; t < x.rows.size(); ++t) EXPECT_EQ(x.rows[t].reward, y.rows[t].reward);
}

TEST(TrackingSim, ScenarioValidation) {
  Scenario s;
  s.num_agents = 0;
  EXPECT_THROW(s.validate(), InputError);
  Scenario h;
  h.horizon = 0.0;
  EXPECT_THROW(run_episode(h, Policy::RANDOM, {}), InputError);
}

TEST(TrackingSim, BrownianStepHasTheModelCovariance) {
  std::vector<TargetState> s(2000);
  Rng rng(12);
  step_targets_brownian(s, kBrownianScale, rng);
  double sx = 0.0, sy = 0.0, sxy = 0.0;
  for (const auto& t : s) {
    sx += t.position.x() * t.position.x();
    sy += t.position.y() * t.position.y();
    sxy += t.position.x() * t.position.y();
    EXPECT_EQ(t.age, 1);
  }
  const double m = static_cast<double>(s.size());
  // Var of a sample variance estimate is 2 sigma^4 / m: 4 SE is about 5%.
  EXPECT_NEAR(sx / m, 4e-4, 4e-4 * 4 * std::sqrt(2.0 / m));
  EXPECT_NEAR(sy / m, 4e-4, 4e-4 * 4 * std::sqrt(2.0 / m));
  EXPECT_NEAR(sxy / m, 0.0, 4e-4 * 4 * std::sqrt(1.0 / m));
}

TEST(TrackingSim, OsgaBeatsRandomOnFacilityLocation) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Scenario s;
    s.seed = seed;
    const double osga = run_episode(s, Policy::OSGA, {}).final_running_average();
    const double rnd = run_episode(s, Policy::RANDOM, {}).final_running_average();
    EXPECT_GT(osga, rnd) << "seed " << seed;
  }
}

TEST(TrackingSim, DeskPolicyConfig) {
  Scenario fl;
  const PolicyConfig a = desk_policy_config(fl);
  EXPECT_EQ(a.oscg_Q, 5);
  EXPECT_EQ(a.oscg_L, 5);
  EXPECT_EQ(a.osga_eta, 1.0);
  Scenario ekf;
  ekf.mode = TrackingMode::EkfAOptimal;
  EXPECT_EQ(desk_policy_config(ekf).oscg_eta, 1e3);
}
