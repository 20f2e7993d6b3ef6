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

#include "partisel/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <regex>

#include "partisel/errors.hpp"
#include "partisel/objectives/tracking_objectives.hpp"

namespace partisel {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::Vector2d unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

void random_step(TargetState& s, double dt, Rng& rng) {
  s.heading = std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
  s.speed = std::uniform_real_distribution<double>(5.0, 10.0)(rng);
  s.position += dt * s.speed * unit(s.heading);
}

double mean_distance(const Eigen::Vector2d& p, std::span<const Eigen::Vector2d> agents) {
  double total = 0.0;
  for (const auto& a : agents) total += (p - a).norm();
  return total / static_cast<double>(agents.size());
}

void evade_step(TargetState& s, std::span<const Eigen::Vector2d> agents, double dt,
                double speed) {
  double best_angle = 0.0;
  double best = -1.0;
  for (int h = 0; h < kEvasionHeadings; ++h) {
    const double angle = kTwoPi * h / kEvasionHeadings;
    const double d = mean_distance(s.position + dt * speed * unit(angle), agents);
    if (d > best) {
      best = d;
      best_angle = angle;
    }
  }
  s.heading = best_angle;
  s.speed = speed;
  s.position += dt * speed * unit(best_angle);
}

Eigen::Vector2d uniform_in_disc(double radius, Rng& rng) {
  const double r = radius * std::sqrt(uniform01(rng));
  const double angle = kTwoPi * uniform01(rng);
  return r * unit(angle);
}

}  // namespace

std::vector<double> Scenario::speed_set() const {
  if (!speeds.empty()) return speeds;
  if (mode == TrackingMode::EkfAOptimal) return {2.0, 7.0, 12.0};
  return {5.0, 10.0, 15.0};
}

void Scenario::validate() const {
  if (num_agents < 1) throw InputError("scenario: num_agents must be >= 1");
  if (num_targets < 1) throw InputError("scenario: num_targets must be >= 1");
  if (T < 1) throw InputError("scenario: T must be >= 1");
  if (!(horizon > 0.0)) throw InputError("scenario: horizon must be positive");
  if (mix[0] < 0 || mix[1] < 0 || mix[2] < 0 || mix[0] + mix[1] + mix[2] == 0) {
    throw InputError("scenario: mix ratios must be nonnegative with a positive sum");
  }
  if (!(spawn_radius > 0.0)) throw InputError("scenario: spawn_radius must be positive");
}

std::array<int, 3> mix_counts(const std::array<int, 3>& ratio, int total) {
  const int sum = ratio[0] + ratio[1] + ratio[2];
  if (sum <= 0) throw InputError("mix: ratios must have a positive sum");
  std::array<int, 3> counts{};
  std::array<double, 3> rest{};
  int assigned = 0;
  for (int i = 0; i < 3; ++i) {
    const double quota = static_cast<double>(ratio[i]) * total / sum;
    counts[i] = static_cast<int>(std::floor(quota));
    rest[i] = quota - counts[i];
    assigned += counts[i];
  }
  while (assigned < total) {
    int best = 0;
    for (int i = 1; i < 3; ++i) {
      if (rest[i] > rest[best]) best = i;
    }
    ++counts[best];
    rest[best] = -1.0;
    ++assigned;
  }
  return counts;
}

std::array<int, 3> parse_mix(const std::string& text) {
  static const std::regex pattern(R"(^\s*(?:R:A:P\s*=\s*)?(\d+):(\d+):(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw InputError("mix: expected \"R:A:P=r:a:p\" or \"r:a:p\", got \"" + text + "\"");
  }
  return {std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])};
}

int evasion_steps(double dt) {
  return static_cast<int>(std::ceil(1.0 / dt - 1e-9));
}

std::vector<Eigen::Vector2d> spawn_agents(const Scenario& scenario, Rng& rng) {
  std::vector<Eigen::Vector2d> agents;
  for (int i = 0; i < scenario.num_agents; ++i) {
    agents.push_back(uniform_in_disc(scenario.spawn_radius, rng));
  }
  return agents;
}

std::vector<TargetState> spawn_targets(const Scenario& scenario, Rng& rng) {
  const auto counts = mix_counts(scenario.mix, scenario.num_targets);
  static constexpr std::array<int, 3> kPolylineK = {1, 2, 4};
  std::vector<TargetState> targets;
  const TargetKind kinds[3] = {TargetKind::Random, TargetKind::Adversarial,
                               TargetKind::Polyline};
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < counts[c]; ++i) {
      TargetState s;
      s.position = uniform_in_disc(scenario.spawn_radius, rng);
      s.kind = kinds[c];
      if (s.kind == TargetKind::Polyline) {
        s.polyline_k = kPolylineK[std::uniform_int_distribution<int>(0, 2)(rng)];
        s.waypoint_interval = std::max(1, scenario.T / s.polyline_k);
      }
      targets.push_back(s);
    }
  }
  return targets;
}

void step_targets_brownian(std::vector<TargetState>& states, double scale, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (auto& s : states) {
    const double dx = normal(rng);
    const double dy = normal(rng);
    s.position += scale * Eigen::Vector2d(dx, dy);
    ++s.age;
  }
}

void step_targets(std::vector<TargetState>& states,
                  std::span<const Eigen::Vector2d> agents, double dt,
                  double trigger_radius, double evasion_speed, Rng& rng) {
  if (!(dt > 0.0)) throw InputError("step_targets: dt must be positive");
  for (auto& s : states) {
    switch (s.kind) {
      case TargetKind::Random:
        random_step(s, dt, rng);
        break;
      case TargetKind::Polyline:
        if (s.age % s.waypoint_interval == 0) {
          random_step(s, dt, rng);
        } else {
          s.position += dt * s.speed * unit(s.heading);
        }
        break;
      case TargetKind::Adversarial: {
        if (s.evasion_left == 0 && !agents.empty()) {
          for (const auto& a : agents) {
            if ((a - s.position).norm() <= trigger_radius) {
              s.evasion_left = evasion_steps(dt);
              break;
            }
          }
        }
        if (s.evasion_left > 0) {
          evade_step(s, agents, dt, evasion_speed);
          --s.evasion_left;
        } else {
          random_step(s, dt, rng);
        }
        break;
      }
    }
    ++s.age;
  }
}

Partition tracking_partition(const Scenario& scenario) {
  const int per_agent = scenario.actions_per_agent();
  return Partition::uniform(scenario.num_agents, per_agent, 1);
}

std::vector<Eigen::Vector2d> action_positions(const Scenario& scenario,
                                              std::span<const Eigen::Vector2d> agents) {
  const auto speeds = scenario.speed_set();
  const double dt = scenario.dt();
  std::vector<Eigen::Vector2d> out;
  out.reserve(agents.size() * speeds.size() * kDirections);
  for (const auto& agent : agents) {
    for (double speed : speeds) {
      for (int j = 1; j <= kDirections; ++j) {
        out.push_back(agent + dt * speed * unit(std::numbers::pi / 4.0 * j));
      }
    }
  }
  return out;
}

RoundObjective build_round_objective(const Scenario& scenario,
                                     std::span<const Eigen::Vector2d> agents,
                                     std::span<const TargetState> targets_now,
                                     std::span<const TargetState> targets_prev) {
  auto actions = action_positions(scenario, agents);
  std::vector<Eigen::Vector2d> targets;
  if (scenario.mode == TrackingMode::FacilityLocation) {
    for (const auto& s : targets_now) targets.push_back(s.position);
  } else {
    for (const auto& s : targets_prev) targets.push_back(s.position);
  }
  std::shared_ptr<const SetFunction> fn;
  if (scenario.mode == TrackingMode::FacilityLocation) {
    fn = std::make_shared<FacilityLocationFunction>(std::move(targets), actions);
  } else {
    fn = std::make_shared<EkfAOptimalFunction>(std::move(targets), actions);
  }
  return RoundObjective{SetFunctionHandle(std::move(fn)), tracking_partition(scenario),
                        std::move(actions)};
}

EpisodeTrace run_episode(const Scenario& scenario, Policy policy,
                         const PolicyConfig& config) {
  scenario.validate();
  Rng env(substream_seed(scenario.seed, 0));
  const std::uint64_t policy_seed = substream_seed(scenario.seed, 1);
  Rng random_policy(policy_seed);

  auto agents = spawn_agents(scenario, env);
  auto targets = spawn_targets(scenario, env);
  const Partition partition = tracking_partition(scenario);

  std::optional<OsgaSession> osga;
  std::optional<OscgSession> oscg;
  if (policy == Policy::OSGA) {
    OsgaConfig c;
    c.T = scenario.T;
    c.eta = config.osga_eta;
    c.adaptive_eta = config.osga_adaptive_eta;
    c.L = config.osga_L;
    c.auxiliary = config.osga_auxiliary;
    c.seed = policy_seed;
    osga.emplace(partition, c);
  } else if (policy == Policy::OSCG) {
    OscgConfig c;
    c.T = scenario.T;
    c.Q = config.oscg_Q;
    c.L = config.oscg_L;
    c.eta = config.oscg_eta;
    c.seed = policy_seed;
    oscg.emplace(partition, c);
  }

  EpisodeTrace trace;
  double cumulative = 0.0;
  std::int64_t queries = 0;
  for (int t = 1; t <= scenario.T; ++t) {
    Subset committed;
    if (osga) {
      committed = osga->commit();
    } else if (oscg) {
      committed = oscg->commit();
    } else {
      std::vector<Index> picks;
      for (int k = 0; k < partition.num_communities(); ++k) {
        const auto community = partition.community(k);
        picks.push_back(community[std::uniform_int_distribution<std::size_t>(
            0, community.size() - 1)(random_policy)]);
      }
      committed = Subset(std::move(picks));
    }

    const std::vector<TargetState> previous = targets;
    if (scenario.mode == TrackingMode::EkfAOptimal) {
      step_targets_brownian(targets, kBrownianScale, env);
    } else {
      step_targets(targets, agents, scenario.dt(), scenario.trigger_radius,
                   scenario.evasion_speed, env);
    }
    RoundObjective round = build_round_objective(scenario, agents, targets, previous);

    double reward;
    if (osga) {
      const OnlineRound& r = osga->observe(round.handle);
      reward = r.reward;
      queries = r.queries;
    } else if (oscg) {
      const OnlineRound& r = oscg->observe(round.handle);
      reward = r.reward;
      queries = r.queries;
    } else {
      reward = round.handle.evaluate(committed);
      ++queries;
    }

    for (Index a : committed) {
      agents[partition.community_of(a)] = round.actions[a];
    }
    cumulative += reward;
    trace.rows.push_back({t, reward, cumulative / t, queries});
  }
  return trace;
}

PolicyConfig desk_policy_config(const Scenario& scenario) {
  PolicyConfig pc;
  pc.oscg_Q = 5;
  pc.oscg_L = 5;
  const double eta = scenario.mode == TrackingMode::EkfAOptimal ? 1e3 : 1.0;
  pc.osga_eta = eta;
  pc.oscg_eta = eta;
  return pc;
}

Policy parse_policy(const std::string& name) {
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "OSGA") return Policy::OSGA;
  if (upper == "OSCG") return Policy::OSCG;
  if (upper == "RANDOM") return Policy::RANDOM;
  throw InputError("unknown policy \"" + name + "\" (expected OSGA, OSCG or RANDOM)");
}

std::string policy_name(Policy policy) {
  switch (policy) {
    case Policy::OSGA: return "OSGA";
    case Policy::OSCG: return "OSCG";
    case Policy::RANDOM: return "RANDOM";
  }
  return "?";
}

}  // namespace partisel
