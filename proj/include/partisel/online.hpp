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

#ifndef PARTISEL_ONLINE_HPP_
#define PARTISEL_ONLINE_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "partisel/partition.hpp"
#include "partisel/rng.hpp"
#include "partisel/set_function.hpp"
#include "partisel/simplex.hpp"
#include "partisel/subset.hpp"

namespace partisel {

// Online gradient ascent over the product of simplices: v <- P(v + eta g).
class LinearOracle {
 public:
  // Starts at the uniform point.
  LinearOracle(const Partition& partition, double eta);
  LinearOracle(Point start, double eta);

  const Point& play() const { return v_; }
  double eta() const { return eta_; }
  void set_eta(double eta) { eta_ = eta; }
  int steps() const { return steps_; }

  void step(const Eigen::Ref<const Eigen::VectorXd>& feedback,
            const Partition& partition);

 private:
  Point v_;
  double eta_;
  int steps_ = 0;
};

// Value-returning form of LinearOracle::step.
LinearOracle oracle_step(LinearOracle oracle,
                         const Eigen::Ref<const Eigen::VectorXd>& feedback,
                         const Partition& partition);

struct OnlineRound {
  int t = 0;
  Subset subset;
  double reward = 0.0;
  double cumulative_reward = 0.0;
  std::int64_t queries = 0;  // cumulative evaluations through this round
  std::vector<double> feedback_norms;
};

inline double running_average(const OnlineRound& round) {
  return round.cumulative_reward / static_cast<double>(round.t);
}

// Scale-free step: eta_t = sqrt(2 r) / (G_t sqrt(T)) with G_t the largest
// feedback norm seen so far.
struct AdaptiveStep {
  double scale;  // sqrt(2 r)
  int horizon;
  double max_norm = 0.0;

  // Updates G with `norm` and returns the step; 0 while G is still 0.
  double next(double norm);
};

struct OscgConfig {
  int T = 100;
  std::optional<int> Q;      // default ceil(sqrt(r T))
  std::optional<int> L;      // default ceil(sqrt(r T))
  std::optional<double> eta;  // default: AdaptiveStep per oracle
  std::uint64_t seed = 0;

  int oracles(const Partition& partition) const;
  int batch(const Partition& partition) const;
};

// Call commit() then observe(f_t) once per round. Committing uses only
// state from earlier rounds; observe() before commit() or a second
// commit() throws ProtocolError.
class OscgSession {
 public:
  OscgSession(Partition partition, OscgConfig config);

  const Subset& commit();
  const OnlineRound& observe(const SetFunctionHandle& f_t);

  const Partition& partition() const { return partition_; }
  const std::vector<OnlineRound>& history() const { return history_; }
  const std::vector<LinearOracle>& oracles() const { return oracles_; }

 private:
  Partition partition_;
  OscgConfig config_;
  Rng rng_;
  std::vector<LinearOracle> oracles_;
  std::vector<AdaptiveStep> steps_;
  std::vector<Point> path_;  // x_t(1), ..., x_t(Q + 1)
  std::optional<Subset> committed_;
  std::vector<OnlineRound> history_;
  std::int64_t queries_ = 0;
  double cumulative_ = 0.0;
};

struct OsgaConfig {
  int T = 100;
  std::optional<double> eta;         // fixed step; default 1 / sqrt(T)
  bool adaptive_eta = false;          // use AdaptiveStep instead of eta
  int L = 10;
  std::optional<double> auxiliary = 1.0;  // c; nullopt for the plain gradient
  std::uint64_t seed = 0;
  std::optional<Point> initial;      // default uniform
};

class OsgaSession {
 public:
  OsgaSession(Partition partition, OsgaConfig config);

  const Subset& commit();
  const OnlineRound& observe(const SetFunctionHandle& f_t);

  const Partition& partition() const { return partition_; }
  const Point& point() const { return x_; }
  const std::vector<OnlineRound>& history() const { return history_; }

 private:
  Partition partition_;
  OsgaConfig config_;
  Rng rng_;
  Point x_;
  std::optional<AdaptiveStep> adaptive_;
  std::optional<Subset> committed_;
  std::vector<OnlineRound> history_;
  std::int64_t queries_ = 0;
  double cumulative_ = 0.0;
};

// rho * sum_t f_t(best_fixed) - sum_t f_t(S_t). Throws InputError when the
// history and handle counts differ or best_fixed is infeasible.
double rho_regret(std::span<const OnlineRound> history, double rho,
                  const Subset& best_fixed, const Partition& partition,
                  std::span<const SetFunctionHandle* const> handles);

struct Hindsight {
  Subset subset;
  double total = 0.0;
  bool approximate = false;  // greedy on sum_t f_t rather than exhaustive
};

// argmax over feasible S of sum_t f_t(S): exhaustive when the feasible
// family has at most `exhaustive_cap` members, standard greedy otherwise.
Hindsight best_fixed_in_hindsight(std::span<const SetFunctionHandle* const> handles,
                                  const Partition& partition,
                                  std::int64_t exhaustive_cap = 100'000);

// Header "t,reward,running_average,queries".
void write_history_csv(std::ostream& os, std::span<const OnlineRound> history);

}  // namespace partisel

#endif  // PARTISEL_ONLINE_HPP_
