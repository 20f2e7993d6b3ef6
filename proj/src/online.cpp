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

#include "partisel/online.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <string>

#include "partisel/errors.hpp"
#include "partisel/multinoulli.hpp"
#include "partisel/offline.hpp"
#include "partisel/rounding.hpp"

namespace partisel {

namespace {

void require_ground(const SetFunctionHandle& f, const Partition& partition) {
  if (f.ground_size() != partition.ground_size()) {
    throw InputError("online round: objective has " +
                     std::to_string(f.ground_size()) + " elements, partition has " +
                     std::to_string(partition.ground_size()));
  }
}

int default_count(const Partition& partition, int T) {
  return static_cast<int>(std::ceil(
      std::sqrt(static_cast<double>(partition.rank()) * static_cast<double>(T))));
}

}  // namespace

LinearOracle::LinearOracle(const Partition& partition, double eta)
    : v_(uniform_point(partition)), eta_(eta) {}

LinearOracle::LinearOracle(Point start, double eta)
    : v_(std::move(start)), eta_(eta) {}

void LinearOracle::step(const Eigen::Ref<const Eigen::VectorXd>& feedback,
                        const Partition& partition) {
  check_layout(feedback, partition);
  v_ = project(v_ + eta_ * feedback, partition);
  ++steps_;
}

LinearOracle oracle_step(LinearOracle oracle,
                         const Eigen::Ref<const Eigen::VectorXd>& feedback,
                         const Partition& partition) {
  oracle.step(feedback, partition);
  return oracle;
}

double AdaptiveStep::next(double norm) {
  max_norm = std::max(max_norm, norm);
  if (max_norm <= 0.0) return 0.0;
  return scale / (max_norm * std::sqrt(static_cast<double>(horizon)));
}

int OscgConfig::oracles(const Partition& partition) const {
  return Q.value_or(default_count(partition, T));
}

int OscgConfig::batch(const Partition& partition) const {
  return L.value_or(default_count(partition, T));
}

OscgSession::OscgSession(Partition partition, OscgConfig config)
    : partition_(std::move(partition)), config_(config), rng_(config.seed) {
  if (config_.T < 1) throw InputError("oscg: T must be >= 1");
  const int q = config_.oracles(partition_);
  if (q < 1 || config_.batch(partition_) < 1) {
    throw InputError("oscg: Q and L must be >= 1");
  }
  const double scale = std::sqrt(2.0 * partition_.rank());
  for (int i = 0; i < q; ++i) {
    oracles_.emplace_back(partition_, config_.eta.value_or(0.0));
    steps_.push_back({scale, config_.T});
  }
}

const Subset& OscgSession::commit() {
  if (committed_) throw ProtocolError("oscg: commit called twice in one round");
  const int q = static_cast<int>(oracles_.size());
  path_.assign(1, Point::Zero(partition_.ground_size()));
  for (int i = 0; i < q; ++i) {
    path_.push_back(path_.back() + oracles_[i].play() / static_cast<double>(q));
  }
  committed_ = round_without_replacement(path_.back(), partition_, rng_);
  return *committed_;
}

const OnlineRound& OscgSession::observe(const SetFunctionHandle& f_t) {
  if (!committed_) throw ProtocolError("oscg: observe called before commit");
  require_ground(f_t, partition_);
  OnlineRound round;
  round.t = static_cast<int>(history_.size()) + 1;
  round.subset = std::move(*committed_);
  committed_.reset();
  round.reward = f_t.evaluate(round.subset);
  ++queries_;

  SpiderState state = spider_init(f_t, partition_);
  const int q = static_cast<int>(oracles_.size());
  const int L = config_.batch(partition_);
  for (int i = 0; i < q; ++i) {
    if (i > 0) state = spider_update(state, f_t, partition_, path_[i], L, rng_);
    const double norm = state.g.norm();
    round.feedback_norms.push_back(norm);
    oracles_[i].set_eta(config_.eta ? *config_.eta : steps_[i].next(norm));
    oracles_[i].step(state.g, partition_);
  }
  queries_ += state.queries;

  cumulative_ += round.reward;
  round.cumulative_reward = cumulative_;
  round.queries = queries_;
  history_.push_back(std::move(round));
  return history_.back();
}

OsgaSession::OsgaSession(Partition partition, OsgaConfig config)
    : partition_(std::move(partition)), config_(std::move(config)),
      rng_(config_.seed) {
  if (config_.T < 1 || config_.L < 1) throw InputError("osga: T and L must be >= 1");
  if (config_.auxiliary && !(*config_.auxiliary > 0.0)) {
    throw InputError("osga: auxiliary c must be positive");
  }
  x_ = config_.initial ? project(*config_.initial, partition_)
                       : uniform_point(partition_);
  if (config_.adaptive_eta) {
    adaptive_ = AdaptiveStep{std::sqrt(2.0 * partition_.rank()), config_.T};
  }
}

const Subset& OsgaSession::commit() {
  if (committed_) throw ProtocolError("osga: commit called twice in one round");
  committed_ = round_without_replacement(x_, partition_, rng_);
  return *committed_;
}

const OnlineRound& OsgaSession::observe(const SetFunctionHandle& f_t) {
  if (!committed_) throw ProtocolError("osga: observe called before commit");
  require_ground(f_t, partition_);
  OnlineRound round;
  round.t = static_cast<int>(history_.size()) + 1;
  round.subset = std::move(*committed_);
  committed_.reset();
  round.reward = f_t.evaluate(round.subset);
  ++queries_;

  GradientSample g =
      config_.auxiliary
          ? auxiliary_gradient_sample(f_t, partition_, x_, *config_.auxiliary,
                                      rng_, config_.L)
          : estimate_gradient(f_t, partition_, x_, config_.L, rng_);
  queries_ += g.queries;
  const double norm = g.gradient.norm();
  round.feedback_norms.push_back(norm);
  const double eta =
      adaptive_ ? adaptive_->next(norm)
                : config_.eta.value_or(1.0 / std::sqrt(static_cast<double>(config_.T)));
  x_ = project(x_ + eta * g.gradient, partition_);

  cumulative_ += round.reward;
  round.cumulative_reward = cumulative_;
  round.queries = queries_;
  history_.push_back(std::move(round));
  return history_.back();
}

double rho_regret(std::span<const OnlineRound> history, double rho,
                  const Subset& best_fixed, const Partition& partition,
                  std::span<const SetFunctionHandle* const> handles) {
  if (history.size() != handles.size()) {
    throw InputError("rho_regret: " + std::to_string(history.size()) +
                     " rounds but " + std::to_string(handles.size()) + " objectives");
  }
  if (!feasibility_check(partition, best_fixed)) {
    throw InputError("rho_regret: comparator " + best_fixed.to_string() +
                     " is infeasible");
  }
  double comparator = 0.0;
  double earned = 0.0;
  for (std::size_t t = 0; t < history.size(); ++t) {
    comparator += handles[t]->evaluate(best_fixed);
    earned += history[t].reward;
  }
  return rho * comparator - earned;
}

Hindsight best_fixed_in_hindsight(std::span<const SetFunctionHandle* const> handles,
                                  const Partition& partition,
                                  std::int64_t exhaustive_cap) {
  if (handles.empty()) throw InputError("hindsight: no objectives");
  auto total = [&](std::span<const Index> s) {
    double sum = 0.0;
    for (const auto* h : handles) sum += h->evaluate(s);
    return sum;
  };

  Hindsight out;
  if (partition.feasible_family_size(exhaustive_cap) <= exhaustive_cap) {
    std::vector<Index> current;
    bool first = true;
    std::function<void(int)> by_community;
    std::function<void(int, Eigen::Index, int)> choose;
    by_community = [&](int k) {
      if (k == partition.num_communities()) {
        const double value = total(current);
        if (first || value > out.total) {
          first = false;
          out.total = value;
          out.subset = Subset(current);
        }
        return;
      }
      choose(k, 0, partition.budget(k));
    };
    choose = [&](int k, Eigen::Index from, int left) {
      by_community(k + 1);
      if (left == 0) return;
      const auto community = partition.community(k);
      for (auto m = from; m < static_cast<Eigen::Index>(community.size()); ++m) {
        current.push_back(community[m]);
        choose(k, m + 1, left - 1);
        current.pop_back();
      }
    };
    by_community(0);
    return out;
  }

  std::vector<std::shared_ptr<const SetFunction>> fns;
  bool monotone = true;
  for (const auto* h : handles) {
    fns.push_back(h->function());
    monotone = monotone && h->monotone();
  }
  auto sum = make_handle(partition.ground_size(), monotone,
                         [fns](std::span<const Index> s) {
                           double acc = 0.0;
                           for (const auto& f : fns) acc += f->value(s);
                           return acc;
                         });
  SolveResult greedy = standard_greedy(sum, partition);
  out.subset = greedy.subset;
  out.total = greedy.value;
  out.approximate = true;
  return out;
}

void write_history_csv(std::ostream& os, std::span<const OnlineRound> history) {
  os << "t,reward,running_average,queries\n";
  os << std::setprecision(10);
  for (const auto& round : history) {
    os << round.t << ',' << round.reward << ',' << running_average(round) << ','
       << round.queries << '\n';
  }
}

}  // namespace partisel
