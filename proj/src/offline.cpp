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

#include "partisel/offline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "partisel/errors.hpp"
#include "partisel/multinoulli.hpp"
#include "partisel/rounding.hpp"
#include "partisel/simplex.hpp"

namespace partisel {

namespace {

void require_monotone(const SetFunctionHandle& handle, const char* who) {
  if (!handle.monotone()) {
    throw InputError(std::string(who) + ": objective is not declared monotone");
  }
}

void require_ground(const SetFunctionHandle& handle, const Partition& partition,
                    const char* who) {
  if (handle.ground_size() != partition.ground_size()) {
    throw InputError(std::string(who) + ": objective and partition disagree on n");
  }
}

}  // namespace

double SgaConfig::step() const {
  return eta.value_or(1.0 / std::sqrt(static_cast<double>(T)));
}

SolveResult multinoulli_scg(const SetFunctionHandle& handle,
                            const Partition& partition, const ScgConfig& config) {
  require_monotone(handle, "multinoulli_scg");
  require_ground(handle, partition, "multinoulli_scg");
  if (config.T < 1 || config.batch() < 1) {
    throw InputError("multinoulli_scg: T and L must be >= 1");
  }
  Rng rng(config.seed);
  SolveResult out;
  SpiderState state = spider_init(handle, partition);
  Point x = Point::Zero(partition.ground_size());
  for (int t = 1; t <= config.T; ++t) {
    LinearArgmax step = linear_argmax_subset(state.g, partition);
    x = convex_step(x, scaled_indicator(step.subset, partition), config.T,
                    partition);
    // The gradient at x(T + 1) is never used.
    if (t < config.T) {
      state = spider_update(state, handle, partition, x, config.batch(), rng);
    }
    out.trace.records.push_back({t, std::move(step.subset), std::nullopt,
                                 state.queries});
  }
  RoundingConfig rounding{RoundingMode::WithoutReplacement,
                          config.rounding_retries()};
  RoundingResult final_round = best_of_rounds(x, partition, handle, rounding, rng);
  out.subset = std::move(final_round.subset);
  out.value = final_round.value;
  out.trace.queries = state.queries + final_round.queries;
  return out;
}

SolveResult multinoulli_sga(const SetFunctionHandle& handle,
                            const Partition& partition, const SgaConfig& config) {
  require_monotone(handle, "multinoulli_sga");
  require_ground(handle, partition, "multinoulli_sga");
  if (config.T < 1 || config.L < 1) {
    throw InputError("multinoulli_sga: T and L must be >= 1");
  }
  const double eta = config.step();
  if (!(eta >= 0.0)) throw InputError("multinoulli_sga: eta must be >= 0");
  if (config.auxiliary && !(*config.auxiliary > 0.0)) {
    throw InputError("multinoulli_sga: auxiliary c must be positive");
  }
  Rng rng(config.seed);
  Point x = config.initial ? project(*config.initial, partition)
                           : uniform_point(partition);
  SolveResult out;
  std::int64_t queries = 0;
  int best_t = -1;
  for (int t = 1; t <= config.T; ++t) {
    Subset s = round_without_replacement(x, partition, rng);
    const double value = handle.evaluate(s);
    ++queries;
    GradientSample g =
        config.auxiliary
            ? auxiliary_gradient_sample(handle, partition, x, *config.auxiliary,
                                        rng, config.L)
            : estimate_gradient(handle, partition, x, config.L, rng);
    queries += g.queries;
    x = project(x + eta * g.gradient, partition);
    if (best_t < 0 || value > out.value) {
      best_t = t;
      out.value = value;
      out.subset = s;
    }
    out.trace.records.push_back({t, std::move(s), value, queries});
  }
  out.trace.queries = queries;
  return out;
}

SolveResult standard_greedy(const SetFunctionHandle& handle,
                            const Partition& partition) {
  require_monotone(handle, "standard_greedy");
  require_ground(handle, partition, "standard_greedy");
  const Index n = partition.ground_size();
  std::vector<int> residual = partition.budgets();
  std::vector<char> chosen(n, 0);
  std::vector<Index> s;
  SolveResult out;
  std::int64_t queries = 0;
  double f_s = handle.evaluate(s);
  ++queries;
  for (int round = 1; round <= partition.rank(); ++round) {
    Index best = -1;
    double best_value = 0.0;
    for (Index v = 0; v < n; ++v) {
      if (chosen[v] || residual[partition.community_of(v)] == 0) continue;
      s.push_back(v);
      const double value = handle.evaluate(s);
      s.pop_back();
      ++queries;
      if (best < 0 || value > best_value) {
        best = v;
        best_value = value;
      }
    }
    if (best < 0 || best_value - f_s <= 0.0) break;
    s.push_back(best);
    chosen[best] = 1;
    --residual[partition.community_of(best)];
    f_s = best_value;
    out.trace.records.push_back({round, Subset(s), f_s, queries});
  }
  out.subset = Subset(s);
  out.value = f_s;
  out.trace.queries = queries;
  return out;
}

SolveResult residual_random_greedy(const SetFunctionHandle& handle,
                                   const Partition& partition, Rng& rng) {
  require_monotone(handle, "residual_random_greedy");
  require_ground(handle, partition, "residual_random_greedy");
  std::vector<int> residual = partition.budgets();
  std::vector<char> chosen(partition.ground_size(), 0);
  std::vector<Index> s;
  SolveResult out;
  std::int64_t queries = 0;
  double f_s = handle.evaluate(s);
  ++queries;
  std::vector<std::pair<double, Index>> gains;
  std::vector<Index> pool;
  for (int round = 1; round <= partition.rank(); ++round) {
    pool.clear();
    for (int k = 0; k < partition.num_communities(); ++k) {
      if (residual[k] == 0) continue;
      gains.clear();
      for (Index v : partition.community(k)) {
        if (chosen[v]) continue;
        s.push_back(v);
        gains.push_back({handle.evaluate(s) - f_s, v});
        s.pop_back();
        ++queries;
      }
      std::sort(gains.begin(), gains.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
      });
      for (int j = 0; j < residual[k] && j < static_cast<int>(gains.size()); ++j) {
        pool.push_back(gains[j].second);
      }
    }
    const Index v = pool[std::uniform_int_distribution<std::size_t>(
        0, pool.size() - 1)(rng)];
    s.push_back(v);
    chosen[v] = 1;
    --residual[partition.community_of(v)];
    f_s = handle.evaluate(s);
    ++queries;
    out.trace.records.push_back({round, Subset(s), f_s, queries});
  }
  out.subset = Subset(s);
  out.value = f_s;
  out.trace.queries = queries;
  return out;
}

}  // namespace partisel
