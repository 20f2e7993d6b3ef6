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

#ifndef PARTISEL_OFFLINE_HPP_
#define PARTISEL_OFFLINE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "partisel/partition.hpp"
#include "partisel/rng.hpp"
#include "partisel/set_function.hpp"
#include "partisel/subset.hpp"

namespace partisel {

struct TraceRecord {
  int t = 0;
  Subset subset;
  std::optional<double> value;  // f(subset) when the solver evaluated it
  std::int64_t queries = 0;     // cumulative evaluations after this step
};

struct SolveTrace {
  std::vector<TraceRecord> records;
  // Evaluations the solver performed, tallied from its own steps; equals
  // the growth of the handle's counter over the run.
  std::int64_t queries = 0;
};

struct SolveResult {
  Subset subset;
  double value = 0.0;
  SolveTrace trace;
};

struct ScgConfig {
  int T = 167;
  std::optional<int> L;                     // default ceil(T / 2)
  std::optional<std::int64_t> retries;      // default T^2
  std::uint64_t seed = 0;

  int batch() const { return L.value_or((T + 1) / 2); }
  std::int64_t rounding_retries() const {
    return retries.value_or(static_cast<std::int64_t>(T) * T);
  }
};

struct SgaConfig {
  int T = 167;
  std::optional<double> eta;       // default 1 / sqrt(T)
  int L = 20;
  std::optional<double> auxiliary;  // c > 0 switches to the auxiliary gradient
  std::uint64_t seed = 0;
  std::optional<Eigen::VectorXd> initial;  // default: uniform blocks

  double step() const;
};

// Stochastic continuous greedy over the Multinoulli Extension with the
// path-integrated gradient, finished by best-of-retries rounding.
SolveResult multinoulli_scg(const SetFunctionHandle& handle,
                            const Partition& partition, const ScgConfig& config);

// Projected stochastic gradient ascent (auxiliary variant when c is set);
// rounds every iterate and returns the best rounded subset.
SolveResult multinoulli_sga(const SetFunctionHandle& handle,
                            const Partition& partition, const SgaConfig& config);

// Largest marginal gain among elements whose community has budget left,
// ties to the lowest id; stops early once no gain is positive.
SolveResult standard_greedy(const SetFunctionHandle& handle,
                            const Partition& partition);

// r rounds of: pool the top-b_k unchosen elements by marginal gain in each
// community with residual budget b_k > 0, add one of them uniformly.
SolveResult residual_random_greedy(const SetFunctionHandle& handle,
                                   const Partition& partition, Rng& rng);

}  // namespace partisel

#endif  // PARTISEL_OFFLINE_HPP_
