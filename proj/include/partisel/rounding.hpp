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

#ifndef PARTISEL_ROUNDING_HPP_
#define PARTISEL_ROUNDING_HPP_

#include <cstdint>

#include <Eigen/Core>

#include "partisel/partition.hpp"
#include "partisel/rng.hpp"
#include "partisel/set_function.hpp"
#include "partisel/subset.hpp"

namespace partisel {

enum class RoundingMode { WithoutReplacement, Naive };

struct RoundingConfig {
  RoundingMode mode = RoundingMode::WithoutReplacement;
  std::int64_t retries = 1;
};

// Entries at or below this count as zero when sizing the support of a block.
inline constexpr double kSupportThreshold = 1e-12;

// Per community: normalize the block (uniform if it is all zero), draw
// min(|support|, B_k) distinct elements sequentially in proportion to their
// mass among the unchosen ones, then top up uniformly from the rest.
// Always |S ∩ V_k| = B_k.
Subset round_without_replacement(const Eigen::Ref<const Eigen::VectorXd>& point,
                                 const Partition& partition, Rng& rng);

// Union of one draw matrix.
Subset round_naive(const Eigen::Ref<const Eigen::VectorXd>& point,
                   const Partition& partition, Rng& rng);

struct RoundingResult {
  Subset subset;
  double value = 0.0;
  std::int64_t queries = 0;
};

// Best of `config.retries` roundings by f (first seen wins ties). Costs
// exactly `retries` evaluations.
RoundingResult best_of_rounds(const Eigen::Ref<const Eigen::VectorXd>& point,
                              const Partition& partition,
                              const SetFunctionHandle& handle,
                              const RoundingConfig& config, Rng& rng);

}  // namespace partisel

#endif  // PARTISEL_ROUNDING_HPP_
