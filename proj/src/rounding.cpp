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

#include "partisel/rounding.hpp"

#include <algorithm>
#include <vector>

#include "partisel/errors.hpp"
#include "partisel/multinoulli.hpp"
#include "partisel/simplex.hpp"

namespace partisel {

Subset round_without_replacement(const Eigen::Ref<const Eigen::VectorXd>& point,
                                 const Partition& partition, Rng& rng) {
  check_layout(point, partition);
  std::vector<Index> chosen;
  chosen.reserve(partition.rank());
  std::vector<double> mass;
  std::vector<char> taken;
  for (int k = 0; k < partition.num_communities(); ++k) {
    const auto off = partition.offset(k);
    const auto len = partition.size(k);
    const int budget = partition.budget(k);

    mass.assign(len, 0.0);
    double total = 0.0;
    for (Eigen::Index m = 0; m < len; ++m) {
      mass[m] = std::max(0.0, point[off + m]);
      total += mass[m];
    }
    if (total > 0.0) {
      for (double& p : mass) p /= total;
    } else {
      std::fill(mass.begin(), mass.end(), 1.0 / static_cast<double>(len));
    }
    int support = 0;
    for (double p : mass) support += p > kSupportThreshold ? 1 : 0;
    const int b_min = std::min(support, budget);

    taken.assign(len, 0);
    double used = 0.0;
    for (int b = 0; b < b_min; ++b) {
      // Residual probability p^m / (1 - P) over unchosen m.
      const double remaining = 1.0 - used;
      const double u = uniform01(rng) * remaining;
      double acc = 0.0;
      Eigen::Index pick = -1;
      Eigen::Index last = -1;
      for (Eigen::Index m = 0; m < len; ++m) {
        if (taken[m] || mass[m] <= kSupportThreshold) continue;
        last = m;
        acc += mass[m];
        if (u < acc) {
          pick = m;
          break;
        }
      }
      if (pick < 0) pick = last;  // rounding slack in the cumulative sum
      taken[pick] = 1;
      used += mass[pick];
      chosen.push_back(partition.element_at(off + pick));
    }

    if (b_min < budget) {
      std::vector<Eigen::Index> rest;
      for (Eigen::Index m = 0; m < len; ++m) {
        if (!taken[m]) rest.push_back(m);
      }
      for (int b = b_min; b < budget; ++b) {
        const auto j = std::uniform_int_distribution<std::size_t>(
            0, rest.size() - 1)(rng);
        chosen.push_back(partition.element_at(off + rest[j]));
        rest[j] = rest.back();
        rest.pop_back();
      }
    }
  }
  return Subset(std::move(chosen));
}

Subset round_naive(const Eigen::Ref<const Eigen::VectorXd>& point,
                   const Partition& partition, Rng& rng) {
  check_layout(point, partition);
  return Subset(sample_draws(point, partition, rng).union_elements());
}

RoundingResult best_of_rounds(const Eigen::Ref<const Eigen::VectorXd>& point,
                              const Partition& partition,
                              const SetFunctionHandle& handle,
                              const RoundingConfig& config, Rng& rng) {
  if (config.retries < 1) throw InputError("best_of_rounds: retries must be >= 1");
  const std::uint64_t master = rng();
  std::vector<Subset> subsets(config.retries);
  std::vector<double> values(config.retries);
  parallel_for(config.retries, [&](std::int64_t i) {
    Rng local = substream(master, static_cast<std::uint64_t>(i));
    subsets[i] = config.mode == RoundingMode::WithoutReplacement
                     ? round_without_replacement(point, partition, local)
                     : round_naive(point, partition, local);
    values[i] = handle.evaluate(subsets[i]);
  });
  RoundingResult out;
  std::int64_t best = 0;
  for (std::int64_t i = 1; i < config.retries; ++i) {
    if (values[i] > values[best]) best = i;
  }
  out.subset = std::move(subsets[best]);
  out.value = values[best];
  out.queries = config.retries;
  return out;
}

}  // namespace partisel
