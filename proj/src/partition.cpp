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

#include "partisel/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "partisel/errors.hpp"

namespace partisel {

Partition::Partition(std::vector<std::vector<Index>> communities,
                     std::vector<int> budgets)
    : communities_(std::move(communities)), budgets_(std::move(budgets)) {
  if (communities_.empty()) throw InputError("partition: no communities");
  if (communities_.size() != budgets_.size()) {
    throw InputError("partition: " + std::to_string(communities_.size()) +
                     " communities but " + std::to_string(budgets_.size()) +
                     " budgets");
  }
  std::size_t n = 0;
  for (const auto& c : communities_) n += c.size();
  element_community_.assign(n, -1);
  element_coordinate_.assign(n, -1);
  coordinate_element_.resize(n);

  Eigen::Index offset = 0;
  for (std::size_t k = 0; k < communities_.size(); ++k) {
    const auto& c = communities_[k];
    const int b = budgets_[k];
    if (c.empty()) throw InputError("partition: community " + std::to_string(k) + " is empty");
    if (b < 1 || b > static_cast<int>(c.size())) {
      throw InputError("partition: budget of community " + std::to_string(k) +
                       " must lie in [1, " + std::to_string(c.size()) + "]");
    }
    offsets_.push_back(offset);
    for (std::size_t m = 0; m < c.size(); ++m) {
      const Index v = c[m];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw InputError("partition: element " + std::to_string(v) +
                         " outside {0, ..., " + std::to_string(n - 1) + "}");
      }
      if (element_community_[v] != -1) {
        throw InputError("partition: element " + std::to_string(v) +
                         " appears twice");
      }
      element_community_[v] = static_cast<int>(k);
      element_coordinate_[v] = offset + static_cast<Eigen::Index>(m);
      coordinate_element_[offset + m] = v;
    }
    offset += static_cast<Eigen::Index>(c.size());
    rank_ += b;
    max_budget_ = std::max(max_budget_, b);
  }
}

Partition Partition::uniform(int num_communities, int size, int budget) {
  if (num_communities < 1 || size < 1) throw InputError("partition: empty uniform layout");
  std::vector<std::vector<Index>> communities(num_communities);
  for (int k = 0; k < num_communities; ++k) {
    for (int m = 0; m < size; ++m) communities[k].push_back(k * size + m);
  }
  return Partition(std::move(communities),
                   std::vector<int>(num_communities, budget));
}

std::int64_t Partition::feasible_family_size(std::int64_t cap) const {
  std::int64_t total = 1;
  for (int k = 0; k < num_communities(); ++k) {
    const std::int64_t nk = size(k);
    // sum_{j <= B_k} C(n_k, j), saturating.
    std::int64_t block = 0;
    std::int64_t binom = 1;
    for (int j = 0; j <= budgets_[k]; ++j) {
      if (j > 0) {
        binom = binom * (nk - j + 1) / j;
        if (binom > cap) binom = cap + 1;
      }
      block = std::min(block + binom, cap + 1);
    }
    if (block > 0 && total > cap / block) return cap + 1;
    total *= block;
    if (total > cap) return cap + 1;
  }
  return total;
}

Partition consecutive_groups(Index ground_size, int group_size, int budget) {
  if (ground_size < 1 || group_size < 1 || budget < 1) {
    throw InputError("consecutive_groups: sizes and budget must be positive");
  }
  std::vector<std::vector<Index>> communities;
  std::vector<int> budgets;
  for (Index start = 0; start < ground_size; start += group_size) {
    const Index end = std::min<Index>(ground_size, start + group_size);
    std::vector<Index> group(end - start);
    std::iota(group.begin(), group.end(), start);
    budgets.push_back(std::min<int>(budget, static_cast<int>(group.size())));
    communities.push_back(std::move(group));
  }
  return Partition(std::move(communities), std::move(budgets));
}

Partition random_groups(Index ground_size, int groups, int budget, Rng& rng) {
  if (groups < 1 || ground_size < groups || budget < 1) {
    throw InputError("random_groups: need 1 <= groups <= n and budget >= 1");
  }
  std::vector<Index> ids(ground_size);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<std::vector<Index>> communities(groups);
  for (Index i = 0; i < ground_size; ++i) communities[i % groups].push_back(ids[i]);
  std::vector<int> budgets;
  for (auto& c : communities) {
    std::sort(c.begin(), c.end());
    budgets.push_back(std::min<int>(budget, static_cast<int>(c.size())));
  }
  return Partition(std::move(communities), std::move(budgets));
}

}  // namespace partisel
