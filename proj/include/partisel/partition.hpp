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

#ifndef PARTISEL_PARTITION_HPP_
#define PARTISEL_PARTITION_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "partisel/rng.hpp"

namespace partisel {

// Global 0-based ground-set element id.
using Index = std::int32_t;

// A split of {0, ..., n-1} into K disjoint communities with per-community
// budgets. Points and gradients over the product of simplices use a flat
// layout: community k occupies coordinates [offset(k), offset(k) + size(k)),
// and coordinate offset(k) + m corresponds to element community(k)[m].
class Partition {
 public:
  // Throws InputError unless the communities are disjoint, cover
  // {0, ..., n-1} exactly, and 1 <= budgets[k] <= |communities[k]|.
  Partition(std::vector<std::vector<Index>> communities,
            std::vector<int> budgets);

  // K communities of `size` consecutive ids each, all with the same budget.
  static Partition uniform(int num_communities, int size, int budget);

  int num_communities() const { return static_cast<int>(communities_.size()); }
  Index ground_size() const { return static_cast<Index>(element_community_.size()); }
  int rank() const { return rank_; }
  int max_budget() const { return max_budget_; }

  std::span<const Index> community(int k) const { return communities_[k]; }
  int budget(int k) const { return budgets_[k]; }
  const std::vector<int>& budgets() const { return budgets_; }
  Eigen::Index offset(int k) const { return offsets_[k]; }
  Eigen::Index size(int k) const {
    return static_cast<Eigen::Index>(communities_[k].size());
  }

  int community_of(Index v) const { return element_community_[v]; }
  // Flat coordinate of element v.
  Eigen::Index coordinate_of(Index v) const { return element_coordinate_[v]; }
  // Element stored at flat coordinate i.
  Index element_at(Eigen::Index i) const { return coordinate_element_[i]; }

  bool contains(Index v) const { return v >= 0 && v < ground_size(); }

  // Product over communities of sum_{j <= B_k} C(n_k, j); saturates at
  // `cap + 1` so callers can compare against a limit without overflow.
  std::int64_t feasible_family_size(std::int64_t cap) const;

 private:
  std::vector<std::vector<Index>> communities_;
  std::vector<int> budgets_;
  std::vector<Eigen::Index> offsets_;
  std::vector<int> element_community_;
  std::vector<Eigen::Index> element_coordinate_;
  std::vector<Index> coordinate_element_;
  int rank_ = 0;
  int max_budget_ = 0;
};

// Runs of `group_size` consecutive ids; the last group may be shorter.
// Each budget is min(budget, group size).
Partition consecutive_groups(Index ground_size, int group_size, int budget);

// Shuffles {0, ..., n-1} and deals it into `groups` near-equal groups.
Partition random_groups(Index ground_size, int groups, int budget, Rng& rng);

}  // namespace partisel

#endif  // PARTISEL_PARTITION_HPP_
