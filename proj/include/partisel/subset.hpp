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

#ifndef PARTISEL_SUBSET_HPP_
#define PARTISEL_SUBSET_HPP_

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "partisel/partition.hpp"

namespace partisel {

// Strictly increasing sequence of element ids.
class Subset {
 public:
  Subset() = default;
  // Sorts the ids; throws InputError on duplicates or negative ids.
  explicit Subset(std::vector<Index> elements);
  Subset(std::initializer_list<Index> elements)
      : Subset(std::vector<Index>(elements)) {}

  std::span<const Index> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(Index v) const;

  // Copy with v inserted (no-op if already present).
  Subset with(Index v) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  std::string to_string() const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::vector<Index> elements_;
};

// |s ∩ V_k| for every community; throws InputError on ids outside the
// ground set.
std::vector<int> community_counts(const Partition& partition, const Subset& s);

// True iff |s ∩ V_k| <= B_k for all k (and every id is in the ground set).
bool feasibility_check(const Partition& partition, const Subset& s);

}  // namespace partisel

#endif  // PARTISEL_SUBSET_HPP_
