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

#include "partisel/subset.hpp"

#include <algorithm>
#include <sstream>

#include "partisel/errors.hpp"

namespace partisel {

Subset::Subset(std::vector<Index> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (!elements_.empty() && elements_.front() < 0) {
    throw InputError("subset: negative element id " + std::to_string(elements_.front()));
  }
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw InputError("subset: duplicate element id");
  }
}

bool Subset::contains(Index v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

Subset Subset::with(Index v) const {
  Subset out = *this;
  auto it = std::lower_bound(out.elements_.begin(), out.elements_.end(), v);
  if (it == out.elements_.end() || *it != v) {
    if (v < 0) throw InputError("subset: negative element id " + std::to_string(v));
    out.elements_.insert(it, v);
  }
  return out;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) os << ' ';
    os << elements_[i];
  }
  os << '}';
  return os.str();
}

std::vector<int> community_counts(const Partition& partition, const Subset& s) {
  std::vector<int> counts(partition.num_communities(), 0);
  for (Index v : s) {
    if (!partition.contains(v)) {
      throw InputError("subset: element " + std::to_string(v) +
                       " outside the ground set");
    }
    ++counts[partition.community_of(v)];
  }
  return counts;
}

bool feasibility_check(const Partition& partition, const Subset& s) {
  for (Index v : s) {
    if (!partition.contains(v)) return false;
  }
  const auto counts = community_counts(partition, s);
  for (int k = 0; k < partition.num_communities(); ++k) {
    if (counts[k] > partition.budget(k)) return false;
  }
  return true;
}

}  // namespace partisel
