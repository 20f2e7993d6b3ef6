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

#include "partisel/objectives/modular.hpp"

#include <algorithm>

namespace partisel {

SetFunctionHandle modular_build(std::vector<double> weights) {
  const bool monotone =
      std::all_of(weights.begin(), weights.end(), [](double w) { return w >= 0.0; });
  const auto n = static_cast<Index>(weights.size());
  return make_handle(n, monotone, [w = std::move(weights)](std::span<const Index> s) {
    double total = 0.0;
    for (Index v : s) total += w[v];
    return total;
  });
}

SetFunctionHandle cardinality_build(Index ground_size) {
  return make_handle(ground_size, true, [](std::span<const Index> s) {
    return static_cast<double>(s.size());
  });
}

SetFunctionHandle normalize_empty(const SetFunctionHandle& handle) {
  return SetFunctionHandle(
      std::make_shared<NormalizedSetFunction>(handle.function()));
}

}  // namespace partisel
