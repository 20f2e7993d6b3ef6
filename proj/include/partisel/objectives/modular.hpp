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

#ifndef PARTISEL_OBJECTIVES_MODULAR_HPP_
#define PARTISEL_OBJECTIVES_MODULAR_HPP_

#include <vector>

#include "partisel/set_function.hpp"

namespace partisel {

// f(S) = sum of weights over S. Monotone iff every weight is nonnegative.
SetFunctionHandle modular_build(std::vector<double> weights);

// f(S) = |S|.
SetFunctionHandle cardinality_build(Index ground_size);

// Handle on f(S) - f(∅).
SetFunctionHandle normalize_empty(const SetFunctionHandle& handle);

}  // namespace partisel

#endif  // PARTISEL_OBJECTIVES_MODULAR_HPP_
