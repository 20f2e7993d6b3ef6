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

#ifndef PARTISEL_WEAK_RATIOS_HPP_
#define PARTISEL_WEAK_RATIOS_HPP_

#include "partisel/rng.hpp"
#include "partisel/set_function.hpp"

namespace partisel {

// Empirical extremes of the weak (DR-)submodularity ratios over sampled
// chains A ⊆ B and elements v ∉ B. These only bound the true ratios:
// alpha and gamma from above, beta from below. Degenerate 0/0 ratios are
// skipped.
struct WeakRatioEstimate {
  double alpha = 1.0;  // min f(v|A) / f(v|B), clamped to <= 1
  double gamma = 1.0;  // min sum_{v∈B\A} f(v|A) / (f(B)-f(A)), clamped to <= 1
  double beta = 1.0;   // max sum_{v∈B\A} f(v|B-v) / (f(B)-f(A)), clamped to >= 1
  int chains = 0;      // chains that contributed at least one ratio
};

// Samples `samples` chains. B is a uniformly random subset of the ground set
// with |B| uniform in [1, min(n, 2r)], A a random subset of B and v a random
// element outside B when one exists.
WeakRatioEstimate estimate_weak_ratios(const SetFunctionHandle& handle,
                                       const Partition& partition, int samples,
                                       Rng& rng);

}  // namespace partisel

#endif  // PARTISEL_WEAK_RATIOS_HPP_
