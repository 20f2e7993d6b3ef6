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

#ifndef PARTISEL_RNG_HPP_
#define PARTISEL_RNG_HPP_

#include <cstdint>
#include <functional>
#include <random>

namespace partisel {

using Rng = std::mt19937_64;

// Deterministic child seed for work item `index` under `master`. Batches
// draw one master value from the caller's stream and give every sample its
// own engine, so results do not depend on how samples are spread over
// workers.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index);

inline Rng substream(std::uint64_t master, std::uint64_t index) {
  return Rng(substream_seed(master, index));
}

inline double uniform01(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Worker count from PARTISEL_THREADS (default 1, clamped to >= 1).
int worker_count();

// Runs body(i) for i in [0, count), possibly on several threads. The body
// must only write to slot i of caller-owned storage.
void parallel_for(std::int64_t count,
                  const std::function<void(std::int64_t)>& body);

}  // namespace partisel

#endif  // PARTISEL_RNG_HPP_
