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

#include "partisel/weak_ratios.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "partisel/errors.hpp"

namespace partisel {

namespace {

constexpr double kTiny = 1e-12;

}  // namespace

WeakRatioEstimate estimate_weak_ratios(const SetFunctionHandle& handle,
                                       const Partition& partition, int samples,
                                       Rng& rng) {
  if (samples < 1) throw InputError("estimate_weak_ratios: samples must be >= 1");
  const Index n = partition.ground_size();
  const int max_size = std::min<int>(n, 2 * partition.rank());
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), 0);

  WeakRatioEstimate out;
  for (int s = 0; s < samples; ++s) {
    std::shuffle(order.begin(), order.end(), rng);
    const int b_size = std::uniform_int_distribution<int>(1, max_size)(rng);
    const int a_size = std::uniform_int_distribution<int>(0, b_size)(rng);
    // A = first a_size, B = first b_size, v = next element if any.
    std::vector<Index> a(order.begin(), order.begin() + a_size);
    std::vector<Index> b(order.begin(), order.begin() + b_size);
    bool used = false;

    const double fa = handle.evaluate(a);
    const double fb = handle.evaluate(b);
    const double gap = fb - fa;

    if (b_size < n) {
      const Index v = order[b_size];
      a.push_back(v);
      b.push_back(v);
      const double gain_a = handle.evaluate(a) - fa;
      const double gain_b = handle.evaluate(b) - fb;
      a.pop_back();
      b.pop_back();
      if (gain_b > kTiny) {
        out.alpha = std::min(out.alpha, gain_a / gain_b);
        used = true;
      }
    }

    if (gap > kTiny && b_size > a_size) {
      double lower = 0.0;
      double upper = 0.0;
      std::vector<Index> a_plus = a;
      std::vector<Index> b_minus;
      for (int i = a_size; i < b_size; ++i) {
        const Index v = order[i];
        a_plus.push_back(v);
        lower += handle.evaluate(a_plus) - fa;
        a_plus.pop_back();
        b_minus.clear();
        for (int j = 0; j < b_size; ++j) {
          if (j != i) b_minus.push_back(order[j]);
        }
        upper += fb - handle.evaluate(b_minus);
      }
      out.gamma = std::min(out.gamma, lower / gap);
      out.beta = std::max(out.beta, upper / gap);
      used = true;
    }
    if (used) ++out.chains;
  }
  return out;
}

}  // namespace partisel
