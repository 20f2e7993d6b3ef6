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

#include "partisel/objectives/coverage.hpp"

#include <bit>
#include <string>

#include "partisel/errors.hpp"

namespace partisel {

namespace {

constexpr std::size_t kStackWords = 8;

}  // namespace

CoverageFunction::CoverageFunction(std::vector<std::vector<int>> sets,
                                   std::vector<double> weights)
    : num_sets_(sets.size()),
      words_((weights.size() + 63) / 64),
      weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!(w >= 0.0)) throw InputError("coverage: weights must be nonnegative");
  }
  bits_.assign(num_sets_ * words_, 0);
  for (std::size_t s = 0; s < num_sets_; ++s) {
    for (int u : sets[s]) {
      if (u < 0 || static_cast<std::size_t>(u) >= weights_.size()) {
        throw InputError("coverage: universe item " + std::to_string(u) +
                         " out of range");
      }
      bits_[s * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
}

double CoverageFunction::value(std::span<const Index> elements) const {
  std::uint64_t stack[kStackWords];
  std::vector<std::uint64_t> heap;
  std::uint64_t* acc = stack;
  if (words_ > kStackWords) {
    heap.assign(words_, 0);
    acc = heap.data();
  } else {
    std::fill(stack, stack + words_, 0);
  }
  for (Index e : elements) {
    const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(e) * words_;
    for (std::size_t w = 0; w < words_; ++w) acc[w] |= row[w];
  }
  double total = 0.0;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = acc[w];
    while (word) {
      const int bit = std::countr_zero(word);
      total += weights_[w * 64 + bit];
      word &= word - 1;
    }
  }
  return total;
}

CoverageProblem coverage_build(int n, int k, double epsilon) {
  if (n < 2) throw InputError("coverage_build: n must be >= 2");
  if (k < 1 || k > n) throw InputError("coverage_build: k must lie in [1, n]");
  if (!(epsilon > 0.0)) throw InputError("coverage_build: epsilon must be positive");

  // Universe layout: x_i at i - 1, y_i at (n - 1) + i - 1, e_i after them.
  const int num_x = n - 1;
  const int num_y = n - k;
  const int x0 = 0;
  const int y0 = num_x;
  const int e0 = num_x + num_y;
  std::vector<double> weights(num_x + num_y + num_x, 1.0);
  for (int i = 0; i < num_x; ++i) weights[e0 + i] = epsilon;

  std::vector<std::vector<int>> sets(2 * n);
  for (int i = 1; i < n; ++i) {
    sets[i - 1] = {e0 + i - 1};      // A_i
    sets[n + i - 1] = {x0 + i - 1};  // B_i
  }
  for (int i = 0; i < num_x; ++i) sets[n - 1].push_back(x0 + i);      // A_n
  for (int i = 0; i < num_y; ++i) sets[2 * n - 1].push_back(y0 + i);  // B_n

  std::vector<std::vector<Index>> communities(n);
  for (int i = 0; i < n; ++i) communities[i] = {i, n + i};

  return CoverageProblem{
      CoverageInstance{n, k, epsilon},
      SetFunctionHandle(std::make_shared<CoverageFunction>(std::move(sets),
                                                           std::move(weights))),
      Partition(std::move(communities), std::vector<int>(n, 1))};
}

}  // namespace partisel
