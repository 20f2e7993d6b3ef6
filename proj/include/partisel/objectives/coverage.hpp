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

#ifndef PARTISEL_OBJECTIVES_COVERAGE_HPP_
#define PARTISEL_OBJECTIVES_COVERAGE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "partisel/partition.hpp"
#include "partisel/set_function.hpp"

namespace partisel {

// Weighted coverage: f(S) = total weight of the union of the chosen sets.
// Sets are stored as bitsets over the universe.
class CoverageFunction final : public SetFunction {
 public:
  CoverageFunction(std::vector<std::vector<int>> sets, std::vector<double> weights);

  Index ground_size() const override { return static_cast<Index>(num_sets_); }
  bool monotone() const override { return true; }
  double value(std::span<const Index> elements) const override;

  int universe_size() const { return static_cast<int>(weights_.size()); }

 private:
  std::size_t num_sets_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;  // num_sets_ x words_
  std::vector<double> weights_;
};

// The two-family instance with a bad stationary point. Universe:
// x_1..x_{n-1}, y_1..y_{n-k} of weight 1 and e_1..e_{n-1} of weight eps.
// A_i = {e_i}, A_n = {x_1..x_{n-1}}, B_i = {x_i}, B_n = {y_1..y_{n-k}}.
// Set A_i has id i - 1 and B_i has id n + i - 1; community i - 1 is
// {A_i, B_i} with budget 1.
struct CoverageInstance {
  int n;
  int k;
  double epsilon;

  Index a_id(int i) const { return i - 1; }
  Index b_id(int i) const { return n + i - 1; }
  double optimum() const { return 2.0 * n - 1.0 - k; }
  double local_value() const { return (n - 1) * (1.0 + epsilon); }
};

struct CoverageProblem {
  CoverageInstance instance;
  SetFunctionHandle handle;
  Partition partition;
};

// Throws InputError unless n >= 2, 1 <= k <= n and eps > 0.
CoverageProblem coverage_build(int n, int k, double epsilon);

}  // namespace partisel

#endif  // PARTISEL_OBJECTIVES_COVERAGE_HPP_
