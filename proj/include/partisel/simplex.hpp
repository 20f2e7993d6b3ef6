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

#ifndef PARTISEL_SIMPLEX_HPP_
#define PARTISEL_SIMPLEX_HPP_

#include <Eigen/Core>

#include "partisel/partition.hpp"
#include "partisel/subset.hpp"

namespace partisel {

// A point of the product of simplices {p_k >= 0, sum p_k <= 1} in the flat
// layout of its Partition. Gradients share the layout with no constraints.
using Point = Eigen::VectorXd;
using Gradient = Eigen::VectorXd;

inline constexpr double kDomainTolerance = 1e-9;

// Throws InputError unless x.size() == n.
void check_layout(const Eigen::Ref<const Eigen::VectorXd>& x,
                  const Partition& partition);

// Nonnegative with block sums <= 1 + tol.
bool in_domain(const Eigen::Ref<const Eigen::VectorXd>& x,
               const Partition& partition, double tol = kDomainTolerance);

// 1/n_k on every coordinate.
Point uniform_point(const Partition& partition);

// Euclidean projection of one block onto {p >= 0, sum p <= 1}.
Eigen::VectorXd project_block(const Eigen::Ref<const Eigen::VectorXd>& y);

// Blockwise Euclidean projection onto the domain.
Point project(const Eigen::Ref<const Eigen::VectorXd>& y,
              const Partition& partition);

// Coordinate (k, m) is 1/B_k when v_k^m is in s. Throws InputError if s is
// infeasible.
Point scaled_indicator(const Subset& s, const Partition& partition);

struct LinearArgmax {
  Subset subset;
  double value = 0.0;
};

// argmax over feasible S of <w, scaled_indicator(S)>: per community the
// B_k largest strictly positive weights, ties to the lowest element id.
LinearArgmax linear_argmax_subset(const Eigen::Ref<const Eigen::VectorXd>& weights,
                                  const Partition& partition);

// x + direction / T. Throws std::logic_error if the result leaves the
// domain by more than kDomainTolerance.
Point convex_step(const Eigen::Ref<const Eigen::VectorXd>& x,
                  const Eigen::Ref<const Eigen::VectorXd>& direction, int T,
                  const Partition& partition);

}  // namespace partisel

#endif  // PARTISEL_SIMPLEX_HPP_
