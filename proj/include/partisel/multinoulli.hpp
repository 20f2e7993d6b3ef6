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

#ifndef PARTISEL_MULTINOULLI_HPP_
#define PARTISEL_MULTINOULLI_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "partisel/partition.hpp"
#include "partisel/rng.hpp"
#include "partisel/set_function.hpp"
#include "partisel/simplex.hpp"

namespace partisel {

inline constexpr Index kEmpty = -1;
inline constexpr std::int64_t kDefaultEnumerationCap = 1'000'000;

// slots[k][b] is the element drawn by slot b of community k, or kEmpty.
struct DrawMatrix {
  std::vector<std::vector<Index>> slots;

  // Distinct drawn elements, in first-seen order.
  std::vector<Index> union_elements() const;
};

// Every slot of community k independently picks v_k^m with probability
// p_k^m and kEmpty with the leftover mass.
DrawMatrix sample_draws(const Eigen::Ref<const Eigen::VectorXd>& point,
                        const Partition& partition, Rng& rng);

// Number of draw matrices, saturating at cap + 1.
std::int64_t outcome_count(const Partition& partition, std::int64_t cap);

// F(point) by full enumeration of draw matrices. Throws SizeError when the
// outcome count exceeds `cap`.
double exact_value(const SetFunctionHandle& handle, const Partition& partition,
                   const Eigen::Ref<const Eigen::VectorXd>& point,
                   std::int64_t cap = kDefaultEnumerationCap);

// dF/dp_k^m = B_k E[f(v_k^m | draws without slot (k, 1))], enumerated.
Gradient exact_gradient(const SetFunctionHandle& handle,
                        const Partition& partition,
                        const Eigen::Ref<const Eigen::VectorXd>& point,
                        std::int64_t cap = kDefaultEnumerationCap);

struct GradientSample {
  Gradient gradient;
  std::int64_t queries = 0;
};

// Mean of L single-draw estimates; each draw serves every coordinate.
GradientSample estimate_gradient(const SetFunctionHandle& handle,
                                 const Partition& partition,
                                 const Eigen::Ref<const Eigen::VectorXd>& point,
                                 int L, Rng& rng);

// One-draw estimate of the Hessian columns listed in `columns` (flat
// coordinates): values(i, j) estimates d2F / dx_i dx_{columns[j]}.
struct HessianColumns {
  std::vector<Eigen::Index> columns;
  Eigen::MatrixXd values;
  std::int64_t queries = 0;
};

HessianColumns estimate_hessian_columns(
    const SetFunctionHandle& handle, const Partition& partition,
    const Eigen::Ref<const Eigen::VectorXd>& point,
    std::span<const Eigen::Index> columns, Rng& rng);

// Path-integrated gradient estimate.
struct SpiderState {
  Gradient g;
  Point x_prev;
  int t = 1;
  std::int64_t queries = 0;          // evaluations spent so far
  std::int64_t hessian_entries = 0;  // Hessian coordinates estimated so far
};

// g = grad F(0) exactly, x_prev = 0, t = 1.
SpiderState spider_init(const SetFunctionHandle& handle,
                        const Partition& partition);

// g += mean_l H(x_l) (x_new - x_prev) with x_l = a_l x_new + (1 - a_l) x_prev,
// a_l ~ U[0, 1]. Only the columns in the support of x_new - x_prev are
// estimated.
SpiderState spider_update(const SpiderState& state,
                          const SetFunctionHandle& handle,
                          const Partition& partition,
                          const Eigen::Ref<const Eigen::VectorXd>& x_new, int L,
                          Rng& rng);

struct RatioParams {
  double alpha = 1.0;
  double gamma = 1.0;
  double beta = 1.0;

  double phi() const { return beta * (1.0 - gamma) + gamma * gamma; }
  // Throws InputError when a ratio is out of range.
  void validate() const;
};

// Inverse CDF of Z with density proportional to exp(c (z - 1)) on [0, 1].
double auxiliary_z(double c, double u);

// (1 - exp(-c)) / c, the integral of exp(c (z - 1)) over [0, 1].
double auxiliary_weight_mass(double c);

// Unbiased for the gradient of the auxiliary function with weight
// exp(c (z - 1)): each of the L samples draws its own z and evaluates a
// one-draw gradient estimate at z * point.
GradientSample auxiliary_gradient_sample(
    const SetFunctionHandle& handle, const Partition& partition,
    const Eigen::Ref<const Eigen::VectorXd>& point, double c, Rng& rng, int L);

}  // namespace partisel

#endif  // PARTISEL_MULTINOULLI_HPP_
