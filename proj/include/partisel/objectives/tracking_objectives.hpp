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

#ifndef PARTISEL_OBJECTIVES_TRACKING_OBJECTIVES_HPP_
#define PARTISEL_OBJECTIVES_TRACKING_OBJECTIVES_HPP_

#include <span>
#include <vector>

#include <Eigen/Core>

#include "partisel/set_function.hpp"

namespace partisel {

inline constexpr double kDistanceFloor = 1e-6;

// sum_j max_{a in S} 1 / max(|o_a - o_j|, 1e-6); 0 for S = ∅.
double facility_location_eval(std::span<const Index> s,
                              std::span<const Eigen::Vector2d> targets,
                              std::span<const Eigen::Vector2d> actions);

class FacilityLocationFunction final : public SetFunction {
 public:
  FacilityLocationFunction(std::vector<Eigen::Vector2d> targets,
                           std::vector<Eigen::Vector2d> actions)
      : targets_(std::move(targets)), actions_(std::move(actions)) {}

  Index ground_size() const override { return static_cast<Index>(actions_.size()); }
  bool monotone() const override { return true; }
  double value(std::span<const Index> elements) const override {
    return facility_location_eval(elements, targets_, actions_);
  }

 private:
  std::vector<Eigen::Vector2d> targets_;
  std::vector<Eigen::Vector2d> actions_;
};

struct EkfParams {
  Eigen::Matrix2d P = 0.0004 * Eigen::Matrix2d::Identity();  // Cov of a 0.02 N(0, I) step
  double sigma2 = 0.01;
  Eigen::Matrix2d info = 2500.0 * Eigen::Matrix2d::Identity();  // P^{-1}
};

// sum_j Tr(I_j^{-1}) - Tr((sum_{a in S} (P + z z^T) / sigma^2 + I_j)^{-1})
// with z = o_a(t) - o_j(t - 1). Throws NumericError on a singular sum.
double ekf_aoptimal_eval(std::span<const Index> s,
                         std::span<const Eigen::Vector2d> previous_targets,
                         std::span<const Eigen::Vector2d> actions,
                         const EkfParams& params);

class EkfAOptimalFunction final : public SetFunction {
 public:
  EkfAOptimalFunction(std::vector<Eigen::Vector2d> previous_targets,
                      std::vector<Eigen::Vector2d> actions, EkfParams params = {})
      : targets_(std::move(previous_targets)), actions_(std::move(actions)),
        params_(params) {}

  Index ground_size() const override { return static_cast<Index>(actions_.size()); }
  bool monotone() const override { return true; }
  double value(std::span<const Index> elements) const override {
    return ekf_aoptimal_eval(elements, targets_, actions_, params_);
  }

 private:
  std::vector<Eigen::Vector2d> targets_;
  std::vector<Eigen::Vector2d> actions_;
  EkfParams params_;
};

}  // namespace partisel

#endif  // PARTISEL_OBJECTIVES_TRACKING_OBJECTIVES_HPP_
