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

#include "partisel/objectives/tracking_objectives.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>

#include "partisel/errors.hpp"

namespace partisel {

double facility_location_eval(std::span<const Index> s,
                              std::span<const Eigen::Vector2d> targets,
                              std::span<const Eigen::Vector2d> actions) {
  if (s.empty()) return 0.0;
  double total = 0.0;
  for (const auto& target : targets) {
    double best = 0.0;
    for (Index a : s) {
      const double dist = std::max((actions[a] - target).norm(), kDistanceFloor);
      best = std::max(best, 1.0 / dist);
    }
    total += best;
  }
  return total;
}

double ekf_aoptimal_eval(std::span<const Index> s,
                         std::span<const Eigen::Vector2d> previous_targets,
                         std::span<const Eigen::Vector2d> actions,
                         const EkfParams& params) {
  if (s.empty()) return 0.0;
  const double prior_trace = params.info.inverse().trace();
  double total = 0.0;
  for (const auto& target : previous_targets) {
    Eigen::Matrix2d m = params.info;
    for (Index a : s) {
      const Eigen::Vector2d z = actions[a] - target;
      m += (params.P + z * z.transpose()) / params.sigma2;
    }
    const double det = m.determinant();
    if (!(det > 0.0)) throw NumericError("ekf: singular information matrix");
    // Tr(m^{-1}) for a 2x2 matrix.
    total += prior_trace - m.trace() / det;
  }
  return total;
}

}  // namespace partisel
