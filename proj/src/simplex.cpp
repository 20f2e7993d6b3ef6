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

#include "partisel/simplex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "partisel/errors.hpp"

namespace partisel {

void check_layout(const Eigen::Ref<const Eigen::VectorXd>& x,
                  const Partition& partition) {
  if (x.size() != partition.ground_size()) {
    throw InputError("layout mismatch: vector of size " + std::to_string(x.size()) +
                     " for ground set of size " +
                     std::to_string(partition.ground_size()));
  }
}

bool in_domain(const Eigen::Ref<const Eigen::VectorXd>& x,
               const Partition& partition, double tol) {
  if (x.size() != partition.ground_size()) return false;
  if (!x.allFinite() || x.minCoeff() < -tol) return false;
  for (int k = 0; k < partition.num_communities(); ++k) {
    if (x.segment(partition.offset(k), partition.size(k)).sum() > 1.0 + tol) {
      return false;
    }
  }
  return true;
}

Point uniform_point(const Partition& partition) {
  Point x(partition.ground_size());
  for (int k = 0; k < partition.num_communities(); ++k) {
    x.segment(partition.offset(k), partition.size(k))
        .setConstant(1.0 / static_cast<double>(partition.size(k)));
  }
  return x;
}

Eigen::VectorXd project_block(const Eigen::Ref<const Eigen::VectorXd>& y) {
  Eigen::VectorXd clipped = y.cwiseMax(0.0);
  if (clipped.sum() <= 1.0) return clipped;
  // Sort-and-threshold projection onto the unit-sum simplex.
  std::vector<double> u(y.data(), y.data() + y.size());
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumsum = 0.0;
  double tau = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumsum += u[j];
    const double t = (cumsum - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) tau = t;
  }
  return (y.array() - tau).cwiseMax(0.0).matrix();
}

Point project(const Eigen::Ref<const Eigen::VectorXd>& y,
              const Partition& partition) {
  check_layout(y, partition);
  Point out(y.size());
  for (int k = 0; k < partition.num_communities(); ++k) {
    const auto off = partition.offset(k);
    const auto len = partition.size(k);
    out.segment(off, len) = project_block(y.segment(off, len));
  }
  return out;
}

Point scaled_indicator(const Subset& s, const Partition& partition) {
  if (!feasibility_check(partition, s)) {
    throw InputError("scaled_indicator: subset " + s.to_string() + " is infeasible");
  }
  Point x = Point::Zero(partition.ground_size());
  for (Index v : s) {
    x[partition.coordinate_of(v)] =
        1.0 / static_cast<double>(partition.budget(partition.community_of(v)));
  }
  return x;
}

LinearArgmax linear_argmax_subset(const Eigen::Ref<const Eigen::VectorXd>& weights,
                                  const Partition& partition) {
  check_layout(weights, partition);
  std::vector<Index> chosen;
  double value = 0.0;
  std::vector<Eigen::Index> order;
  for (int k = 0; k < partition.num_communities(); ++k) {
    const auto off = partition.offset(k);
    const auto len = partition.size(k);
    order.clear();
    for (Eigen::Index m = 0; m < len; ++m) {
      if (weights[off + m] > 0.0) order.push_back(off + m);
    }
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
      if (weights[a] != weights[b]) return weights[a] > weights[b];
      return partition.element_at(a) < partition.element_at(b);
    });
    const std::size_t take =
        std::min<std::size_t>(order.size(), partition.budget(k));
    double block = 0.0;
    for (std::size_t j = 0; j < take; ++j) {
      chosen.push_back(partition.element_at(order[j]));
      block += weights[order[j]];
    }
    value += block / static_cast<double>(partition.budget(k));
  }
  return {Subset(std::move(chosen)), value};
}

Point convex_step(const Eigen::Ref<const Eigen::VectorXd>& x,
                  const Eigen::Ref<const Eigen::VectorXd>& direction, int T,
                  const Partition& partition) {
  if (T < 1) throw InputError("convex_step: T must be >= 1");
  check_layout(x, partition);
  check_layout(direction, partition);
  Point out = x + direction / static_cast<double>(T);
  if (!in_domain(out, partition)) {
    throw std::logic_error("convex_step: iterate left the product of simplices");
  }
  return out;
}

}  // namespace partisel
