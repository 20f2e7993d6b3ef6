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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "partisel/errors.hpp"
#include "partisel/simplex.hpp"

using namespace partisel;

namespace {

// Nearest grid point of {p >= 0, sum p <= 1} with spacing h.
Eigen::VectorXd grid_projection(const Eigen::VectorXd& y, double h) {
  const int steps = static_cast<int>(std::round(1.0 / h));
  Eigen::VectorXd best;
  double best_d = 1e300;
  Eigen::VectorXd p(y.size());
  std::function<void(Eigen::Index, int)> rec = [&](Eigen::Index i, int left) {
    if (i == y.size()) {
      const double d = (p - y).squaredNorm();
      if (d < best_d) {
        best_d = d;
        best = p;
      }
      return;
    }
    for (int j = 0; j <= left; ++j) {
      p[i] = j * h;
      rec(i + 1, left - j);
    }
  };
  rec(0, steps);
  return best;
}

}  // namespace

TEST(Simplex, ProjectionExamples) {
  Partition p({{0, 1}}, {1});
  Eigen::Vector2d a(0.5, 0.3), b(0.8, 0.8), c(-0.2, 0.5);
  EXPECT_TRUE(project(a, p).isApprox(a));
  EXPECT_NEAR((project(b, p) - Eigen::Vector2d(0.5, 0.5)).norm(), 0.0, 1e-15);
  EXPECT_NEAR((project(c, p) - Eigen::Vector2d(0.0, 0.5)).norm(), 0.0, 1e-15);
}

TEST(Simplex, ProjectionMatchesGridAndIsIdempotent) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal(0.3, 0.8);
  const double h = 0.005;
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = 2 + trial % 2;
    Eigen::VectorXd y(dim);
    for (int i = 0; i < dim; ++i) y[i] = normal(rng);
    const Eigen::VectorXd q = project_block(y);
    EXPECT_LE((q - grid_projection(y, h)).lpNorm<Eigen::Infinity>(), 2 * h);
    EXPECT_LE((project_block(q) - q).norm(), 1e-14);
  }
}

TEST(Simplex, DomainChecks) {
  Partition p({{0, 1}, {2}}, {1, 1});
  EXPECT_TRUE(in_domain(Eigen::Vector3d(0.5, 0.5, 1.0), p));
  EXPECT_FALSE(in_domain(Eigen::Vector3d(0.6, 0.5, 0.0), p));
  EXPECT_FALSE(in_domain(Eigen::Vector3d(-0.1, 0.5, 0.0), p));
  EXPECT_THROW(check_layout(Eigen::Vector2d(0, 0), p), InputError);
  EXPECT_TRUE(uniform_point(p).isApprox(Eigen::Vector3d(0.5, 0.5, 1.0)));
}

TEST(Simplex, ScaledIndicator) {
  Partition p({{0, 1, 2}, {3, 4}}, {2, 1});
  EXPECT_TRUE(scaled_indicator({}, p).isZero());
  Eigen::VectorXd expect(5);
  expect << 0.5, 0.0, 0.5, 0.0, 1.0;
  EXPECT_TRUE(scaled_indicator({0, 2, 4}, p).isApprox(expect));
  EXPECT_THROW(scaled_indicator({3, 4}, p), InputError);
}

TEST(Simplex, LinearArgmaxExamples) {
  Partition p({{0, 1, 2}, {3, 4}}, {2, 1});
  Eigen::VectorXd w(5);
  w << 3, 1, -2, 5, 4;
  const LinearArgmax a = linear_argmax_subset(w, p);
  EXPECT_EQ(a.subset, (Subset{0, 1, 3}));
  EXPECT_DOUBLE_EQ(a.value, 7.0);
  EXPECT_TRUE(linear_argmax_subset(-w.cwiseAbs(), p).subset.empty());
  const LinearArgmax ties = linear_argmax_subset(Eigen::VectorXd::Ones(5), p);
  EXPECT_EQ(ties.subset, (Subset{0, 1, 3}));
}

TEST(Simplex, LinearArgmaxMatchesExhaustiveSearch) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 9;
    const int K = 1 + trial % std::min(n, 4);
    const Partition p = oracle::random_partition(n, K, 3, rng);
    if (p.feasible_family_size(100'000) > 100'000) continue;
    Eigen::VectorXd w(n);
    for (int i = 0; i < n; ++i) w[i] = normal(rng);
    double best = -1e300;
    for (const auto& s : oracle::feasible_family(p)) {
      const double v = scaled_indicator(Subset(s), p).dot(w);
      best = std::max(best, v);
    }
    const LinearArgmax a = linear_argmax_subset(w, p);
    EXPECT_NEAR(a.value, best, 1e-12);
    EXPECT_NEAR(scaled_indicator(a.subset, p).dot(w), a.value, 1e-12);
  }
}

TEST(Simplex, ConvexStep) {
  Partition p({{0, 1}, {2, 3, 4}}, {1, 2});
  Eigen::VectorXd d = scaled_indicator({1, 2, 4}, p);
  EXPECT_TRUE(convex_step(Eigen::VectorXd::Zero(5), d, 1, p).isApprox(d));
  Eigen::VectorXd x = Eigen::VectorXd::Zero(5);
  for (int t = 0; t < 7; ++t) x = convex_step(x, d, 7, p);
  EXPECT_LE((x - d).norm(), 1e-14);

  std::mt19937_64 rng(2);
  std::normal_distribution<double> normal(0.0, 1.0);
  const int T = 50;
  x.setZero();
  for (int t = 0; t < T; ++t) {
    Eigen::VectorXd w(5);
    for (int i = 0; i < 5; ++i) w[i] = normal(rng);
    x = convex_step(x, scaled_indicator(linear_argmax_subset(w, p).subset, p), T, p);
    EXPECT_TRUE(in_domain(x, p));
  }
  EXPECT_THROW(convex_step(Eigen::VectorXd::Zero(5), 3.0 * d, 1, p), std::logic_error);
}
