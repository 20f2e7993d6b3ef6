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

#include "partisel/objectives/aoptimal.hpp"

#include <cmath>
#include <iostream>
#include <random>

#include <Eigen/Cholesky>

#include "partisel/errors.hpp"
#include "partisel/objectives/dense_la.hpp"
#include "partisel/objectives/libsvm.hpp"
#include "partisel/rng.hpp"

namespace partisel {

AOptimalFunction::AOptimalFunction(const Eigen::Ref<const Eigen::MatrixXd>& design,
                                   const Eigen::Ref<const Eigen::MatrixXd>& prior,
                                   double sigma) {
  if (prior.rows() != prior.cols() || prior.rows() != design.rows()) {
    throw InputError("aoptimal: prior must be d x d for a d x n design");
  }
  if (!(sigma > 0.0)) throw InputError("aoptimal: sigma must be positive");
  const Eigen::MatrixXd sx = prior * design;
  gram_ = design.transpose() * sx;
  gram_sq_ = sx.transpose() * sx;
  sigma2_ = sigma * sigma;
  prior_trace_ = prior.trace();
}

double AOptimalFunction::value(std::span<const Index> elements) const {
  const auto m = static_cast<Eigen::Index>(elements.size());
  if (m == 0) return 0.0;
  Eigen::MatrixXd a(m, m);
  Eigen::MatrixXd b(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      a(i, j) = gram_(elements[i], elements[j]);
      b(i, j) = gram_sq_(elements[i], elements[j]);
    }
  }
  a.diagonal().array() += sigma2_;
  return spd_solve_trace(a, b);
}

SetFunctionHandle aoptimal_build(const Eigen::Ref<const Eigen::MatrixXd>& samples,
                                 std::uint64_t seed) {
  const auto d = samples.cols();
  if (d < 1 || samples.rows() < 1) throw InputError("aoptimal: empty data");
  if (!samples.allFinite()) throw InputError("aoptimal: non-finite data");

  Eigen::MatrixXd z = samples;
  for (Eigen::Index j = 0; j < d; ++j) {
    const double mean = z.col(j).mean();
    z.col(j).array() -= mean;
    const double sd = std::sqrt(z.col(j).squaredNorm() / static_cast<double>(z.rows()));
    if (sd > 0.0) z.col(j) /= sd;
  }

  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd a(d, d);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = normal(rng);
  Eigen::VectorXd diag(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double r = static_cast<double>(i + 1) / static_cast<double>(d);
    diag[i] = r * r;
  }
  Eigen::MatrixXd prior = a * diag.asDiagonal() * a.transpose();
  prior = 0.5 * (prior + prior.transpose());
  if (Eigen::LLT<Eigen::MatrixXd>(prior).info() != Eigen::Success) {
    std::cerr << "warning: aoptimal prior not positive definite, adding 1e-10 I\n";
    prior.diagonal().array() += 1e-10;
  }
  const double sigma = 1.0 / std::sqrt(static_cast<double>(d));
  return SetFunctionHandle(
      std::make_shared<AOptimalFunction>(z.transpose(), prior, sigma));
}

SetFunctionHandle aoptimal_build(const std::string& libsvm_path, std::uint64_t seed) {
  return aoptimal_build(libsvm_parse(libsvm_path).features, seed);
}

}  // namespace partisel
