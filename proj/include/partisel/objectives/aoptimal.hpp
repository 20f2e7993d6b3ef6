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

#ifndef PARTISEL_OBJECTIVES_AOPTIMAL_HPP_
#define PARTISEL_OBJECTIVES_AOPTIMAL_HPP_

#include <cstdint>
#include <span>
#include <string>

#include <Eigen/Core>

#include "partisel/set_function.hpp"

namespace partisel {

// Variance reduction of Bayesian linear regression with prior covariance
// Sigma and noise sigma:
//   g(S) = Tr(Sigma) - Tr((Sigma^{-1} + sigma^{-2} X_S X_S^T)^{-1}),
// evaluated through the Woodbury form
//   g(S) = Tr((sigma^2 I + X_S^T Sigma X_S)^{-1} X_S^T Sigma^2 X_S),
// so g(∅) = 0 exactly. Columns of X are the candidate experiments.
class AOptimalFunction final : public SetFunction {
 public:
  AOptimalFunction(const Eigen::Ref<const Eigen::MatrixXd>& design,
                   const Eigen::Ref<const Eigen::MatrixXd>& prior, double sigma);

  Index ground_size() const override { return static_cast<Index>(gram_.rows()); }
  bool monotone() const override { return true; }
  double value(std::span<const Index> elements) const override;

  double prior_trace() const { return prior_trace_; }

 private:
  Eigen::MatrixXd gram_;     // X^T Sigma X
  Eigen::MatrixXd gram_sq_;  // X^T Sigma^2 X
  double sigma2_;
  double prior_trace_;
};

// Standardizes each feature (zero mean, unit deviation; constant features
// become 0), then uses Sigma = A D A^T with A standard normal from `seed`,
// D_ii = (i / d)^2 and sigma = 1 / sqrt(d). Rows of `samples` are
// experiments. Sigma is regularized by 1e-10 I if it is not positive
// definite.
SetFunctionHandle aoptimal_build(const Eigen::Ref<const Eigen::MatrixXd>& samples,
                                 std::uint64_t seed);

SetFunctionHandle aoptimal_build(const std::string& libsvm_path,
                                 std::uint64_t seed);

}  // namespace partisel

#endif  // PARTISEL_OBJECTIVES_AOPTIMAL_HPP_
