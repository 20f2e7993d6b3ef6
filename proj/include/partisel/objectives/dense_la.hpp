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

#ifndef PARTISEL_OBJECTIVES_DENSE_LA_HPP_
#define PARTISEL_OBJECTIVES_DENSE_LA_HPP_

#include <Eigen/Core>

namespace partisel {

// Small symmetric positive definite kernels on top of Eigen's LLT. All
// throw NumericError when the input is not positive definite.

double cholesky_logdet(const Eigen::Ref<const Eigen::MatrixXd>& a);

// Product of the squared Cholesky diagonal.
double spd_determinant(const Eigen::Ref<const Eigen::MatrixXd>& a);

double spd_inverse_trace(const Eigen::Ref<const Eigen::MatrixXd>& a);

// Tr(a^{-1} b) for SPD a.
double spd_solve_trace(const Eigen::Ref<const Eigen::MatrixXd>& a,
                       const Eigen::Ref<const Eigen::MatrixXd>& b);

inline Eigen::VectorXd matvec(const Eigen::Ref<const Eigen::MatrixXd>& a,
                              const Eigen::Ref<const Eigen::VectorXd>& x) {
  return a * x;
}

}  // namespace partisel

#endif  // PARTISEL_OBJECTIVES_DENSE_LA_HPP_
