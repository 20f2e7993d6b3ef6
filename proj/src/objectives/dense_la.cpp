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

#include "partisel/objectives/dense_la.hpp"

#include <Eigen/Cholesky>

#include "partisel/errors.hpp"

namespace partisel {

namespace {

Eigen::LLT<Eigen::MatrixXd> factor(const Eigen::Ref<const Eigen::MatrixXd>& a) {
  if (a.rows() != a.cols()) throw NumericError("dense_la: matrix is not square");
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) {
    throw NumericError("dense_la: matrix is not positive definite");
  }
  return llt;
}

}  // namespace

double cholesky_logdet(const Eigen::Ref<const Eigen::MatrixXd>& a) {
  if (a.rows() == 0) return 0.0;
  const auto llt = factor(a);
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

double spd_determinant(const Eigen::Ref<const Eigen::MatrixXd>& a) {
  if (a.rows() == 0) return 1.0;
  const auto llt = factor(a);
  const Eigen::VectorXd diag = llt.matrixLLT().diagonal();
  return diag.array().square().prod();
}

double spd_inverse_trace(const Eigen::Ref<const Eigen::MatrixXd>& a) {
  if (a.rows() == 0) return 0.0;
  const auto llt = factor(a);
  return llt.solve(Eigen::MatrixXd::Identity(a.rows(), a.cols())).trace();
}

double spd_solve_trace(const Eigen::Ref<const Eigen::MatrixXd>& a,
                       const Eigen::Ref<const Eigen::MatrixXd>& b) {
  if (a.rows() == 0) return 0.0;
  const auto llt = factor(a);
  return llt.solve(b).trace();
}

}  // namespace partisel
