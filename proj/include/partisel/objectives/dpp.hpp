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

#ifndef PARTISEL_OBJECTIVES_DPP_HPP_
#define PARTISEL_OBJECTIVES_DPP_HPP_

#include <optional>
#include <span>
#include <string>

#include <Eigen/Core>

#include "partisel/rng.hpp"
#include "partisel/set_function.hpp"

namespace partisel {

// f(S) = det(I + X_S) for a PSD kernel matrix X; f(∅) = 1.
class DppFunction final : public SetFunction {
 public:
  explicit DppFunction(Eigen::MatrixXd kernel);

  Index ground_size() const override { return static_cast<Index>(kernel_.rows()); }
  bool monotone() const override { return true; }
  double value(std::span<const Index> elements) const override;

  const Eigen::MatrixXd& kernel() const { return kernel_; }

 private:
  Eigen::MatrixXd kernel_;
};

// Median of the pairwise Euclidean distances between rows (1 if all
// rows coincide).
double median_bandwidth(const Eigen::Ref<const Eigen::MatrixXd>& features);

// X_ij = exp(-|x_i - x_j|^2 / (2 h^2)) over the rows of `features`.
Eigen::MatrixXd gaussian_gram(const Eigen::Ref<const Eigen::MatrixXd>& features,
                              double bandwidth);

// Rows are items. Default bandwidth is the median heuristic. Throws
// InputError on non-finite features or a nonpositive bandwidth.
SetFunctionHandle dpp_build(const Eigen::Ref<const Eigen::MatrixXd>& features,
                            std::optional<double> bandwidth = std::nullopt);

// Numeric CSV, one row per item; a non-numeric first line is a header.
// Throws ParseError with the line number on bad cells.
Eigen::MatrixXd read_feature_csv(const std::string& path);

// Piecewise-constant "scenes" plus noise, standing in for frame features
// when no data file is given.
Eigen::MatrixXd synthetic_frames(int frames, int dims, int scenes, Rng& rng);

}  // namespace partisel

#endif  // PARTISEL_OBJECTIVES_DPP_HPP_
