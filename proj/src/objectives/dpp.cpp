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

#include "partisel/objectives/dpp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "partisel/errors.hpp"
#include "partisel/objectives/dense_la.hpp"

namespace partisel {

DppFunction::DppFunction(Eigen::MatrixXd kernel) : kernel_(std::move(kernel)) {
  if (kernel_.rows() != kernel_.cols()) throw InputError("dpp: kernel is not square");
}

double DppFunction::value(std::span<const Index> elements) const {
  const auto m = static_cast<Eigen::Index>(elements.size());
  Eigen::MatrixXd sub(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) sub(i, j) = kernel_(elements[i], elements[j]);
  }
  sub.diagonal().array() += 1.0;
  return spd_determinant(sub);
}

double median_bandwidth(const Eigen::Ref<const Eigen::MatrixXd>& features) {
  std::vector<double> dist;
  const auto n = features.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      dist.push_back((features.row(i) - features.row(j)).norm());
    }
  }
  if (dist.empty()) return 1.0;
  const auto mid = dist.begin() + static_cast<std::ptrdiff_t>(dist.size() / 2);
  std::nth_element(dist.begin(), mid, dist.end());
  double h = *mid;
  if (dist.size() % 2 == 0) {
    h = 0.5 * (h + *std::max_element(dist.begin(), mid));
  }
  return h > 0.0 ? h : 1.0;
}

Eigen::MatrixXd gaussian_gram(const Eigen::Ref<const Eigen::MatrixXd>& features,
                              double bandwidth) {
  if (!(bandwidth > 0.0)) throw InputError("dpp: bandwidth must be positive");
  const auto n = features.rows();
  Eigen::MatrixXd gram(n, n);
  const double scale = 1.0 / (2.0 * bandwidth * bandwidth);
  for (Eigen::Index i = 0; i < n; ++i) {
    gram(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double k = std::exp(-(features.row(i) - features.row(j)).squaredNorm() * scale);
      gram(i, j) = k;
      gram(j, i) = k;
    }
  }
  return gram;
}

SetFunctionHandle dpp_build(const Eigen::Ref<const Eigen::MatrixXd>& features,
                            std::optional<double> bandwidth) {
  if (features.rows() < 1) throw InputError("dpp: no items");
  if (!features.allFinite()) throw InputError("dpp: non-finite feature value");
  const double h = bandwidth ? *bandwidth : median_bandwidth(features);
  return SetFunctionHandle(std::make_shared<DppFunction>(gaussian_gram(features, h)));
}

Eigen::MatrixXd read_feature_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open feature file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream cells(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(cells, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      if (b == std::string::npos) {
        numeric = false;
        break;
      }
      double v = 0.0;
      const char* first = cell.data() + b;
      const char* last = cell.data() + e + 1;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last) {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (rows.empty() && line_no == 1) continue;  // header
      throw ParseError("feature csv: non-numeric cell", line_no);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("feature csv: row has " + std::to_string(row.size()) +
                           " columns, expected " + std::to_string(rows.front().size()),
                       line_no);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("feature csv: no rows in " + path);
  Eigen::MatrixXd out(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) out(i, j) = rows[i][j];
  }
  return out;
}

Eigen::MatrixXd synthetic_frames(int frames, int dims, int scenes, Rng& rng) {
  if (frames < 1 || dims < 1 || scenes < 1) {
    throw InputError("synthetic_frames: sizes must be positive");
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd centers(scenes, dims);
  for (Eigen::Index i = 0; i < centers.size(); ++i) centers.data()[i] = 3.0 * normal(rng);
  Eigen::MatrixXd out(frames, dims);
  for (int f = 0; f < frames; ++f) {
    const int scene = static_cast<int>(static_cast<long long>(f) * scenes / frames);
    for (int d = 0; d < dims; ++d) out(f, d) = centers(scene, d) + 0.5 * normal(rng);
  }
  return out;
}

}  // namespace partisel
