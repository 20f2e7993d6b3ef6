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

#include "partisel/objectives/libsvm.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "partisel/errors.hpp"

namespace partisel {

namespace {

double parse_number(const std::string& token, int line_no) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("libsvm: bad number '" + token + "'", line_no);
  }
  return v;
}

}  // namespace

LibsvmData libsvm_parse(std::istream& in) {
  std::vector<double> labels;
  std::vector<std::vector<std::pair<int, double>>> rows;
  int width = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token)) continue;
    labels.push_back(parse_number(token, line_no));
    auto& row = rows.emplace_back();
    while (tokens >> token) {
      const auto colon = token.find(':');
      if (colon == std::string::npos || colon == 0) {
        throw ParseError("libsvm: expected idx:val, got '" + token + "'", line_no);
      }
      int idx = 0;
      const char* first = token.data();
      const char* last = token.data() + colon;
      auto [ptr, ec] = std::from_chars(first, last, idx);
      if (ec != std::errc() || ptr != last || idx < 1) {
        throw ParseError("libsvm: bad index in '" + token + "'", line_no);
      }
      row.emplace_back(idx, parse_number(token.substr(colon + 1), line_no));
      width = std::max(width, idx);
    }
  }
  LibsvmData out;
  out.labels = Eigen::Map<Eigen::VectorXd>(labels.data(),
                                           static_cast<Eigen::Index>(labels.size()));
  out.features = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (auto [idx, v] : rows[i]) out.features(i, idx - 1) = v;
  }
  return out;
}

LibsvmData libsvm_parse(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open libsvm file: " + path);
  return libsvm_parse(in);
}

}  // namespace partisel
