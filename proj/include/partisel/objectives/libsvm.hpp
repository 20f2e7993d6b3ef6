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

#ifndef PARTISEL_OBJECTIVES_LIBSVM_HPP_
#define PARTISEL_OBJECTIVES_LIBSVM_HPP_

#include <istream>
#include <string>

#include <Eigen/Core>

namespace partisel {

struct LibsvmData {
  Eigen::VectorXd labels;
  Eigen::MatrixXd features;  // one row per line, 1-based indices mapped to columns
};

// "label idx:val idx:val ..." per line; missing indices are 0, blank lines
// are skipped. Throws ParseError carrying the 1-based line number.
LibsvmData libsvm_parse(std::istream& in);

// Throws InputError if the file cannot be opened.
LibsvmData libsvm_parse(const std::string& path);

}  // namespace partisel

#endif  // PARTISEL_OBJECTIVES_LIBSVM_HPP_
