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

#include "partisel/set_function.hpp"

#include <string>
#include <vector>

#include "partisel/errors.hpp"

namespace partisel {

NormalizedSetFunction::NormalizedSetFunction(
    std::shared_ptr<const SetFunction> inner)
    : inner_(std::move(inner)) {
  if (!inner_) throw InputError("normalize_empty: null function");
  empty_value_ = inner_->value({});
}

SetFunctionHandle::SetFunctionHandle(std::shared_ptr<const SetFunction> fn)
    : fn_(std::move(fn)) {
  if (!fn_) throw InputError("set function handle: null function");
}

SetFunctionHandle::SetFunctionHandle(SetFunctionHandle&& other) noexcept
    : fn_(std::move(other.fn_)), counter_(other.counter_.load()) {}

SetFunctionHandle& SetFunctionHandle::operator=(
    SetFunctionHandle&& other) noexcept {
  fn_ = std::move(other.fn_);
  counter_.store(other.counter_.load());
  return *this;
}

double SetFunctionHandle::evaluate(std::span<const Index> elements) const {
  const Index n = fn_->ground_size();
  for (Index v : elements) {
    if (v < 0 || v >= n) {
      throw InputError("evaluate: element " + std::to_string(v) +
                       " outside ground set of size " + std::to_string(n));
    }
  }
  counter_.fetch_add(1, std::memory_order_relaxed);
  return fn_->value(elements);
}

double marginal(const SetFunctionHandle& handle, Index v, const Subset& s) {
  if (s.contains(v)) {
    throw InputError("marginal: element " + std::to_string(v) + " already in set");
  }
  const double base = handle.evaluate(s);
  return handle.evaluate(s.with(v)) - base;
}

double marginal(const SetFunctionHandle& handle, Index v, const Subset& s,
                double cached_value) {
  if (s.contains(v)) {
    throw InputError("marginal: element " + std::to_string(v) + " already in set");
  }
  return handle.evaluate(s.with(v)) - cached_value;
}

}  // namespace partisel
