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

#ifndef PARTISEL_SET_FUNCTION_HPP_
#define PARTISEL_SET_FUNCTION_HPP_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>

#include "partisel/partition.hpp"
#include "partisel/subset.hpp"

namespace partisel {

// A pure set objective. `value` receives distinct ids in the ground set,
// in no particular order, and must be safe to call concurrently.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual Index ground_size() const = 0;
  virtual bool monotone() const = 0;
  virtual double value(std::span<const Index> elements) const = 0;
};

class LambdaSetFunction final : public SetFunction {
 public:
  using Fn = std::function<double(std::span<const Index>)>;
  LambdaSetFunction(Index ground_size, bool monotone, Fn fn)
      : ground_size_(ground_size), monotone_(monotone), fn_(std::move(fn)) {}

  Index ground_size() const override { return ground_size_; }
  bool monotone() const override { return monotone_; }
  double value(std::span<const Index> elements) const override {
    return fn_(elements);
  }

 private:
  Index ground_size_;
  bool monotone_;
  Fn fn_;
};

// f(S) - f(∅), for objectives such as det(I + X_S) with f(∅) != 0.
class NormalizedSetFunction final : public SetFunction {
 public:
  explicit NormalizedSetFunction(std::shared_ptr<const SetFunction> inner);

  Index ground_size() const override { return inner_->ground_size(); }
  bool monotone() const override { return inner_->monotone(); }
  double value(std::span<const Index> elements) const override {
    return inner_->value(elements) - empty_value_;
  }
  double empty_value() const { return empty_value_; }

 private:
  std::shared_ptr<const SetFunction> inner_;
  double empty_value_;
};

// Query-counted view of a SetFunction. Every evaluation bumps an atomic
// counter by exactly one. Handles are move-only; `fresh()` gives a new
// handle on the same function with a zeroed counter.
class SetFunctionHandle {
 public:
  explicit SetFunctionHandle(std::shared_ptr<const SetFunction> fn);

  SetFunctionHandle(SetFunctionHandle&& other) noexcept;
  SetFunctionHandle& operator=(SetFunctionHandle&& other) noexcept;
  SetFunctionHandle(const SetFunctionHandle&) = delete;
  SetFunctionHandle& operator=(const SetFunctionHandle&) = delete;

  SetFunctionHandle fresh() const { return SetFunctionHandle(fn_); }

  // Throws InputError if an id is outside the ground set. Ids must be
  // distinct.
  double evaluate(std::span<const Index> elements) const;
  double evaluate(const Subset& s) const { return evaluate(s.elements()); }

  Index ground_size() const { return fn_->ground_size(); }
  bool monotone() const { return fn_->monotone(); }
  std::int64_t queries() const { return counter_.load(std::memory_order_relaxed); }
  const std::shared_ptr<const SetFunction>& function() const { return fn_; }

 private:
  std::shared_ptr<const SetFunction> fn_;
  mutable std::atomic<std::int64_t> counter_{0};
};

template <typename Fn>
SetFunctionHandle make_handle(Index ground_size, bool monotone, Fn&& fn) {
  return SetFunctionHandle(std::make_shared<LambdaSetFunction>(
      ground_size, monotone, std::forward<Fn>(fn)));
}

inline double evaluate(const SetFunctionHandle& handle, const Subset& s) {
  return handle.evaluate(s);
}

// f(s ∪ {v}) - f(s); two queries. Throws InputError if v ∈ s.
double marginal(const SetFunctionHandle& handle, Index v, const Subset& s);
// Same, reusing a caller-cached f(s); one query.
double marginal(const SetFunctionHandle& handle, Index v, const Subset& s,
                double cached_value);

}  // namespace partisel

#endif  // PARTISEL_SET_FUNCTION_HPP_
