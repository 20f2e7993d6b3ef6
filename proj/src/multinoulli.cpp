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

#include "partisel/multinoulli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>

#include "partisel/errors.hpp"

namespace partisel {

namespace {

Index draw_slot(const Eigen::Ref<const Eigen::VectorXd>& point,
                const Partition& partition, int k, Rng& rng) {
  const double u = uniform01(rng);
  const auto off = partition.offset(k);
  double acc = 0.0;
  for (Eigen::Index m = 0; m < partition.size(k); ++m) {
    acc += point[off + m];
    if (u < acc) return partition.element_at(off + m);
  }
  return kEmpty;
}

// Multiset view of a draw matrix with cheap "union minus some slots" sets.
class DrawView {
 public:
  DrawView(const DrawMatrix& draws, Index ground_size)
      : draws_(draws), counts_(ground_size, 0) {
    for (const auto& block : draws.slots) {
      for (Index e : block) {
        if (e == kEmpty) continue;
        if (counts_[e]++ == 0) distinct_.push_back(e);
      }
    }
  }

  const std::vector<Index>& distinct() const { return distinct_; }
  int count(Index v) const { return counts_[v]; }
  Index slot(int k, int b) const { return draws_.slots[k][b]; }

  // Elements still present after removing the listed slots.
  void union_without(std::initializer_list<std::pair<int, int>> removed,
                     std::vector<Index>& out) {
    for (auto [k, b] : removed) {
      const Index e = draws_.slots[k][b];
      if (e != kEmpty) --counts_[e];
    }
    out.clear();
    for (Index e : distinct_) {
      if (counts_[e] > 0) out.push_back(e);
    }
    for (auto [k, b] : removed) {
      const Index e = draws_.slots[k][b];
      if (e != kEmpty) ++counts_[e];
    }
  }

  // Whether v survives removal of the listed slots.
  bool present_without(Index v,
                       std::initializer_list<std::pair<int, int>> removed) const {
    int c = counts_[v];
    for (auto [k, b] : removed) {
      if (draws_.slots[k][b] == v) --c;
    }
    return c > 0;
  }

 private:
  const DrawMatrix& draws_;
  std::vector<int> counts_;
  std::vector<Index> distinct_;
};

// Adds the one-draw gradient estimate at `point` into `out`; returns the
// number of evaluations.
std::int64_t accumulate_gradient_draw(const SetFunctionHandle& handle,
                                      const Partition& partition,
                                      const Eigen::Ref<const Eigen::VectorXd>& point,
                                      Rng& rng, Eigen::Ref<Eigen::VectorXd> out) {
  const DrawMatrix draws = sample_draws(point, partition, rng);
  DrawView view(draws, partition.ground_size());
  std::int64_t queries = 0;
  const double f_union = handle.evaluate(view.distinct());
  ++queries;

  std::vector<Index> base;
  for (int k = 0; k < partition.num_communities(); ++k) {
    const Index e0 = view.slot(k, 0);
    const bool shrinks = e0 != kEmpty && view.count(e0) == 1;
    double f_base = f_union;
    if (shrinks) {
      view.union_without({{k, 0}}, base);
      f_base = handle.evaluate(base);
      ++queries;
    } else {
      base = view.distinct();
    }
    const double bk = partition.budget(k);
    const auto off = partition.offset(k);
    for (Eigen::Index m = 0; m < partition.size(k); ++m) {
      const Index v = partition.element_at(off + m);
      if (view.present_without(v, {{k, 0}})) continue;
      double gain;
      if (shrinks && v == e0) {
        gain = f_union - f_base;
      } else {
        base.push_back(v);
        gain = handle.evaluate(base) - f_base;
        base.pop_back();
        ++queries;
      }
      out[off + m] += bk * gain;
    }
  }
  return queries;
}

HessianColumns hessian_columns_from_draws(const SetFunctionHandle& handle,
                                          const Partition& partition,
                                          const DrawMatrix& draws,
                                          std::span<const Eigen::Index> columns) {
  HessianColumns out;
  out.columns.assign(columns.begin(), columns.end());
  out.values = Eigen::MatrixXd::Zero(partition.ground_size(),
                                     static_cast<Eigen::Index>(columns.size()));
  DrawView view(draws, partition.ground_size());

  // Group requested columns by community.
  std::vector<std::vector<std::size_t>> by_community(partition.num_communities());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] < 0 || columns[j] >= partition.ground_size()) {
      throw InputError("hessian: column " + std::to_string(columns[j]) +
                       " out of range");
    }
    by_community[partition.community_of(partition.element_at(columns[j]))]
        .push_back(j);
  }

  std::vector<Index> s;
  std::vector<std::optional<double>> f_row;
  for (int k2 = 0; k2 < partition.num_communities(); ++k2) {
    if (by_community[k2].empty()) continue;
    for (int k1 = 0; k1 < partition.num_communities(); ++k1) {
      double coef;
      std::pair<int, int> r1, r2;
      if (k1 != k2) {
        coef = static_cast<double>(partition.budget(k1)) * partition.budget(k2);
        r1 = {k1, 0};
        r2 = {k2, 0};
      } else {
        const int bk = partition.budget(k1);
        if (bk < 2) continue;
        coef = static_cast<double>(bk) * bk - bk;
        r1 = {k1, 0};
        r2 = {k1, 1};
      }
      view.union_without({r1, r2}, s);
      auto in_s = [&](Index v) { return view.present_without(v, {r1, r2}); };

      std::optional<double> f_s;
      auto eval_s = [&] {
        if (!f_s) {
          f_s = handle.evaluate(s);
          ++out.queries;
        }
        return *f_s;
      };
      auto eval_plus = [&](std::initializer_list<Index> extra) {
        for (Index e : extra) s.push_back(e);
        const double value = handle.evaluate(s);
        s.resize(s.size() - extra.size());
        ++out.queries;
        return value;
      };

      const auto off1 = partition.offset(k1);
      const auto n1 = partition.size(k1);
      f_row.assign(n1, std::nullopt);
      for (std::size_t j : by_community[k2]) {
        const Index v2 = partition.element_at(columns[j]);
        const bool v2_in = in_s(v2);
        std::optional<double> f_col;
        for (Eigen::Index m = 0; m < n1; ++m) {
          const Index v1 = partition.element_at(off1 + m);
          if (in_s(v1)) continue;
          double entry;
          if (v1 == v2) {
            // f(v|S + v) = 0, leaving -f(v|S).
            if (!f_row[m]) f_row[m] = eval_plus({v1});
            entry = -(*f_row[m] - eval_s());
          } else if (v2_in) {
            continue;
          } else {
            if (!f_row[m]) f_row[m] = eval_plus({v1});
            if (!f_col) f_col = eval_plus({v2});
            entry = eval_plus({v1, v2}) - *f_col - *f_row[m] + eval_s();
          }
          out.values(off1 + m, static_cast<Eigen::Index>(j)) = coef * entry;
        }
      }
    }
  }
  return out;
}

// Calls visit(drawn elements with repeats, probability) for every draw
// matrix of the slots in `slot_community`, skipping zero-probability
// branches.
void enumerate_draws(const Eigen::Ref<const Eigen::VectorXd>& point,
                     const Partition& partition,
                     const std::vector<int>& slot_community,
                     const std::function<void(const std::vector<Index>&, double)>& visit) {
  std::vector<Index> drawn;
  std::function<void(std::size_t, double)> rec = [&](std::size_t i, double prob) {
    if (i == slot_community.size()) {
      visit(drawn, prob);
      return;
    }
    const int k = slot_community[i];
    const auto off = partition.offset(k);
    const double mass = point.segment(off, partition.size(k)).sum();
    const double p_empty = std::max(0.0, 1.0 - mass);
    if (p_empty > 0.0) rec(i + 1, prob * p_empty);
    for (Eigen::Index m = 0; m < partition.size(k); ++m) {
      const double p = point[off + m];
      if (p <= 0.0) continue;
      drawn.push_back(partition.element_at(off + m));
      rec(i + 1, prob * p);
      drawn.pop_back();
    }
  };
  rec(0, 1.0);
}

std::int64_t slot_outcome_count(const Partition& partition,
                                const std::vector<int>& slot_community,
                                std::int64_t cap) {
  std::int64_t total = 1;
  for (int k : slot_community) {
    const std::int64_t base = partition.size(k) + 1;
    if (total > cap / base) return cap + 1;
    total *= base;
  }
  return total;
}

std::vector<Index> distinct_of(const std::vector<Index>& drawn) {
  std::vector<Index> out = drawn;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_point(const Eigen::Ref<const Eigen::VectorXd>& point,
                 const Partition& partition, const char* who) {
  check_layout(point, partition);
  if (!in_domain(point, partition)) {
    throw InputError(std::string(who) + ": point outside the product of simplices");
  }
}

}  // namespace

std::vector<Index> DrawMatrix::union_elements() const {
  std::vector<Index> out;
  for (const auto& block : slots) {
    for (Index e : block) {
      if (e != kEmpty && std::find(out.begin(), out.end(), e) == out.end()) {
        out.push_back(e);
      }
    }
  }
  return out;
}

DrawMatrix sample_draws(const Eigen::Ref<const Eigen::VectorXd>& point,
                        const Partition& partition, Rng& rng) {
  DrawMatrix draws;
  draws.slots.resize(partition.num_communities());
  for (int k = 0; k < partition.num_communities(); ++k) {
    draws.slots[k].resize(partition.budget(k));
    for (int b = 0; b < partition.budget(k); ++b) {
      draws.slots[k][b] = draw_slot(point, partition, k, rng);
    }
  }
  return draws;
}

std::int64_t outcome_count(const Partition& partition, std::int64_t cap) {
  std::vector<int> slots;
  for (int k = 0; k < partition.num_communities(); ++k) {
    slots.insert(slots.end(), partition.budget(k), k);
  }
  return slot_outcome_count(partition, slots, cap);
}

double exact_value(const SetFunctionHandle& handle, const Partition& partition,
                   const Eigen::Ref<const Eigen::VectorXd>& point,
                   std::int64_t cap) {
  check_point(point, partition, "exact_value");
  const std::int64_t outcomes = outcome_count(partition, cap);
  if (outcomes > cap) {
    throw SizeError("exact_value: more than " + std::to_string(cap) + " outcomes");
  }
  std::vector<int> slots;
  for (int k = 0; k < partition.num_communities(); ++k) {
    slots.insert(slots.end(), partition.budget(k), k);
  }
  double total = 0.0;
  enumerate_draws(point, partition, slots,
                  [&](const std::vector<Index>& drawn, double prob) {
                    total += prob * handle.evaluate(distinct_of(drawn));
                  });
  return total;
}

Gradient exact_gradient(const SetFunctionHandle& handle,
                        const Partition& partition,
                        const Eigen::Ref<const Eigen::VectorXd>& point,
                        std::int64_t cap) {
  check_point(point, partition, "exact_gradient");
  Gradient grad = Gradient::Zero(partition.ground_size());
  for (int k = 0; k < partition.num_communities(); ++k) {
    std::vector<int> slots;
    for (int kk = 0; kk < partition.num_communities(); ++kk) {
      slots.insert(slots.end(), partition.budget(kk) - (kk == k ? 1 : 0), kk);
    }
    if (slot_outcome_count(partition, slots, cap) > cap) {
      throw SizeError("exact_gradient: more than " + std::to_string(cap) +
                      " outcomes");
    }
    const auto off = partition.offset(k);
    const double bk = partition.budget(k);
    enumerate_draws(point, partition, slots,
                    [&](const std::vector<Index>& drawn, double prob) {
                      std::vector<Index> a = distinct_of(drawn);
                      const double fa = handle.evaluate(a);
                      for (Eigen::Index m = 0; m < partition.size(k); ++m) {
                        const Index v = partition.element_at(off + m);
                        if (std::binary_search(a.begin(), a.end(), v)) continue;
                        a.push_back(v);
                        grad[off + m] += bk * prob * (handle.evaluate(a) - fa);
                        a.pop_back();
                      }
                    });
  }
  return grad;
}

GradientSample estimate_gradient(const SetFunctionHandle& handle,
                                 const Partition& partition,
                                 const Eigen::Ref<const Eigen::VectorXd>& point,
                                 int L, Rng& rng) {
  if (L < 1) throw InputError("estimate_gradient: L must be >= 1");
  check_point(point, partition, "estimate_gradient");
  const std::uint64_t master = rng();
  Eigen::MatrixXd per_sample = Eigen::MatrixXd::Zero(partition.ground_size(), L);
  std::vector<std::int64_t> queries(L, 0);
  parallel_for(L, [&](std::int64_t l) {
    Rng local = substream(master, static_cast<std::uint64_t>(l));
    queries[l] = accumulate_gradient_draw(handle, partition, point, local,
                                          per_sample.col(l));
  });
  GradientSample out;
  out.gradient = Gradient::Zero(partition.ground_size());
  for (int l = 0; l < L; ++l) {
    out.gradient += per_sample.col(l);
    out.queries += queries[l];
  }
  out.gradient /= static_cast<double>(L);
  return out;
}

HessianColumns estimate_hessian_columns(
    const SetFunctionHandle& handle, const Partition& partition,
    const Eigen::Ref<const Eigen::VectorXd>& point,
    std::span<const Eigen::Index> columns, Rng& rng) {
  check_point(point, partition, "estimate_hessian_columns");
  const DrawMatrix draws = sample_draws(point, partition, rng);
  return hessian_columns_from_draws(handle, partition, draws, columns);
}

SpiderState spider_init(const SetFunctionHandle& handle,
                        const Partition& partition) {
  SpiderState state;
  const Index n = partition.ground_size();
  state.g = Gradient::Zero(n);
  state.x_prev = Point::Zero(n);
  state.t = 1;
  const double f_empty = handle.evaluate(std::span<const Index>{});
  state.queries = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Index v = partition.element_at(i);
    const double bk = partition.budget(partition.community_of(v));
    state.g[i] = bk * (handle.evaluate(std::span<const Index>(&v, 1)) - f_empty);
    ++state.queries;
  }
  return state;
}

SpiderState spider_update(const SpiderState& state,
                          const SetFunctionHandle& handle,
                          const Partition& partition,
                          const Eigen::Ref<const Eigen::VectorXd>& x_new, int L,
                          Rng& rng) {
  if (L < 1) throw InputError("spider_update: L must be >= 1");
  check_point(x_new, partition, "spider_update");
  SpiderState next = state;
  next.t = state.t + 1;
  next.x_prev = x_new;

  const Eigen::VectorXd delta = x_new - state.x_prev;
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < delta.size(); ++i) {
    if (delta[i] != 0.0) support.push_back(i);
  }
  if (support.empty()) return next;
  Eigen::VectorXd delta_support(static_cast<Eigen::Index>(support.size()));
  for (std::size_t j = 0; j < support.size(); ++j) delta_support[j] = delta[support[j]];

  const std::uint64_t master = rng();
  const Index n = partition.ground_size();
  Eigen::MatrixXd xi = Eigen::MatrixXd::Zero(n, L);
  std::vector<std::int64_t> queries(L, 0);
  parallel_for(L, [&](std::int64_t l) {
    Rng local = substream(master, static_cast<std::uint64_t>(l));
    const double a = uniform01(local);
    const Point x_l = a * x_new + (1.0 - a) * state.x_prev;
    const DrawMatrix draws = sample_draws(x_l, partition, local);
    const HessianColumns h =
        hessian_columns_from_draws(handle, partition, draws, support);
    xi.col(l) = h.values * delta_support;
    queries[l] = h.queries;
  });
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(n);
  for (int l = 0; l < L; ++l) {
    mean += xi.col(l);
    next.queries += queries[l];
  }
  next.g += mean / static_cast<double>(L);
  next.hessian_entries +=
      static_cast<std::int64_t>(L) * n * static_cast<std::int64_t>(support.size());
  return next;
}

void RatioParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InputError("ratio params: alpha must lie in (0, 1]");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw InputError("ratio params: gamma must lie in (0, 1]");
  if (!(beta >= 1.0)) throw InputError("ratio params: beta must be >= 1");
}

double auxiliary_z(double c, double u) {
  if (!(c > 0.0)) throw InputError("auxiliary_z: c must be positive");
  const double e = std::exp(-c);
  return 1.0 + std::log(e + u * (1.0 - e)) / c;
}

double auxiliary_weight_mass(double c) {
  if (!(c > 0.0)) throw InputError("auxiliary weight: c must be positive");
  return -std::expm1(-c) / c;
}

GradientSample auxiliary_gradient_sample(
    const SetFunctionHandle& handle, const Partition& partition,
    const Eigen::Ref<const Eigen::VectorXd>& point, double c, Rng& rng, int L) {
  if (!(c > 0.0)) throw InputError("auxiliary_gradient_sample: c must be positive");
  if (L < 1) throw InputError("auxiliary_gradient_sample: L must be >= 1");
  check_point(point, partition, "auxiliary_gradient_sample");
  const std::uint64_t master = rng();
  Eigen::MatrixXd per_sample = Eigen::MatrixXd::Zero(partition.ground_size(), L);
  std::vector<std::int64_t> queries(L, 0);
  parallel_for(L, [&](std::int64_t l) {
    Rng local = substream(master, static_cast<std::uint64_t>(l));
    const double z = auxiliary_z(c, uniform01(local));
    const Point scaled = z * point;
    queries[l] = accumulate_gradient_draw(handle, partition, scaled, local,
                                          per_sample.col(l));
  });
  GradientSample out;
  out.gradient = Gradient::Zero(partition.ground_size());
  for (int l = 0; l < L; ++l) {
    out.gradient += per_sample.col(l);
    out.queries += queries[l];
  }
  out.gradient *= auxiliary_weight_mass(c) / static_cast<double>(L);
  return out;
}

}  // namespace partisel
