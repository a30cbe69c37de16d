// Copyright 2026 The pareto-submod Authors.
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

/**
 * @file cost.hpp
 * @brief Cardinality, linear (knapsack) and diameter costs.
 *
 * The canonical value of a linear cost is the sum of member weights taken in
 * ascending item order, so the same set always has the same cost no matter
 * how it was built.
 */

#ifndef PARETO_COST_HPP
#define PARETO_COST_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pareto/core.hpp"
#include "pareto/matrix.hpp"

namespace pareto {

struct WeightedEdge {
  ItemId u = 0;
  ItemId v = 0;
  double weight = 0.0;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

inline constexpr double kMetricTolerance = 1e-9;

/// Result of checking a distance matrix against the metric axioms.
struct MetricCheck {
  bool triangle_ok = true;
  double worst_violation = 0.0;  // max of d(i,j) - d(i,k) - d(k,j)
  std::size_t violations = 0;
};

/**
 * Pairwise distances with a zero diagonal, symmetric and non-negative (all
 * enforced on construction). The triangle inequality is only checked:
 * triangle_check() reports violations, which void the factor-2 ball bound
 * but are not an error.
 */
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(SquareMatrix d, double unreachable_penalty = 0.0)
      : d_(std::move(d)), unreachable_penalty_(unreachable_penalty) {
    const std::size_t n = d_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (d_(i, i) != 0.0) throw std::invalid_argument("distance matrix: nonzero diagonal");
      for (std::size_t j = 0; j < n; ++j) {
        if (!(d_(i, j) >= 0.0) || !std::isfinite(d_(i, j))) {
          throw std::invalid_argument("distance matrix: entries must be finite and non-negative");
        }
        if (d_(i, j) != d_(j, i)) throw std::invalid_argument("distance matrix: not symmetric");
      }
    }
    triangle_ = check_triangle(d_);
  }

  std::size_t size() const { return d_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return d_(i, j); }
  const SquareMatrix& matrix() const { return d_; }
  double unreachable_penalty() const { return unreachable_penalty_; }
  const MetricCheck& triangle_check() const { return triangle_; }

  DistanceMatrix restrict_to(const std::vector<std::uint32_t>& keep) const {
    return DistanceMatrix(d_.restrict_to(keep), unreachable_penalty_);
  }

  static MetricCheck check_triangle(const SquareMatrix& d) {
    MetricCheck out;
    const std::size_t n = d.size();
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const double excess = d(i, j) - d(i, k) - d(k, j);
          if (excess > kMetricTolerance * std::max(1.0, d(i, j))) {
            out.triangle_ok = false;
            ++out.violations;
            out.worst_violation = std::max(out.worst_violation, excess);
          }
        }
      }
    }
    return out;
  }

 private:
  SquareMatrix d_;
  double unreachable_penalty_ = 0.0;
  MetricCheck triangle_;
};

/**
 * All-pairs shortest paths over an undirected weighted graph, one Dijkstra
 * pass per source. Unreachable pairs get 10x the largest finite distance
 * (or 1 when every finite distance is 0).
 */
inline DistanceMatrix shortest_path_metric(std::size_t n, const std::vector<WeightedEdge>& edges) {
  std::vector<std::vector<std::pair<ItemId, double>>> adj(n);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("shortest_path_metric: endpoint out of range");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw std::invalid_argument("shortest_path_metric: edge weights must be finite and >= 0");
    }
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  constexpr double kInf = std::numeric_limits<double>::infinity();
  SquareMatrix d(n, kInf);
  using Entry = std::pair<double, ItemId>;
  for (std::size_t src = 0; src < n; ++src) {
    double* row = &d(src, 0);
    row[src] = 0.0;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    heap.emplace(0.0, static_cast<ItemId>(src));
    while (!heap.empty()) {
      auto [dist, u] = heap.top();
      heap.pop();
      if (dist > row[u]) continue;
      for (auto [v, w] : adj[u]) {
        if (dist + w < row[v]) {
          row[v] = dist + w;
          heap.emplace(row[v], v);
        }
      }
    }
  }
  // Dijkstra sums along different paths can differ in the last ulp between
  // directions; take the smaller so the matrix is exactly symmetric.
  double max_finite = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = std::min(d(i, j), d(j, i));
      d(i, j) = d(j, i) = v;
      if (v != kInf) max_finite = std::max(max_finite, v);
    }
  }
  const double penalty = max_finite > 0.0 ? 10.0 * max_finite : 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d(i, j) == kInf) d(i, j) = penalty;
  return DistanceMatrix(std::move(d), penalty);
}

struct CardinalityCost {};
struct LinearCost {
  std::vector<double> weights;
};
struct DiameterCost {
  DistanceMatrix metric;
};

using CostSpec = std::variant<CardinalityCost, LinearCost, DiameterCost>;

enum class CostKind { kCardinality, kLinear, kDiameter };

inline const char* to_string(CostKind k) {
  switch (k) {
    case CostKind::kCardinality: return "cardinality";
    case CostKind::kLinear: return "linear";
    case CostKind::kDiameter: return "diameter";
  }
  return "?";
}

/// c_k(S) = |S|.
inline double cardinality_eval(const Solution& s) { return static_cast<double>(s.size()); }

/// c_l(S) = sum of member weights, in ascending item order.
inline double linear_eval(const std::vector<double>& weights, const Solution& s) {
  double sum = 0.0;
  s.for_each([&](ItemId e) { sum += weights[e]; });
  return sum;
}

/// c_d(S) = max pairwise distance; 0 when |S| <= 1.
inline double diameter_eval(const DistanceMatrix& d, const Solution& s) {
  const auto m = s.members();
  double best = 0.0;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b) best = std::max(best, d(m[a], m[b]));
  return best;
}

class CostState;

class Cost {
 public:
  Cost(CostSpec spec, std::size_t n) : spec_(std::move(spec)), n_(n) {
    if (auto* lin = std::get_if<LinearCost>(&spec_)) {
      if (lin->weights.size() != n) throw std::invalid_argument("linear cost: weights do not cover the ground set");
      for (double w : lin->weights) {
        if (!(w > 0.0) || !std::isfinite(w)) {
          throw std::invalid_argument("linear cost: weights must be finite and > 0");
        }
      }
    } else if (auto* dia = std::get_if<DiameterCost>(&spec_)) {
      if (dia->metric.size() != n) throw std::invalid_argument("diameter cost: metric size mismatch");
    }
  }

  std::size_t size() const { return n_; }
  CostKind kind() const { return static_cast<CostKind>(spec_.index()); }
  const CostSpec& spec() const { return spec_; }

  double operator()(const Solution& s) const {
    switch (kind()) {
      case CostKind::kCardinality: return cardinality_eval(s);
      case CostKind::kLinear: return linear_eval(std::get<LinearCost>(spec_).weights, s);
      case CostKind::kDiameter: return diameter_eval(std::get<DiameterCost>(spec_).metric, s);
    }
    return 0.0;
  }

  /// Denominator of the cost-scaled gain: 1, w_e, or 1 for diameter (whose
  /// singleton cost is 0 and is never used for scaling).
  double singleton(ItemId e) const {
    switch (kind()) {
      case CostKind::kCardinality: return 1.0;
      case CostKind::kLinear: return std::get<LinearCost>(spec_).weights[e];
      case CostKind::kDiameter: return 1.0;
    }
    return 1.0;
  }

  const DistanceMatrix* metric() const {
    auto* dia = std::get_if<DiameterCost>(&spec_);
    return dia ? &dia->metric : nullptr;
  }

  const std::vector<double>* weights() const {
    auto* lin = std::get_if<LinearCost>(&spec_);
    return lin ? &lin->weights : nullptr;
  }

  CostState state() const;

 private:
  CostSpec spec_;
  std::size_t n_ = 0;
};

/// Incremental cost of one solution. Values are always canonical.
class CostState {
 public:
  explicit CostState(const Cost& c) : c_(&c), members_(c.size()) {}

  const Solution& solution() const { return members_; }
  double value() const { return value_; }

  /// c(S + e), canonical.
  double value_with(ItemId e) const {
    if (members_.contains(e)) return value_;
    switch (c_->kind()) {
      case CostKind::kCardinality: return static_cast<double>(members_.size() + 1);
      case CostKind::kLinear: return linear_eval(*c_->weights(), members_.with(e));
      case CostKind::kDiameter: return std::max(value_, max_distance_to_members(e));
    }
    return value_;
  }

  /// Exactly c(S + e) <= budget.
  bool fits(ItemId e, double budget) const {
    if (budget == std::numeric_limits<double>::infinity()) return true;
    if (c_->kind() != CostKind::kLinear) return value_with(e) <= budget;
    // The running sum and the canonical sum differ by at most a few ulps of
    // the total; only resolve exactly near the boundary.
    const double approx = value_ + (*c_->weights())[e];
    const double slack = 4e-16 * static_cast<double>(members_.size() + 2) * approx;
    if (approx < budget - slack) return true;
    if (approx > budget + slack) return false;
    return value_with(e) <= budget;
  }

  void add(ItemId e) {
    if (members_.contains(e)) return;
    const double next = value_with(e);
    members_.insert(e);
    value_ = next;
  }

 private:
  double max_distance_to_members(ItemId e) const {
    const DistanceMatrix& d = *c_->metric();
    double best = 0.0;
    members_.for_each([&](ItemId s) { best = std::max(best, d(e, s)); });
    return best;
  }

  const Cost* c_;
  Solution members_;
  double value_ = 0.0;
};

inline CostState Cost::state() const { return CostState(*this); }

}  // namespace pareto

#endif  // PARETO_COST_HPP
