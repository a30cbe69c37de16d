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
 * @file core.hpp
 * @brief Solutions, (utility, cost) points, dominance and Pareto pruning.
 *
 * Utility is maximized and cost is minimized throughout the library.
 */

#ifndef PARETO_CORE_HPP
#define PARETO_CORE_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pareto {

/// Index of an item in the ground set, in [0, n).
using ItemId = std::uint32_t;

/**
 * A subset of the ground set {0, ..., n-1}, stored as a fixed-capacity bitset.
 *
 * Ordering (operator<) is lexicographic over the ascending member lists, so
 * {0,1} < {0,2} < {1}; the empty set is the smallest solution.
 */
class Solution {
 public:
  Solution() = default;
  explicit Solution(std::size_t universe_size)
      : universe_size_(universe_size), words_((universe_size + 63) / 64, 0) {}

  static Solution from_members(std::size_t universe_size,
                               const std::vector<ItemId>& members) {
    Solution s(universe_size);
    for (ItemId e : members) s.insert(e);
    return s;
  }

  static Solution full(std::size_t universe_size) {
    Solution s(universe_size);
    for (std::size_t i = 0; i < universe_size; ++i) s.insert(static_cast<ItemId>(i));
    return s;
  }

  std::size_t universe_size() const { return universe_size_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(ItemId e) const {
    return e < universe_size_ && ((words_[e >> 6] >> (e & 63)) & 1u) != 0;
  }

  /// Returns true if `e` was not already a member.
  bool insert(ItemId e) {
    check_index(e);
    std::uint64_t& w = words_[e >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (w & bit) return false;
    w |= bit;
    ++size_;
    return true;
  }

  /// Returns true if `e` was a member.
  bool erase(ItemId e) {
    check_index(e);
    std::uint64_t& w = words_[e >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (!(w & bit)) return false;
    w &= ~bit;
    --size_;
    return true;
  }

  Solution with(ItemId e) const {
    Solution s = *this;
    s.insert(e);
    return s;
  }

  Solution without(ItemId e) const {
    Solution s = *this;
    s.erase(e);
    return s;
  }

  /// Calls fn(ItemId) for each member in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<ItemId>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<ItemId> members() const {
    std::vector<ItemId> out;
    out.reserve(size_);
    for_each([&](ItemId e) { out.push_back(e); });
    return out;
  }

  bool is_subset_of(const Solution& other) const {
    if (other.universe_size_ != universe_size_) return false;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.universe_size_ == b.universe_size_ && a.words_ == b.words_;
  }

  friend bool operator<(const Solution& a, const Solution& b) {
    const auto ma = a.members();
    const auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
  }

 private:
  void check_index(ItemId e) const {
    if (e >= universe_size_) {
      throw std::out_of_range("item " + std::to_string(e) +
                              " outside ground set of size " +
                              std::to_string(universe_size_));
    }
  }

  std::size_t universe_size_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A solution annotated with its cached (utility, cost) pair.
struct ParetoPoint {
  Solution solution;
  double utility = 0.0;
  double cost = 0.0;
};

/// True iff p is at least as good as q in both objectives and strictly better
/// in one. Exact floating-point comparisons.
inline bool dominates(const ParetoPoint& p, const ParetoPoint& q) {
  return p.utility >= q.utility && p.cost <= q.cost &&
         (p.utility > q.utility || p.cost < q.cost);
}

/**
 * A dominance-free set of points sorted by strictly increasing cost (and
 * therefore strictly increasing utility).
 *
 * Only pareto_prune() and from_sorted() construct non-empty frontiers.
 */
class Frontier {
 public:
  Frontier() = default;

  /// Adopts points that already satisfy the frontier invariant; throws otherwise.
  static Frontier from_sorted(std::vector<ParetoPoint> points) {
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (!(points[i - 1].cost < points[i].cost) ||
          !(points[i - 1].utility < points[i].utility)) {
        throw std::invalid_argument(
            "frontier points must strictly increase in cost and utility");
      }
    }
    Frontier f;
    f.points_ = std::move(points);
    return f;
  }

  const std::vector<ParetoPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const ParetoPoint& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Highest-utility point with cost <= budget, if any.
  std::optional<ParetoPoint> best_within(double budget) const {
    auto it = std::upper_bound(
        points_.begin(), points_.end(), budget,
        [](double b, const ParetoPoint& p) { return b < p.cost; });
    if (it == points_.begin()) return std::nullopt;
    return *std::prev(it);
  }

 private:
  friend Frontier pareto_prune(std::vector<ParetoPoint> points);
  std::vector<ParetoPoint> points_;
};

/**
 * Indices of the non-dominated entries among parallel (utility, cost) arrays,
 * one per distinct pair, in increasing cost order. Among duplicates the
 * lowest index wins.
 */
inline std::vector<std::size_t> pareto_indices(const std::vector<double>& utility,
                                               const std::vector<double>& cost) {
  if (utility.size() != cost.size()) throw std::invalid_argument("pareto_indices: size mismatch");
  for (std::size_t i = 0; i < utility.size(); ++i) {
    if (!std::isfinite(utility[i]) || !std::isfinite(cost[i])) {
      throw std::invalid_argument("pareto_prune: non-finite utility or cost");
    }
  }
  std::vector<std::size_t> order(utility.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cost[a] != cost[b]) return cost[a] < cost[b];
    return utility[a] > utility[b];
  });
  std::vector<std::size_t> keep;
  for (std::size_t idx : order) {
    if (keep.empty() || utility[idx] > utility[keep.back()]) keep.push_back(idx);
  }
  return keep;
}

/**
 * Keeps exactly the non-dominated points, one per distinct (utility, cost)
 * pair, sorted by increasing cost. Among duplicates the earliest point in the
 * input wins.
 */
inline Frontier pareto_prune(std::vector<ParetoPoint> points) {
  std::vector<double> u(points.size()), c(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    u[i] = points[i].utility;
    c[i] = points[i].cost;
  }
  Frontier out;
  for (std::size_t idx : pareto_indices(u, c)) out.points_.push_back(std::move(points[idx]));
  return out;
}

inline Frontier pareto_prune(const Frontier& a, const Frontier& b) {
  std::vector<ParetoPoint> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return pareto_prune(std::move(all));
}

/// (alpha1, alpha2) of an approximate frontier: utility within alpha1,
/// cost within alpha2.
struct ApproxParams {
  double alpha1 = 1.0;
  double alpha2 = 1.0;

  ApproxParams() = default;
  ApproxParams(double a1, double a2) : alpha1(a1), alpha2(a2) {
    if (!(a1 > 0.0 && a1 <= 1.0) || !(a2 >= 1.0)) {
      throw std::invalid_argument("approximation factors need 0 < alpha1 <= 1 <= alpha2");
    }
  }
};

struct VerifyResult {
  bool ok = true;
  /// First exact point left uncovered, when !ok.
  std::optional<ParetoPoint> witness;
  explicit operator bool() const { return ok; }
};

inline constexpr double kVerifyRelTol = 1e-9;

/// Checks that every exact point (f*, c*) is covered by some approximate
/// point (f, c) with f >= alpha1 f* and c <= alpha2 c*, both up to a 1e-9
/// relative tolerance.
inline VerifyResult verify_approx_frontier(const Frontier& approx, const Frontier& exact,
                                           const ApproxParams& params) {
  for (const auto& star : exact) {
    const double need_f = params.alpha1 * star.utility;
    const double allow_c = params.alpha2 * star.cost;
    const double f_floor = need_f - kVerifyRelTol * std::abs(need_f);
    const double c_ceil = allow_c + kVerifyRelTol * std::abs(allow_c);
    const bool covered = std::any_of(approx.begin(), approx.end(), [&](const ParetoPoint& p) {
      return p.utility >= f_floor && p.cost <= c_ceil;
    });
    if (!covered) return VerifyResult{false, star};
  }
  return VerifyResult{true, std::nullopt};
}

/// H_n = 1 + 1/2 + ... + 1/n.
inline double harmonic_number(std::size_t n) {
  double h = 0.0;
  for (std::size_t i = 1; i <= n; ++i) h += 1.0 / static_cast<double>(i);
  return h;
}

}  // namespace pareto

#endif  // PARETO_CORE_HPP
