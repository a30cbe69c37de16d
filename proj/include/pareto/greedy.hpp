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
 * @file greedy.hpp
 * @brief Cost-scaled greedy with seed enumeration, utility-target and
 *        cost-budget stopping, and prefix tracing.
 *
 * Selection rule: among items whose addition keeps c(S + e) <= B, pick the one
 * maximizing (f(S + e) - f(S)) / c({e}); ties go to the lowest index; stop
 * when no item has positive gain. With a finite target K the gain is taken on
 * min(f, K), the submodular-cover form of greedy, and growth stops as soon as
 * f(S) >= K.
 */

#ifndef PARETO_GREEDY_HPP
#define PARETO_GREEDY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "pareto/core.hpp"
#include "pareto/cost.hpp"
#include "pareto/utility.hpp"

namespace pareto {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr std::size_t kMaxSeedSize = 3;

struct GreedyConfig {
  double utility_target = kInf;  // K
  double cost_budget = kInf;     // B
  std::size_t seed_size = 1;     // tau

  bool target_mode() const { return utility_target != kInf; }

  void validate() const {
    if (utility_target == kInf && cost_budget == kInf) {
      throw std::invalid_argument("greedy: at least one of target and budget must be finite");
    }
    if (std::isnan(utility_target) || std::isnan(cost_budget)) {
      throw std::invalid_argument("greedy: NaN target or budget");
    }
    if (seed_size > kMaxSeedSize) throw std::invalid_argument("greedy: seed size above 3");
  }
};

/// Solutions recorded after the seed and after every insertion.
struct GreedyTrace {
  std::vector<ParetoPoint> prefixes;
};

struct GreedyResult {
  ParetoPoint best;
  bool target_reached = true;     // false when a finite target was out of reach
  bool no_feasible_item = false;  // no singleton fits the budget
  std::size_t seeds_tried = 0;
};

/**
 * Every seed with |S0| <= tau and c(S0) <= budget in lexicographic order,
 * starting with the empty set. Costs are monotone, so infeasible sets are not
 * extended.
 */
inline std::vector<Solution> enumerate_seeds(std::size_t n, std::size_t tau, const Cost& c,
                                             double budget) {
  std::vector<Solution> out;
  Solution empty(n);
  if (!(c(empty) <= budget)) return out;
  out.push_back(empty);
  auto extend = [&](auto&& self, const Solution& cur, ItemId start, std::size_t depth) -> void {
    for (std::size_t e = start; e < n; ++e) {
      Solution next = cur.with(static_cast<ItemId>(e));
      if (!(c(next) <= budget)) continue;
      out.push_back(next);
      if (depth + 1 < tau) self(self, next, static_cast<ItemId>(e + 1), depth + 1);
    }
  };
  if (tau > 0) extend(extend, empty, 0, 0);
  return out;
}

namespace detail {

/**
 * Grows `seed`; calls on_step(const UtilityState&, const CostState&) for the
 * seed and after every insertion.
 *
 * Each step adds the fitting item with the largest gain / c({e}) (ties to the
 * lowest index) and stops when that ratio is not positive. In target mode the
 * gain is truncated at K - f(S). Gains and costs are monotone, so scores are
 * kept in a max-heap and only the top entry is refreshed: a stale score is an
 * upper bound, and an item that no longer fits never fits again.
 */
template <typename OnStep>
void grow(const Utility& f, const Cost& c, const Solution& seed, double budget, double target,
          OnStep&& on_step) {
  const std::size_t n = f.size();
  UtilityState us = f.state(seed);
  CostState cs = c.state();
  seed.for_each([&](ItemId e) { cs.add(e); });
  on_step(us, cs);
  const bool target_mode = target != kInf;
  auto score = [&](ItemId e) {
    double g = us.gain(e);
    if (target_mode) g = std::min(g, target - us.value());
    return g / c.singleton(e);
  };
  struct Entry {
    double score;
    ItemId item;
  };
  auto lower = [](const Entry& a, const Entry& b) {
    return a.score < b.score || (a.score == b.score && a.item > b.item);
  };
  std::vector<Entry> heap;
  heap.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = static_cast<ItemId>(i);
    if (!us.solution().contains(e)) heap.push_back(Entry{score(e), e});
  }
  std::make_heap(heap.begin(), heap.end(), lower);
  while (!heap.empty() && !(target_mode && us.value() >= target)) {
    std::pop_heap(heap.begin(), heap.end(), lower);
    Entry top = heap.back();
    heap.pop_back();
    if (!cs.fits(top.item, budget)) continue;
    top.score = score(top.item);
    if (!heap.empty() && lower(top, heap.front())) {
      heap.push_back(top);
      std::push_heap(heap.begin(), heap.end(), lower);
      continue;
    }
    if (!(top.score > 0.0)) break;
    us.add(top.item);
    cs.add(top.item);
    on_step(us, cs);
  }
}

// Strict total order used to pick the best run over all seeds.
inline bool better_run(const ParetoPoint& a, const ParetoPoint& b, double target) {
  if (target != kInf) {
    const bool ra = a.utility >= target, rb = b.utility >= target;
    if (ra != rb) return ra;
    if (ra) {
      if (a.cost != b.cost) return a.cost < b.cost;
      if (a.utility != b.utility) return a.utility > b.utility;
      return a.solution < b.solution;
    }
  }
  if (a.utility != b.utility) return a.utility > b.utility;
  if (a.cost != b.cost) return a.cost < b.cost;
  return a.solution < b.solution;
}

}  // namespace detail

/**
 * Best greedy solution over all seeds of size <= tau.
 *
 * Budget mode (K infinite): highest utility wins, then lowest cost, then the
 * lexicographically smallest solution. Target mode: solutions reaching K win,
 * and among them the cheapest.
 */
inline GreedyResult greedy(const Utility& f, const Cost& c, const GreedyConfig& cfg) {
  cfg.validate();
  if (f.size() != c.size()) throw std::invalid_argument("greedy: utility/cost size mismatch");
  const std::size_t n = f.size();
  GreedyResult result;
  result.best = ParetoPoint{Solution(n), 0.0, 0.0};
  result.no_feasible_item = true;
  {
    CostState empty = c.state();
    for (std::size_t i = 0; i < n; ++i) {
      if (empty.fits(static_cast<ItemId>(i), cfg.cost_budget)) {
        result.no_feasible_item = false;
        break;
      }
    }
  }
  const auto seeds = enumerate_seeds(n, cfg.seed_size, c, cfg.cost_budget);
  result.seeds_tried = seeds.size();
  bool have = false;
  for (const auto& seed : seeds) {
    ParetoPoint last;
    detail::grow(f, c, seed, cfg.cost_budget, cfg.utility_target,
                 [&](const UtilityState& us, const CostState& cs) {
                   last = ParetoPoint{us.solution(), us.value(), cs.value()};
                 });
    if (!have || detail::better_run(last, result.best, cfg.utility_target)) {
      result.best = std::move(last);
      have = true;
    }
  }
  if (!have) result.best = ParetoPoint{Solution(n), f(Solution(n)), c(Solution(n))};
  result.target_reached = !cfg.target_mode() || result.best.utility >= cfg.utility_target;
  return result;
}

/**
 * Greedy from `seed` under `budget`, recording the seed and every prefix.
 * Throws if the seed itself exceeds the budget.
 */
inline GreedyTrace greedy_trace(const Utility& f, const Cost& c, double budget, const Solution& seed) {
  if (!(c(seed) <= budget)) throw std::invalid_argument("greedy_trace: seed exceeds budget");
  GreedyTrace trace;
  detail::grow(f, c, seed, budget, kInf, [&](const UtilityState& us, const CostState& cs) {
    trace.prefixes.push_back(ParetoPoint{us.solution(), us.value(), cs.value()});
  });
  return trace;
}

}  // namespace pareto

#endif  // PARETO_GREEDY_HPP
