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
 * @file frontiers.hpp
 * @brief Approximate Pareto frontier algorithms.
 *
 *  - c_greedy:          one budgeted greedy run per cost threshold.
 *  - f_greedy:          one submodular-cover greedy run per utility target.
 *  - fc_greedy:         union of the two over a pair of grids.
 *  - pareto_greedy:     all greedy prefixes from every small seed, one run per
 *                       seed under the largest budget of interest.
 *  - c_greedy_diameter: nested metric balls around every center.
 *
 * Each collects candidates in a fixed order and Pareto-prunes them, so the
 * output does not depend on `jobs`.
 */

#ifndef PARETO_FRONTIERS_HPP
#define PARETO_FRONTIERS_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pareto/core.hpp"
#include "pareto/cost.hpp"
#include "pareto/greedy.hpp"
#include "pareto/grids.hpp"
#include "pareto/parallel.hpp"
#include "pareto/utility.hpp"

namespace pareto {

struct FrontierResult {
  Frontier frontier;
  std::string algorithm;
  std::size_t candidate_count = 0;
  double runtime_seconds = 0.0;
  nlohmann::json params = nlohmann::json::object();
  std::size_t unreachable_targets = 0;  // f_greedy / fc_greedy only
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline void require_same_size(const Utility& f, const Cost& c) {
  if (f.size() != c.size()) throw std::invalid_argument("utility and cost disagree on n");
}

inline std::vector<ParetoPoint> c_greedy_candidates(const Utility& f, const Cost& c,
                                                    const std::vector<double>& budgets,
                                                    std::size_t tau, std::size_t jobs) {
  if (budgets.empty()) throw std::invalid_argument("c_greedy: empty budget list");
  for (double b : budgets) {
    if (!(b >= 0.0)) throw std::invalid_argument("c_greedy: budgets must be >= 0");
  }
  if (c.kind() == CostKind::kCardinality && tau == 0) {
    // Prefix i of one unbudgeted run is the greedy answer for budget i.
    const double top = std::min(*std::max_element(budgets.begin(), budgets.end()),
                                static_cast<double>(f.size()));
    const auto trace = greedy_trace(f, c, top, Solution(f.size()));
    std::vector<ParetoPoint> out;
    out.reserve(budgets.size());
    for (double b : budgets) {
      const auto k = static_cast<std::size_t>(std::floor(std::min(b, top)));
      out.push_back(trace.prefixes[std::min(k, trace.prefixes.size() - 1)]);
    }
    return out;
  }
  if (tau > kMaxSeedSize) throw std::invalid_argument("c_greedy: seed size above 3");
  for (double b : budgets) {
    if (b == kInf) throw std::invalid_argument("c_greedy: budgets must be finite");
  }
  // Same result as greedy(K = inf, B, tau) per budget. A seed's unbudgeted run
  // is computed once: under any budget covering its final cost every item it
  // picks still fits, so the budgeted run makes the same choices.
  const double top = *std::max_element(budgets.begin(), budgets.end());
  const auto seeds = enumerate_seeds(f.size(), tau, c, top);
  std::vector<double> seed_cost(seeds.size());
  for (std::size_t s = 0; s < seeds.size(); ++s) seed_cost[s] = c(seeds[s]);
  auto run = [&](const Solution& seed, double budget) {
    ParetoPoint last;
    grow(f, c, seed, budget, kInf, [&](const UtilityState& us, const CostState& cs) {
      last = ParetoPoint{us.solution(), us.value(), cs.value()};
    });
    return last;
  };
  const auto unbudgeted = parallel_map<ParetoPoint>(seeds.size(), jobs, [&](std::size_t s) {
    return run(seeds[s], kInf);
  });
  return parallel_map<ParetoPoint>(budgets.size(), jobs, [&](std::size_t i) {
    const double b = budgets[i];
    ParetoPoint best;
    bool have = false;
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      if (!(seed_cost[s] <= b)) continue;
      ParetoPoint last = unbudgeted[s].cost <= b ? unbudgeted[s] : run(seeds[s], b);
      if (!have || better_run(last, best, kInf)) {
        best = std::move(last);
        have = true;
      }
    }
    return best;
  });
}

inline std::vector<ParetoPoint> f_greedy_candidates(const Utility& f, const Cost& c,
                                                    const std::vector<double>& targets,
                                                    std::size_t tau, std::size_t jobs,
                                                    std::size_t* unreachable) {
  if (targets.empty()) throw std::invalid_argument("f_greedy: empty target list");
  struct Run {
    ParetoPoint point;
    bool reached = true;
  };
  auto runs = parallel_map<Run>(targets.size(), jobs, [&](std::size_t i) {
    GreedyConfig cfg;
    cfg.utility_target = targets[i];
    cfg.seed_size = tau;
    auto r = greedy(f, c, cfg);
    return Run{std::move(r.best), r.target_reached};
  });
  std::vector<ParetoPoint> out;
  out.reserve(runs.size());
  for (auto& r : runs) {
    if (!r.reached && unreachable) ++*unreachable;
    out.push_back(std::move(r.point));
  }
  return out;
}

inline nlohmann::json grid_summary(const std::vector<double>& g) {
  return {{"count", g.size()},
          {"min", g.empty() ? 0.0 : g.front()},
          {"max", g.empty() ? 0.0 : g.back()}};
}

}  // namespace detail

/// One greedy(K = inf, B, tau) candidate per threshold B, then pruned.
inline FrontierResult c_greedy(const Utility& f, const Cost& c, const std::vector<double>& budgets,
                               std::size_t tau, std::size_t jobs = 1) {
  detail::require_same_size(f, c);
  detail::Stopwatch clock;
  auto candidates = detail::c_greedy_candidates(f, c, budgets, tau, jobs);
  FrontierResult r;
  r.algorithm = "c-greedy";
  r.candidate_count = candidates.size();
  r.frontier = pareto_prune(std::move(candidates));
  r.params = {{"tau", tau}, {"budgets", detail::grid_summary(budgets)}};
  r.runtime_seconds = clock.seconds();
  return r;
}

/// Thresholds {0, 1, ..., n} for a cardinality cost.
inline std::vector<double> cardinality_budgets(std::size_t n) {
  std::vector<double> b(n + 1);
  std::iota(b.begin(), b.end(), 0.0);
  return b;
}

/**
 * One greedy(K, B = inf, tau) candidate per target K, then pruned. Targets
 * above what greedy can reach yield its best endpoint and are counted in
 * unreachable_targets.
 */
inline FrontierResult f_greedy(const Utility& f, const Cost& c, const std::vector<double>& targets,
                               std::size_t tau, std::size_t jobs = 1) {
  detail::require_same_size(f, c);
  detail::Stopwatch clock;
  FrontierResult r;
  auto candidates = detail::f_greedy_candidates(f, c, targets, tau, jobs, &r.unreachable_targets);
  r.algorithm = "f-greedy";
  r.candidate_count = candidates.size();
  r.frontier = pareto_prune(std::move(candidates));
  r.params = {{"tau", tau},
              {"targets", detail::grid_summary(targets)},
              {"unreachable_targets", r.unreachable_targets}};
  r.runtime_seconds = clock.seconds();
  return r;
}

/// Union of the c_greedy and f_greedy candidates, pruned.
inline FrontierResult fc_greedy(const Utility& f, const Cost& c, const std::vector<double>& targets,
                                const std::vector<double>& budgets, std::size_t tau,
                                std::size_t jobs = 1) {
  detail::require_same_size(f, c);
  detail::Stopwatch clock;
  FrontierResult r;
  auto candidates = detail::c_greedy_candidates(f, c, budgets, tau, jobs);
  auto by_target = detail::f_greedy_candidates(f, c, targets, tau, jobs, &r.unreachable_targets);
  candidates.insert(candidates.end(), std::make_move_iterator(by_target.begin()),
                    std::make_move_iterator(by_target.end()));
  r.algorithm = "fc-greedy";
  r.candidate_count = candidates.size();
  r.frontier = pareto_prune(std::move(candidates));
  r.params = {{"tau", tau},
              {"targets", detail::grid_summary(targets)},
              {"budgets", detail::grid_summary(budgets)},
              {"unreachable_targets", r.unreachable_targets}};
  r.runtime_seconds = clock.seconds();
  return r;
}

struct LogGrids {
  std::vector<double> targets;
  std::vector<double> budgets;
};

/**
 * Logarithmic eps-grids spanning the instance's ranges. The utility grid runs
 * from the smallest positive singleton utility to f(V); the cost grid from
 * the smallest singleton cost to c(V) and additionally contains 0 so the
 * empty solution is always a candidate.
 */
inline LogGrids default_log_grids(const Utility& f, const Cost& c, double eps) {
  detail::require_same_size(f, c);
  const std::size_t n = f.size();
  const Solution all = Solution::full(n);
  double f_min = kInf, c_min = kInf;
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = static_cast<ItemId>(i);
    const double fe = f.singleton(e);
    if (fe > 0.0) f_min = std::min(f_min, fe);
    c_min = std::min(c_min, c.singleton(e));
  }
  const double f_max = f(all), c_max = c(all);
  LogGrids g;
  if (f_min == kInf || !(f_max > 0.0)) {
    g.targets = {0.0};
  } else {
    g.targets = build_log_grid(f_min, std::max(f_min, f_max), eps);
  }
  g.budgets = {0.0};
  if (n > 0 && c_max > 0.0) {
    const auto b = build_log_grid(c_min, std::max(c_min, c_max), eps);
    g.budgets.insert(g.budgets.end(), b.begin(), b.end());
  }
  return g;
}

/**
 * Grows every feasible seed of size <= tau under `max_budget` and keeps every
 * prefix as a candidate.
 */
inline FrontierResult pareto_greedy(const Utility& f, const Cost& c, double max_budget,
                                    std::size_t tau, std::size_t jobs = 1) {
  detail::require_same_size(f, c);
  if (!(max_budget > 0.0)) throw std::invalid_argument("pareto_greedy: budget must be > 0");
  if (tau > kMaxSeedSize) throw std::invalid_argument("pareto_greedy: seed size above 3");
  detail::Stopwatch clock;
  const auto seeds = enumerate_seeds(f.size(), tau, c, max_budget);
  auto traces = detail::parallel_map<GreedyTrace>(seeds.size(), jobs, [&](std::size_t i) {
    return greedy_trace(f, c, max_budget, seeds[i]);
  });
  std::vector<ParetoPoint> candidates;
  for (auto& t : traces) {
    candidates.insert(candidates.end(), std::make_move_iterator(t.prefixes.begin()),
                      std::make_move_iterator(t.prefixes.end()));
  }
  FrontierResult r;
  r.algorithm = "pareto-greedy";
  r.candidate_count = candidates.size();
  r.frontier = pareto_prune(std::move(candidates));
  r.params = {{"tau", tau}, {"budget", max_budget}, {"seeds", seeds.size()}};
  r.runtime_seconds = clock.seconds();
  return r;
}

/**
 * For each center v, inserts items by increasing d(v, .) (ties by index) and
 * records (f(S), diam(S)) after every insertion: n^2 candidates. Every
 * recorded prefix that ends a run of tied distances is a metric ball.
 */
inline FrontierResult c_greedy_diameter(const Utility& f, const DistanceMatrix& metric,
                                        std::size_t jobs = 1) {
  const std::size_t n = f.size();
  if (metric.size() != n) throw std::invalid_argument("c_greedy_diameter: metric size mismatch");
  detail::Stopwatch clock;
  // Once a prefix spans the widest pair, later insertions cannot grow its diameter.
  double widest = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = metric.matrix().row(i);
    widest = std::max(widest, *std::max_element(row, row + n));
  }
  struct CenterRun {
    std::vector<ItemId> order;
    // Prefix lengths that survive pruning within this center, with their values.
    std::vector<std::size_t> length;
    std::vector<double> utility;
    std::vector<double> cost;
  };
  auto runs = detail::parallel_map<CenterRun>(n, jobs, [&](std::size_t v) {
    CenterRun run;
    run.order.resize(n);
    std::iota(run.order.begin(), run.order.end(), ItemId{0});
    const double* from_v = metric.matrix().row(v);
    std::stable_sort(run.order.begin(), run.order.end(),
                     [&](ItemId a, ItemId b) { return from_v[a] < from_v[b]; });
    UtilityState us = f.state();
    double diameter = 0.0;
    // far[w] = max distance from w to the items inserted so far.
    std::vector<double> far(n, 0.0);
    std::vector<double> utility(n), cost(n);
    for (std::size_t k = 0; k < n; ++k) {
      const ItemId u = run.order[k];
      diameter = std::max(diameter, far[u]);
      if (diameter < widest) {
        const double* row = metric.matrix().row(u);
        for (std::size_t w = 0; w < n; ++w) far[w] = std::max(far[w], row[w]);
      }
      us.add(u);
      utility[k] = us.value();
      cost[k] = diameter;
    }
    // Both columns are non-decreasing in k. Within a block of equal cost keep
    // the first prefix reaching the block's top utility, the one a global
    // stable prune would keep, and only if it improves on the last kept one.
    for (std::size_t a = 0; a < n;) {
      std::size_t b = a;
      while (b + 1 < n && cost[b + 1] == cost[a]) ++b;
      std::size_t k = a;
      while (utility[k] != utility[b]) ++k;
      if (run.utility.empty() || utility[k] > run.utility.back()) {
        run.length.push_back(k + 1);
        run.utility.push_back(utility[k]);
        run.cost.push_back(cost[k]);
      }
      a = b + 1;
    }
    return run;
  });
  std::vector<double> utility, cost;
  std::vector<std::pair<std::size_t, std::size_t>> origin;  // (center, prefix length)
  for (std::size_t v = 0; v < n; ++v) {
    const auto& run = runs[v];
    utility.insert(utility.end(), run.utility.begin(), run.utility.end());
    cost.insert(cost.end(), run.cost.begin(), run.cost.end());
    for (std::size_t len : run.length) origin.emplace_back(v, len);
  }
  std::vector<ParetoPoint> kept;
  for (std::size_t idx : pareto_indices(utility, cost)) {
    const auto [v, len] = origin[idx];
    Solution s(n);
    for (std::size_t j = 0; j < len; ++j) s.insert(runs[v].order[j]);
    kept.push_back(ParetoPoint{std::move(s), utility[idx], cost[idx]});
  }
  FrontierResult r;
  r.algorithm = "c-greedy-diameter";
  r.candidate_count = n * n;
  r.frontier = Frontier::from_sorted(std::move(kept));
  r.params = nlohmann::json::object();
  r.runtime_seconds = clock.seconds();
  return r;
}

}  // namespace pareto

#endif  // PARETO_FRONTIERS_HPP
