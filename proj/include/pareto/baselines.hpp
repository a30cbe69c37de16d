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
 * @file baselines.hpp
 * @brief Comparison heuristics. Each emits a fixed list of candidate
 *        solutions which is then Pareto-pruned like the main algorithms.
 */

#ifndef PARETO_BASELINES_HPP
#define PARETO_BASELINES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "pareto/core.hpp"
#include "pareto/cost.hpp"
#include "pareto/frontiers.hpp"
#include "pareto/rng.hpp"
#include "pareto/utility.hpp"

namespace pareto {

inline constexpr double kDistanceFloor = 1e-9;

namespace detail {

inline FrontierResult finish(std::string name, std::vector<ParetoPoint> candidates,
                             const Stopwatch& clock, nlohmann::json params = nlohmann::json::object()) {
  FrontierResult r;
  r.algorithm = std::move(name);
  r.candidate_count = candidates.size();
  r.frontier = pareto_prune(std::move(candidates));
  r.params = std::move(params);
  r.runtime_seconds = clock.seconds();
  return r;
}

}  // namespace detail

/**
 * Items ranked once by f({i}) / c({i}) (descending, ties by index). For each
 * budget the candidate is the longest prefix of that ranking that fits.
 */
inline FrontierResult top_k(const Utility& f, const Cost& c, const std::vector<double>& budgets) {
  detail::require_same_size(f, c);
  if (c.kind() == CostKind::kDiameter) throw std::invalid_argument("topk needs a cardinality or linear cost");
  detail::Stopwatch clock;
  const std::size_t n = f.size();
  std::vector<double> ratio(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = static_cast<ItemId>(i);
    ratio[i] = f.singleton(e) / c.singleton(e);
  }
  std::vector<ItemId> order(n);
  std::iota(order.begin(), order.end(), ItemId{0});
  std::stable_sort(order.begin(), order.end(), [&](ItemId a, ItemId b) { return ratio[a] > ratio[b]; });

  std::vector<ParetoPoint> prefixes;
  UtilityState us = f.state();
  CostState cs = c.state();
  prefixes.push_back(ParetoPoint{us.solution(), us.value(), cs.value()});
  for (ItemId e : order) {
    us.add(e);
    cs.add(e);
    prefixes.push_back(ParetoPoint{us.solution(), us.value(), cs.value()});
  }
  std::vector<ParetoPoint> candidates;
  for (double b : budgets) {
    std::size_t k = 0;
    while (k + 1 < prefixes.size() && prefixes[k + 1].cost <= b) ++k;
    if (prefixes[k].cost <= b) candidates.push_back(prefixes[k]);
  }
  return detail::finish("topk", std::move(candidates), clock,
                        {{"budgets", detail::grid_summary(budgets)}});
}

/// One uniform random k-subset per k in the grid; deterministic in rng_seed.
inline FrontierResult random_subsets(const Utility& f, const Cost& c, const std::vector<std::size_t>& k_grid,
                                     std::uint64_t rng_seed) {
  detail::require_same_size(f, c);
  detail::Stopwatch clock;
  const std::size_t n = f.size();
  std::vector<ParetoPoint> candidates;
  for (std::size_t i = 0; i < k_grid.size(); ++i) {
    if (k_grid[i] > n) throw std::invalid_argument("random: k exceeds n");
    Engine rng(derive_seed(rng_seed, "random-subset", i));
    Solution s(n);
    for (auto e : sample_without_replacement(rng, n, k_grid[i])) s.insert(e);
    candidates.push_back(ParetoPoint{s, f(s), c(s)});
  }
  return detail::finish("random", std::move(candidates), clock,
                        {{"seed", rng_seed}, {"k_count", k_grid.size()}});
}

/**
 * Starts from the best singleton, then repeatedly adds the item maximizing
 * gain / (average distance to the current set), distances floored at 1e-9.
 * Records every prefix including the empty set; cost is the diameter.
 */
inline FrontierResult distance_greedy(const Utility& f, const DistanceMatrix& metric) {
  const std::size_t n = f.size();
  if (metric.size() != n) throw std::invalid_argument("distance-greedy: metric size mismatch");
  detail::Stopwatch clock;
  UtilityState us = f.state();
  double diameter = 0.0;
  std::vector<double> dist_sum(n, 0.0);
  std::vector<ParetoPoint> candidates;
  candidates.push_back(ParetoPoint{us.solution(), us.value(), 0.0});
  for (std::size_t step = 0; step < n; ++step) {
    ItemId pick = 0;
    double best = -kInf;
    for (std::size_t i = 0; i < n; ++i) {
      const auto e = static_cast<ItemId>(i);
      if (us.solution().contains(e)) continue;
      double score = us.gain(e);
      if (step > 0) {
        const double avg = dist_sum[i] / static_cast<double>(step);
        score /= std::max(avg, kDistanceFloor);
      }
      if (score > best) {
        best = score;
        pick = e;
      }
    }
    us.solution().for_each([&](ItemId s) { diameter = std::max(diameter, metric(pick, s)); });
    us.add(pick);
    for (std::size_t i = 0; i < n; ++i) dist_sum[i] += metric(i, pick);
    candidates.push_back(ParetoPoint{us.solution(), us.value(), diameter});
  }
  return detail::finish("distance-greedy", std::move(candidates), clock);
}

/**
 * Starts from the full ground set and repeatedly deletes the item whose
 * removal loses the least utility (ties by index), recording every
 * intermediate set down to the empty one.
 */
inline FrontierResult prune_graph(const Utility& f, const Cost& c) {
  detail::require_same_size(f, c);
  detail::Stopwatch clock;
  const std::size_t n = f.size();
  UtilityState us = f.state(Solution::full(n));
  std::vector<ParetoPoint> candidates;
  candidates.push_back(ParetoPoint{us.solution(), us.value(), c(us.solution())});
  while (!us.solution().empty()) {
    ItemId pick = 0;
    double best = kInf;
    us.solution().for_each([&](ItemId e) {
      const double loss = us.value() - us.value_without(e);
      if (loss < best) {
        best = loss;
        pick = e;
      }
    });
    us.remove(pick);
    candidates.push_back(ParetoPoint{us.solution(), us.value(), c(us.solution())});
  }
  return detail::finish("prune-graph", std::move(candidates), clock);
}

/// Number of distinct neighbours of every node in an undirected view of the edges.
template <typename Edge>
std::vector<std::size_t> degrees_from_edges(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::set<std::uint32_t>> nbrs(n);
  for (const auto& e : edges) {
    const auto [a, b] = [&] {
      if constexpr (requires { e.from; }) return std::pair{e.from, e.to};
      else return std::pair{e.u, e.v};
    }();
    if (a == b) continue;
    nbrs[a].insert(b);
    nbrs[b].insert(a);
  }
  std::vector<std::size_t> deg(n);
  for (std::size_t i = 0; i < n; ++i) deg[i] = nbrs[i].size();
  return deg;
}

/// Items by decreasing degree (ties by index); every prefix is a candidate.
inline FrontierResult top_degree(const Utility& f, const Cost& c, const std::vector<std::size_t>& degree) {
  detail::require_same_size(f, c);
  const std::size_t n = f.size();
  if (degree.size() != n) throw std::invalid_argument("top-degree: degree list size mismatch");
  detail::Stopwatch clock;
  std::vector<ItemId> order(n);
  std::iota(order.begin(), order.end(), ItemId{0});
  std::stable_sort(order.begin(), order.end(), [&](ItemId a, ItemId b) { return degree[a] > degree[b]; });
  UtilityState us = f.state();
  std::vector<ParetoPoint> candidates;
  candidates.push_back(ParetoPoint{us.solution(), us.value(), c(us.solution())});
  CostState cs = c.state();
  for (ItemId e : order) {
    us.add(e);
    cs.add(e);
    candidates.push_back(ParetoPoint{us.solution(), us.value(), cs.value()});
  }
  return detail::finish("top-degree", std::move(candidates), clock);
}

}  // namespace pareto

#endif  // PARETO_BASELINES_HPP
