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
 * @file runner.hpp
 * @brief Runs any algorithm by name on an Instance, with default grids, and
 *        checks a result against the exhaustive oracle.
 */

#ifndef PARETO_RUNNER_HPP
#define PARETO_RUNNER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pareto/baselines.hpp"
#include "pareto/core.hpp"
#include "pareto/frontiers.hpp"
#include "pareto/grids.hpp"
#include "pareto/instance.hpp"
#include "pareto/oracle.hpp"

namespace pareto {

inline const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names = {
      "c-greedy", "f-greedy",        "fc-greedy", "pareto-greedy",  "c-greedy-diameter",
      "topk",     "random",          "distance-greedy", "prune-graph", "top-degree"};
  return names;
}

/// The algorithm cannot run on this instance (cost kind or missing graph).
class IncompatibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunOptions {
  std::size_t tau = 1;
  double eps = 0.1;                        // log-grid ratio
  std::optional<double> delta;             // linear grids instead of log grids
  std::optional<double> budget;            // pareto-greedy; default c(V)
  std::optional<std::vector<double>> budgets;
  std::optional<std::vector<double>> targets;
  std::optional<std::vector<std::size_t>> k_grid;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

/// Throws IncompatibleError with an explanation when `algorithm` cannot run on `inst`.
inline void check_compatible(const Instance& inst, const std::string& algorithm) {
  if (std::find(algorithm_names().begin(), algorithm_names().end(), algorithm) == algorithm_names().end()) {
    throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
  }
  const bool diameter = inst.cost_kind() == CostKind::kDiameter;
  if ((algorithm == "c-greedy-diameter" || algorithm == "distance-greedy") && !diameter) {
    throw IncompatibleError(algorithm + " needs a diameter cost, instance has " + to_string(inst.cost_kind()));
  }
  if ((algorithm == "c-greedy" || algorithm == "f-greedy" || algorithm == "fc-greedy" ||
       algorithm == "pareto-greedy" || algorithm == "topk") &&
      diameter) {
    throw IncompatibleError(algorithm + " needs a cardinality or linear cost; use c-greedy-diameter for diameter costs");
  }
  if (algorithm == "top-degree" && !inst.graph && inst.utility_kind() != UtilityKind::kInfluence) {
    throw IncompatibleError("top-degree needs a graph; instance has none");
  }
}

inline bool is_compatible(const Instance& inst, const std::string& algorithm) {
  try {
    check_compatible(inst, algorithm);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

namespace detail {

inline double min_singleton_cost(const Cost& c) {
  double m = kInf;
  for (std::size_t i = 0; i < c.size(); ++i) m = std::min(m, c.singleton(static_cast<ItemId>(i)));
  return m;
}

inline double min_positive_singleton(const Utility& f) {
  double m = kInf;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double v = f.singleton(static_cast<ItemId>(i));
    if (v > 0.0) m = std::min(m, v);
  }
  return m;
}

}  // namespace detail

/// {0..n} for cardinality; otherwise 0 plus a log (or linear) grid over [c_min, c(V)].
inline std::vector<double> default_budgets(const Utility& f, const Cost& c, const RunOptions& o) {
  if (c.kind() == CostKind::kCardinality) return cardinality_budgets(c.size());
  if (!o.delta) return default_log_grids(f, c, o.eps).budgets;
  std::vector<double> g = {0.0};
  const double hi = c(Solution::full(c.size()));
  if (c.size() > 0 && hi > 0.0) {
    const double lo = detail::min_singleton_cost(c);
    const auto lin = build_linear_grid(lo, std::max(lo, hi), *o.delta);
    g.insert(g.end(), lin.begin(), lin.end());
  }
  return g;
}

/**
 * Every attainable value 0..f(V) for coverage (integer valued); otherwise 0
 * plus a log (or linear) grid over [smallest positive singleton, f(V)].
 */
inline std::vector<double> default_targets(const Utility& f, const RunOptions& o) {
  const double top = f(Solution::full(f.size()));
  if (f.kind() == UtilityKind::kCoverage) {
    std::vector<double> g;
    for (double k = 0.0; k <= top; k += 1.0) g.push_back(k);
    return g;
  }
  std::vector<double> g = {0.0};
  const double lo = detail::min_positive_singleton(f);
  if (lo == kInf) return g;
  const auto grid = o.delta ? build_linear_grid(lo, std::max(lo, top), *o.delta)
                            : build_log_grid(lo, std::max(lo, top), o.eps);
  g.insert(g.end(), grid.begin(), grid.end());
  return g;
}

inline std::vector<std::size_t> graph_degrees(const Instance& inst) {
  if (inst.graph) return degrees_from_edges(inst.n, *inst.graph);
  if (const auto* inf = std::get_if<InfluenceSpec>(&inst.utility)) return degrees_from_edges(inst.n, inf->edges);
  throw IncompatibleError("top-degree needs a graph; instance has none");
}

inline FrontierResult run_algorithm(const Instance& inst, const std::string& algorithm, const RunOptions& o) {
  check_compatible(inst, algorithm);
  const Utility f = inst.make_utility();
  const Cost c = inst.make_cost();
  auto budgets = [&] { return o.budgets ? *o.budgets : default_budgets(f, c, o); };
  auto targets = [&] { return o.targets ? *o.targets : default_targets(f, o); };
  if (algorithm == "c-greedy") return c_greedy(f, c, budgets(), o.tau, o.jobs);
  if (algorithm == "f-greedy") return f_greedy(f, c, targets(), o.tau, o.jobs);
  if (algorithm == "fc-greedy") return fc_greedy(f, c, targets(), budgets(), o.tau, o.jobs);
  if (algorithm == "pareto-greedy") {
    const double b = o.budget ? *o.budget : c(Solution::full(inst.n));
    return pareto_greedy(f, c, b, o.tau, o.jobs);
  }
  if (algorithm == "c-greedy-diameter") return c_greedy_diameter(f, *c.metric(), o.jobs);
  if (algorithm == "topk") return top_k(f, c, budgets());
  if (algorithm == "random") {
    std::vector<std::size_t> ks;
    if (o.k_grid) {
      ks = *o.k_grid;
    } else {
      for (std::size_t k = 0; k <= inst.n; ++k) ks.push_back(k);
    }
    return random_subsets(f, c, ks, o.seed);
  }
  if (algorithm == "distance-greedy") return distance_greedy(f, *c.metric());
  if (algorithm == "prune-graph") return prune_graph(f, c);
  return top_degree(f, c, graph_degrees(inst));
}

/**
 * Factors each algorithm is guaranteed to meet: C-Greedy (1-1/e, 1) under a
 * cardinality cost, F-Greedy (1, H_n), FC-Greedy ((1-1/e)(1-eps), (1+eps) H_n)
 * and C-Greedy-Diameter (1, 2). nullopt when there is no such guarantee.
 */
inline std::optional<ApproxParams> default_guarantee(const Instance& inst, const std::string& algorithm,
                                                     const RunOptions& o) {
  const double e1 = 1.0 - std::exp(-1.0);
  const double hn = harmonic_number(inst.n);
  if (algorithm == "c-greedy" && inst.cost_kind() == CostKind::kCardinality) return ApproxParams(e1, 1.0);
  if (algorithm == "f-greedy") return ApproxParams(1.0, std::max(1.0, hn));
  if (algorithm == "fc-greedy") return ApproxParams(e1 * (1.0 - o.eps), std::max(1.0, (1.0 + o.eps) * hn));
  if (algorithm == "c-greedy-diameter") return ApproxParams(1.0, 2.0);
  return std::nullopt;
}

struct OracleCheck {
  VerifyResult verdict;
  ApproxParams params;
  FrontierResult result;
  Frontier exact;
};

/// Runs `algorithm` and the exhaustive oracle and compares them at `params`.
/// Throws OracleLimitError when the instance is too large to enumerate.
inline OracleCheck oracle_check(const Instance& inst, const std::string& algorithm, const RunOptions& o,
                                const ApproxParams& params) {
  check_compatible(inst, algorithm);
  const Utility f = inst.make_utility();
  const Cost c = inst.make_cost();
  check_oracle_size(f, c, oracle_limit(c));
  OracleCheck out{VerifyResult{}, params, run_algorithm(inst, algorithm, o), Frontier{}};
  out.exact = exact_pareto(f, c);
  out.verdict = verify_approx_frontier(out.result.frontier, out.exact, params);
  return out;
}

}  // namespace pareto

#endif  // PARETO_RUNNER_HPP
