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
 * @file generators.hpp
 * @brief Seeded synthetic instances in the style of the team-formation,
 *        influence and restaurant-selection datasets.
 *
 * Every generator is a pure function of its arguments; all draws come from
 * sub-seeds of `rng_seed`.
 */

#ifndef PARETO_GENERATORS_HPP
#define PARETO_GENERATORS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pareto/cost.hpp"
#include "pareto/instance.hpp"
#include "pareto/rng.hpp"
#include "pareto/utility.hpp"

namespace pareto {

/// Linear weights below this fraction of the mean weight are raised to it.
inline constexpr double kWeightFloorFraction = 1e-3;

/// |A ∩ B| / |A ∪ B| distance 1 - J over sorted lists; 0 for two empty sets.
inline double jaccard_distance(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::size_t common = 0, i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++common;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  const std::size_t uni = a.size() + b.size() - common;
  if (uni == 0) return 0.0;
  return 1.0 - static_cast<double>(common) / static_cast<double>(uni);
}

inline void floor_weights(std::vector<double>& w) {
  if (w.empty()) return;
  double mean = 0.0;
  for (double x : w) mean += x;
  mean /= static_cast<double>(w.size());
  const double floor = mean > 0.0 ? kWeightFloorFraction * mean : 1.0;
  for (double& x : w) x = std::max(x, floor);
}

struct CoverageParams {
  std::size_t n_experts = 50;
  std::size_t n_skills = 40;
  std::size_t min_skills = 2;  // per expert, >= 2
  std::size_t max_skills = 6;
  std::size_t task_size = 15;
  CostKind cost = CostKind::kLinear;
  std::uint64_t rng_seed = 0;
};

/**
 * Experts with random skill sets of size in [min_skills, max_skills], a random
 * task, hiring costs uniform in [5, 100] and Jaccard distances between skill
 * sets for the diameter cost.
 */
inline Instance gen_coverage(const CoverageParams& p) {
  if (p.min_skills < 2 || p.min_skills > p.max_skills || p.max_skills > p.n_skills) {
    throw std::invalid_argument("coverage: need 2 <= min_skills <= max_skills <= n_skills");
  }
  if (p.task_size > p.n_skills) throw std::invalid_argument("coverage: task larger than the skill universe");
  Engine rng(derive_seed(p.rng_seed, "coverage"));
  CoverageSpec spec;
  for (std::size_t i = 0; i < p.n_experts; ++i) {
    const auto k = static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(p.min_skills),
                                                        static_cast<std::int64_t>(p.max_skills)));
    spec.skills.push_back(sample_without_replacement(rng, p.n_skills, k));
  }
  spec.task = sample_without_replacement(rng, p.n_skills, p.task_size);

  Instance inst;
  inst.n = p.n_experts;
  switch (p.cost) {
    case CostKind::kCardinality: inst.cost = CardinalityCost{}; break;
    case CostKind::kLinear: {
      Engine wrng(derive_seed(p.rng_seed, "coverage-weights"));
      std::vector<double> w(p.n_experts);
      for (double& x : w) x = uniform_real(wrng, 5.0, 100.0);
      inst.cost = LinearCost{std::move(w)};
      break;
    }
    case CostKind::kDiameter: {
      SquareMatrix d(p.n_experts);
      for (std::size_t i = 0; i < p.n_experts; ++i)
        for (std::size_t j = i + 1; j < p.n_experts; ++j)
          d(i, j) = d(j, i) = jaccard_distance(spec.skills[i], spec.skills[j]);
      inst.cost = DiameterCost{DistanceMatrix(std::move(d))};
      break;
    }
  }
  inst.utility = std::move(spec);
  inst.provenance = {{"generator", "coverage"},
                     {"seed", p.rng_seed},
                     {"n_experts", p.n_experts},
                     {"n_skills", p.n_skills},
                     {"skills_per_expert", {p.min_skills, p.max_skills}},
                     {"task_size", p.task_size},
                     {"cost", to_string(p.cost)}};
  return inst;
}

/// Collaboration strength D on an undirected edge.
struct CollaborationCount {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::uint32_t count = 0;
};

/// Edge weight exp(-decay * D) per collaboration record; decay defaults to 1/10.
inline std::vector<WeightedEdge> gen_collaboration_graph(std::size_t n, const std::vector<CollaborationCount>& counts,
                                                         double decay = 0.1) {
  std::vector<WeightedEdge> out;
  out.reserve(counts.size());
  for (const auto& c : counts) {
    if (c.u >= n || c.v >= n) throw std::invalid_argument("collaboration: endpoint out of range");
    out.push_back(WeightedEdge{c.u, c.v, std::exp(-decay * static_cast<double>(c.count))});
  }
  return out;
}

struct InfluenceParams {
  std::size_t n = 100;
  double edge_density = 0.05;  // probability of each undirected pair
  double probability = 0.01;   // activation probability of every arc
  double alpha = 0.1;          // scale of exp(-alpha * shared neighbours)
  std::size_t num_samples = 200;
  CostKind cost = CostKind::kLinear;
  std::uint64_t rng_seed = 0;
};

/**
 * Erdos-Renyi graph; each undirected edge becomes two arcs with the same
 * activation probability. Linear cost is max(degree, 1); the diameter cost is
 * the shortest-path metric under edge lengths exp(-alpha |N(u) ∩ N(v)|).
 */
inline Instance gen_influence(const InfluenceParams& p) {
  if (!(p.edge_density > 0.0 && p.edge_density <= 1.0)) throw std::invalid_argument("influence: density must be in (0,1]");
  if (!(p.probability >= 0.0 && p.probability <= 1.0)) throw std::invalid_argument("influence: p must be in [0,1]");
  if (!(p.alpha >= 0.0)) throw std::invalid_argument("influence: alpha must be >= 0");
  const std::size_t n = p.n;
  Engine rng(derive_seed(p.rng_seed, "influence-graph"));
  std::vector<GraphEdge> graph;
  std::vector<std::vector<std::uint32_t>> nbrs(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (uniform_unit(rng) < p.edge_density) {
        graph.push_back(GraphEdge{u, v});
        nbrs[u].push_back(v);
        nbrs[v].push_back(u);
      }
    }
  }
  InfluenceSpec spec;
  spec.n = n;
  spec.num_samples = p.num_samples;
  spec.rng_seed = derive_seed(p.rng_seed, "influence-worlds");
  for (const auto& e : graph) {
    spec.edges.push_back(InfluenceEdge{e.u, e.v, p.probability});
    spec.edges.push_back(InfluenceEdge{e.v, e.u, p.probability});
  }

  Instance inst;
  inst.n = n;
  switch (p.cost) {
    case CostKind::kCardinality: inst.cost = CardinalityCost{}; break;
    case CostKind::kLinear: {
      std::vector<double> w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = std::max<double>(static_cast<double>(nbrs[i].size()), 1.0);
      inst.cost = LinearCost{std::move(w)};
      break;
    }
    case CostKind::kDiameter: {
      for (auto& l : nbrs) std::sort(l.begin(), l.end());
      std::vector<WeightedEdge> lengths;
      for (const auto& e : graph) {
        std::vector<std::uint32_t> common;
        std::set_intersection(nbrs[e.u].begin(), nbrs[e.u].end(), nbrs[e.v].begin(), nbrs[e.v].end(),
                              std::back_inserter(common));
        lengths.push_back(WeightedEdge{e.u, e.v, std::exp(-p.alpha * static_cast<double>(common.size()))});
      }
      inst.cost = DiameterCost{shortest_path_metric(n, lengths)};
      inst.metric_edges = std::move(lengths);
      break;
    }
  }
  inst.utility = std::move(spec);
  inst.graph = std::move(graph);
  inst.provenance = {{"generator", "influence"},      {"seed", p.rng_seed},
                     {"n", n},                         {"edge_density", p.edge_density},
                     {"probability", p.probability},   {"alpha", p.alpha},
                     {"num_samples", p.num_samples},   {"cost", to_string(p.cost)}};
  return inst;
}

struct FacilityParams {
  std::size_t n = 100;
  double box = 10.0;  // points are uniform in [0, box]^2
  CostKind cost = CostKind::kLinear;
  std::uint64_t rng_seed = 0;
};

/**
 * Uniform points in a square. kappa is the Euclidean distance and
 * M = exp(-kappa). Linear cost is the distance to the square's center
 * (floored at 1e-3 of the mean); the diameter cost uses kappa. The instance
 * also carries a proximity graph joining points closer than
 * box * sqrt(5 / (pi n)), about five neighbours per point on average.
 */
inline Instance gen_facility(const FacilityParams& p) {
  if (p.n == 0) throw std::invalid_argument("facility: n must be >= 1");
  if (!(p.box > 0.0) || !std::isfinite(p.box)) throw std::invalid_argument("facility: box must be > 0");
  const std::size_t n = p.n;
  Engine rng(derive_seed(p.rng_seed, "facility-points"));
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = uniform_real(rng, 0.0, p.box);
    y[i] = uniform_real(rng, 0.0, p.box);
  }
  SquareMatrix kappa(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) kappa(i, j) = kappa(j, i) = std::hypot(x[i] - x[j], y[i] - y[j]);

  Instance inst;
  inst.n = n;
  inst.utility = similarity_from_distances(kappa);
  switch (p.cost) {
    case CostKind::kCardinality: inst.cost = CardinalityCost{}; break;
    case CostKind::kLinear: {
      const double c = p.box / 2.0;
      std::vector<double> w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = std::hypot(x[i] - c, y[i] - c);
      floor_weights(w);
      inst.cost = LinearCost{std::move(w)};
      break;
    }
    case CostKind::kDiameter: inst.cost = DiameterCost{DistanceMatrix(kappa)}; break;
  }
  const double radius = p.box * std::sqrt(5.0 / (3.14159265358979323846 * static_cast<double>(n)));
  std::vector<GraphEdge> graph;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (kappa(i, j) < radius) graph.push_back(GraphEdge{i, j});
  inst.graph = std::move(graph);
  inst.provenance = {{"generator", "facility"}, {"seed", p.rng_seed}, {"n", n},
                     {"box", p.box},            {"cost", to_string(p.cost)}};
  return inst;
}

}  // namespace pareto

#endif  // PARETO_GENERATORS_HPP
