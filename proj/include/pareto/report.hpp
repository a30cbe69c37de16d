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
 * @file report.hpp
 * @brief Frontier metrics and the mean-frontier curve across samples.
 *
 * Each sample's frontier is linearly interpolated onto a shared cost grid;
 * the curve is the pointwise mean and population standard deviation.
 */

#ifndef PARETO_REPORT_HPP
#define PARETO_REPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pareto/core.hpp"
#include "pareto/frontiers.hpp"
#include "pareto/io.hpp"

namespace pareto {

inline std::size_t frontier_size(const FrontierResult& r) { return r.frontier.size(); }

struct Interpolation {
  std::vector<double> utility;
  bool empty_frontier = false;  // utility is all zeros in that case
};

/**
 * Piecewise-linear utility through the frontier points at each grid cost,
 * held flat outside the frontier's cost range.
 */
inline Interpolation interpolate_frontier(const Frontier& f, const std::vector<double>& grid) {
  if (!std::is_sorted(grid.begin(), grid.end())) throw std::invalid_argument("cost grid must be ascending");
  Interpolation out;
  out.utility.assign(grid.size(), 0.0);
  if (f.empty()) {
    out.empty_frontier = true;
    return out;
  }
  const auto& p = f.points();
  std::size_t seg = 0;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double c = grid[g];
    if (c <= p.front().cost) {
      out.utility[g] = p.front().utility;
    } else if (c >= p.back().cost) {
      out.utility[g] = p.back().utility;
    } else {
      while (p[seg + 1].cost <= c) ++seg;
      const double t = (c - p[seg].cost) / (p[seg + 1].cost - p[seg].cost);
      out.utility[g] = p[seg].utility + t * (p[seg + 1].utility - p[seg].utility);
    }
  }
  return out;
}

struct AggregateCurve {
  std::vector<double> cost_grid;
  std::vector<double> mean_utility;
  std::vector<double> std_utility;
  double mean_frontier_size = 0.0;
  std::vector<std::size_t> marker_positions;  // indices into cost_grid
};

/// min(ceil(mean_size), grid_len) grid indices spread evenly from first to last.
inline std::vector<std::size_t> marker_positions(double mean_size, std::size_t grid_len) {
  const auto m = std::min(static_cast<std::size_t>(std::ceil(mean_size)), grid_len);
  std::vector<std::size_t> out;
  if (m == 0) return out;
  if (m == 1) return {0};
  for (std::size_t k = 0; k < m; ++k) {
    out.push_back((2 * k * (grid_len - 1) + (m - 1)) / (2 * (m - 1)));
  }
  return out;
}

/**
 * Pointwise mean and population standard deviation of the interpolated
 * frontiers. Values at each grid point are summed in sorted order, so the
 * result does not depend on the order of `frontiers`.
 */
inline AggregateCurve aggregate(const std::vector<Frontier>& frontiers, const std::vector<double>& grid) {
  if (frontiers.empty()) throw std::invalid_argument("aggregate: need at least one frontier");
  const std::size_t m = frontiers.size();
  std::vector<std::vector<double>> rows;
  rows.reserve(m);
  double size_sum = 0.0;
  for (const auto& f : frontiers) {
    rows.push_back(interpolate_frontier(f, grid).utility);
    size_sum += static_cast<double>(f.size());
  }
  AggregateCurve out;
  out.cost_grid = grid;
  out.mean_utility.resize(grid.size());
  out.std_utility.resize(grid.size());
  std::vector<double> col(m);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    for (std::size_t s = 0; s < m; ++s) col[s] = rows[s][g];
    std::sort(col.begin(), col.end());
    double sum = 0.0;
    for (double v : col) sum += v;
    const double mean = sum / static_cast<double>(m);
    double sq = 0.0;
    for (double v : col) sq += (v - mean) * (v - mean);
    out.mean_utility[g] = mean;
    out.std_utility[g] = std::sqrt(sq / static_cast<double>(m));
  }
  out.mean_frontier_size = size_sum / static_cast<double>(m);
  out.marker_positions = marker_positions(out.mean_frontier_size, grid.size());
  return out;
}

inline AggregateCurve aggregate(const std::vector<FrontierResult>& results, const std::vector<double>& grid) {
  std::vector<Frontier> fs;
  fs.reserve(results.size());
  for (const auto& r : results) fs.push_back(r.frontier);
  return aggregate(fs, grid);
}

/// `points` evenly spaced costs from 0 to the largest frontier cost present.
inline std::vector<double> uniform_cost_grid(const std::vector<Frontier>& frontiers, std::size_t points) {
  if (points < 2) throw std::invalid_argument("cost grid needs at least 2 points");
  double hi = 0.0;
  for (const auto& f : frontiers)
    if (!f.empty()) hi = std::max(hi, f.points().back().cost);
  std::vector<double> g(points);
  for (std::size_t k = 0; k < points; ++k) {
    g[k] = hi * static_cast<double>(k) / static_cast<double>(points - 1);
  }
  return g;
}

/// CSV with header `grid_cost,mean_utility,std_utility`.
inline std::string curve_to_csv(const AggregateCurve& c) {
  std::string out = "grid_cost,mean_utility,std_utility\n";
  for (std::size_t g = 0; g < c.cost_grid.size(); ++g) {
    out += format_double(c.cost_grid[g]);
    out += ',';
    out += format_double(c.mean_utility[g]);
    out += ',';
    out += format_double(c.std_utility[g]);
    out += '\n';
  }
  return out;
}

/// The curve plus the raw per-sample frontiers.
inline nlohmann::json curve_to_json(const AggregateCurve& c, const std::vector<Frontier>& samples) {
  nlohmann::json j;
  j["cost_grid"] = c.cost_grid;
  j["mean_utility"] = c.mean_utility;
  j["std_utility"] = c.std_utility;
  j["mean_frontier_size"] = c.mean_frontier_size;
  j["marker_positions"] = c.marker_positions;
  auto arr = nlohmann::json::array();
  for (const auto& f : samples) arr.push_back(frontier_to_json(f));
  j["samples"] = std::move(arr);
  return j;
}

/// `{instance}_{algorithm}_{cost}`, the stem used for curve files.
inline std::string curve_file_stem(const std::string& instance, const std::string& algorithm,
                                   const std::string& cost) {
  return instance + "_" + algorithm + "_" + cost;
}

}  // namespace pareto

#endif  // PARETO_REPORT_HPP
