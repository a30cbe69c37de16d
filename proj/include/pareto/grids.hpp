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

// Discretizations of a utility or cost axis.

#ifndef PARETO_GRIDS_HPP
#define PARETO_GRIDS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace pareto {

// Grid points within this relative distance of `hi` are folded into `hi`.
inline constexpr double kGridMergeTol = 1e-12;

/// lo, lo(1+eps), lo(1+eps)^2, ... below hi, then hi. Ascending, duplicate-free.
inline std::vector<double> build_log_grid(double lo, double hi, double eps) {
  if (!(lo > 0.0)) throw std::invalid_argument("log grid: lo must be > 0");
  if (!(eps > 0.0)) throw std::invalid_argument("log grid: eps must be > 0");
  if (!(hi >= lo) || !std::isfinite(hi)) throw std::invalid_argument("log grid: need lo <= hi < inf");
  std::vector<double> out;
  const double stop = hi * (1.0 - kGridMergeTol);
  for (int k = 0;; ++k) {
    const double v = lo * std::pow(1.0 + eps, k);
    if (v >= stop) break;
    out.push_back(v);
  }
  out.push_back(hi);
  return out;
}

/// lo, lo+delta, lo+2delta, ... below hi, then hi.
inline std::vector<double> build_linear_grid(double lo, double hi, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("linear grid: delta must be > 0");
  if (!(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("linear grid: need finite lo <= hi");
  }
  std::vector<double> out;
  const double stop = hi - kGridMergeTol * std::max(std::abs(hi), std::abs(lo));
  for (long k = 0;; ++k) {
    const double v = lo + static_cast<double>(k) * delta;
    if (v >= stop) break;
    out.push_back(v);
  }
  out.push_back(hi);
  return out;
}

struct GridSpec {
  enum class Kind { kLogarithmic, kLinear, kExplicit };
  Kind kind = Kind::kLinear;
  double step = 0.0;  // eps or delta
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> values;  // kExplicit only

  std::vector<double> build() const {
    switch (kind) {
      case Kind::kLogarithmic: return build_log_grid(lo, hi, step);
      case Kind::kLinear: return build_linear_grid(lo, hi, step);
      case Kind::kExplicit: {
        std::vector<double> v = values;
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
      }
    }
    return {};
  }
};

}  // namespace pareto

#endif  // PARETO_GRIDS_HPP
