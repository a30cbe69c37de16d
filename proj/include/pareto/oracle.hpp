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
 * @file oracle.hpp
 * @brief Exhaustive ground truth for small instances.
 *
 * All 2^n subsets are visited in Gray-code order so that consecutive subsets
 * differ in one item and the utility can be updated incrementally.
 */

#ifndef PARETO_ORACLE_HPP
#define PARETO_ORACLE_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pareto/core.hpp"
#include "pareto/cost.hpp"
#include "pareto/utility.hpp"

namespace pareto {

inline constexpr std::size_t kOracleLimitCardinality = 20;
inline constexpr std::size_t kOracleLimitDefault = 14;

/// Thrown when an instance is too large to enumerate.
class OracleLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline std::size_t oracle_limit(const Cost& c) {
  return c.kind() == CostKind::kCardinality ? kOracleLimitCardinality : kOracleLimitDefault;
}

inline void check_oracle_size(const Utility& f, const Cost& c, std::size_t limit) {
  if (f.size() != c.size()) throw std::invalid_argument("utility and cost disagree on n");
  if (f.size() > limit) {
    throw OracleLimitError("instance has n = " + std::to_string(f.size()) +
                           ", brute force is limited to n <= " + std::to_string(limit));
  }
}

/// Calls fn(solution, utility, cost) once for every subset, starting with ∅.
template <typename Fn>
void for_each_subset(const Utility& f, const Cost& c, Fn&& fn, std::size_t limit = 0) {
  check_oracle_size(f, c, limit == 0 ? oracle_limit(c) : limit);
  const std::size_t n = f.size();
  UtilityState us = f.state();
  fn(us.solution(), us.value(), c(us.solution()));
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto e = static_cast<ItemId>(std::countr_zero(i));
    if (us.solution().contains(e)) {
      us.remove(e);
    } else {
      us.add(e);
    }
    fn(us.solution(), us.value(), c(us.solution()));
  }
}

/// The exact Pareto frontier by enumeration. Throws OracleLimitError when n
/// exceeds `limit` (default: 20 for cardinality cost, 14 otherwise).
inline Frontier exact_pareto(const Utility& f, const Cost& c, std::size_t limit = 0) {
  if (f.size() > 32) throw OracleLimitError("brute force supports at most 32 items");
  std::vector<double> utility, cost;
  std::vector<std::uint32_t> mask;
  for_each_subset(
      f, c,
      [&](const Solution& s, double u, double k) {
        std::uint32_t m = 0;
        s.for_each([&](ItemId e) { m |= std::uint32_t{1} << e; });
        utility.push_back(u);
        cost.push_back(k);
        mask.push_back(m);
      },
      limit);
  std::vector<ParetoPoint> kept;
  for (std::size_t idx : pareto_indices(utility, cost)) {
    Solution s(f.size());
    for (std::uint32_t m = mask[idx]; m != 0; m &= m - 1) s.insert(static_cast<ItemId>(std::countr_zero(m)));
    kept.push_back(ParetoPoint{std::move(s), utility[idx], cost[idx]});
  }
  return Frontier::from_sorted(std::move(kept));
}

/// max f(S) subject to c(S) <= budget.
inline double exact_opt_under_budget(const Utility& f, const Cost& c, double budget, std::size_t limit = 0) {
  if (!(budget >= 0.0)) throw std::invalid_argument("budget must be >= 0");
  const auto best = exact_pareto(f, c, limit).best_within(budget);
  return best ? best->utility : f(Solution(f.size()));
}

/// min c(S) subject to f(S) >= target; nullopt when even f(V) falls short.
inline std::optional<double> exact_min_cost_for_target(const Utility& f, const Cost& c, double target,
                                                       std::size_t limit = 0) {
  for (const auto& p : exact_pareto(f, c, limit)) {
    if (p.utility >= target) return p.cost;
  }
  return std::nullopt;
}

}  // namespace pareto

#endif  // PARETO_ORACLE_HPP
