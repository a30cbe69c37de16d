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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "pareto/greedy.hpp"
#include "pareto/oracle.hpp"
#include "test_util.hpp"

namespace pareto {
namespace {

using testing_util::scan_greedy;

GreedyConfig budget_cfg(double b, std::size_t tau) {
  GreedyConfig cfg;
  cfg.cost_budget = b;
  cfg.seed_size = tau;
  return cfg;
}

GreedyConfig target_cfg(double k, std::size_t tau) {
  GreedyConfig cfg;
  cfg.utility_target = k;
  cfg.seed_size = tau;
  return cfg;
}

// Skills a, b, c as 0, 1, 2.
Utility abc_coverage() { return Utility(CoverageSpec{{{0}, {0, 1}, {2}}, {0, 1, 2}}); }

TEST(GreedyTest, HandTracedCoverage) {
  const Utility f = abc_coverage();
  const Cost c(CardinalityCost{}, 3);
  const auto r = greedy(f, c, budget_cfg(2, 0));
  EXPECT_EQ(r.best.solution.members(), (std::vector<ItemId>{1, 2}));
  EXPECT_EQ(r.best.utility, 3.0);
  EXPECT_EQ(r.best.cost, 2.0);
  const auto trace = greedy_trace(f, c, 2, Solution(3));
  ASSERT_EQ(trace.prefixes.size(), 3u);
  EXPECT_EQ(trace.prefixes[1].solution.members(), std::vector<ItemId>{1});
}

TEST(GreedyTest, ZeroTargetReturnsSeed) {
  const Utility f = abc_coverage();
  const auto r = greedy(f, Cost(CardinalityCost{}, 3), target_cfg(0, 0));
  EXPECT_TRUE(r.best.solution.empty());
  EXPECT_TRUE(r.target_reached);
  const auto r1 = greedy(f, Cost(CardinalityCost{}, 3), target_cfg(0, 1));
  EXPECT_TRUE(r1.best.solution.empty());
}

TEST(GreedyTest, UniformWeightsMatchCardinality) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 12;
    const Utility f(testing_util::random_coverage(rng, n, 15, 5));
    const auto a = greedy(f, Cost(CardinalityCost{}, n), budget_cfg(static_cast<double>(n), 0));
    const auto b = greedy(f, Cost(LinearCost{std::vector<double>(n, 3.0)}, n), budget_cfg(3.0 * n, 0));
    EXPECT_EQ(a.best.solution, b.best.solution);
  }
}

TEST(GreedyTest, StopsWhenGainsVanish) {
  const Utility f(CoverageSpec{{{0}, {0}, {1}}, {0, 1}});
  const auto r = greedy(f, Cost(CardinalityCost{}, 3), budget_cfg(3, 0));
  EXPECT_EQ(r.best.solution.members(), (std::vector<ItemId>{0, 2}));
}

TEST(GreedyTest, TiesGoToLowestIndex) {
  const Utility f(CoverageSpec{{{0}, {1}, {2}}, {0, 1, 2}});
  const auto r = greedy(f, Cost(CardinalityCost{}, 3), budget_cfg(1, 0));
  EXPECT_EQ(r.best.solution.members(), std::vector<ItemId>{0});
}

TEST(GreedyTest, NoFeasibleItemIsFlagged) {
  const Utility f = abc_coverage();
  const auto r = greedy(f, Cost(LinearCost{{5, 6, 7}}, 3), budget_cfg(1, 1));
  EXPECT_TRUE(r.no_feasible_item);
  EXPECT_TRUE(r.best.solution.empty());
  EXPECT_FALSE(greedy(f, Cost(LinearCost{{5, 6, 7}}, 3), budget_cfg(5, 1)).no_feasible_item);
}

TEST(GreedyTest, UnreachableTargetIsFlagged) {
  const Utility f = abc_coverage();
  const auto r = greedy(f, Cost(CardinalityCost{}, 3), target_cfg(10, 1));
  EXPECT_FALSE(r.target_reached);
  EXPECT_EQ(r.best.utility, 3.0);
}

TEST(GreedyTest, BothLimitsStopOnWhicheverComesFirst) {
  const Utility f(CoverageSpec{{{0}, {1}, {2}, {3}}, {0, 1, 2, 3}});
  GreedyConfig cfg = target_cfg(3, 0);
  cfg.cost_budget = 2;
  EXPECT_EQ(greedy(f, Cost(CardinalityCost{}, 4), cfg).best.utility, 2.0);
  cfg.cost_budget = 4;
  EXPECT_EQ(greedy(f, Cost(CardinalityCost{}, 4), cfg).best.utility, 3.0);
}

TEST(GreedyTest, ConfigValidation) {
  const Utility f = abc_coverage();
  const Cost c(CardinalityCost{}, 3);
  EXPECT_THROW(greedy(f, c, GreedyConfig{}), std::invalid_argument);
  EXPECT_THROW(greedy(f, c, budget_cfg(2, 4)), std::invalid_argument);
  EXPECT_THROW(greedy(f, c, budget_cfg(NAN, 1)), std::invalid_argument);
  EXPECT_THROW(greedy(f, Cost(CardinalityCost{}, 4), budget_cfg(2, 1)), std::invalid_argument);
}

TEST(GreedyTraceTest, Examples) {
  const Utility f(CoverageSpec{{{0}, {1}, {2}}, {0, 1, 2}});
  const Cost c(LinearCost{{1, 1, 1}}, 3);
  const auto empty = greedy_trace(f, c, 0, Solution(3));
  ASSERT_EQ(empty.prefixes.size(), 1u);
  EXPECT_EQ(empty.prefixes[0].utility, 0.0);
  EXPECT_EQ(empty.prefixes[0].cost, 0.0);
  const auto full = greedy_trace(f, c, 3, Solution(3));
  ASSERT_EQ(full.prefixes.size(), 4u);
  for (std::size_t i = 1; i < full.prefixes.size(); ++i) {
    EXPECT_GT(full.prefixes[i].cost, full.prefixes[i - 1].cost);
    EXPECT_GE(full.prefixes[i].utility, full.prefixes[i - 1].utility);
  }
  EXPECT_THROW(greedy_trace(f, c, 1, Solution::full(3)), std::invalid_argument);
}

TEST(EnumerateSeedsTest, Examples) {
  const Cost c3(CardinalityCost{}, 3);
  const auto zero = enumerate_seeds(3, 0, c3, kInf);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].empty());
  const auto one = enumerate_seeds(3, 1, c3, kInf);
  ASSERT_EQ(one.size(), 4u);
  for (ItemId i = 0; i < 3; ++i) EXPECT_EQ(one[i + 1].members(), std::vector<ItemId>{i});
  EXPECT_EQ(enumerate_seeds(4, 2, Cost(CardinalityCost{}, 4), kInf).size(), 11u);
  EXPECT_EQ(enumerate_seeds(6, 3, Cost(CardinalityCost{}, 6), kInf).size(), 1u + 6 + 15 + 20);
}

TEST(EnumerateSeedsTest, LexicographicAndBudgeted) {
  const Cost c(LinearCost{{1, 5, 1, 1}}, 4);
  const auto seeds = enumerate_seeds(4, 2, c, 2.0);
  for (std::size_t i = 1; i < seeds.size(); ++i) EXPECT_TRUE(seeds[i - 1] < seeds[i]);
  for (const auto& s : seeds) EXPECT_LE(c(s), 2.0);
  EXPECT_EQ(seeds.size(), 1u + 3 + 3);
}

// The heap-based selection must pick exactly what a full scan picks.
TEST(GreedyEquivalenceTest, LazyMatchesFullScan) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 8 + rng() % 25;
    std::vector<Utility> fs;
    fs.emplace_back(testing_util::random_coverage(rng, n, 30, 6));
    fs.emplace_back(testing_util::random_facility(rng, n));
    fs.emplace_back(testing_util::random_influence(rng, n, 0.1));
    std::vector<Cost> cs;
    cs.emplace_back(CardinalityCost{}, n);
    cs.emplace_back(testing_util::random_weights(rng, n), n);
    for (const auto& f : fs) {
      for (const auto& c : cs) {
        const double budget = c(Solution::full(n)) * (0.2 + 0.6 * testing_util::unit(rng));
        Solution seed = Solution::from_members(n, {static_cast<ItemId>(rng() % n)});
        if (c(seed) > budget) seed = Solution(n);
        const auto lazy = greedy_trace(f, c, budget, seed).prefixes;
        const auto scan = scan_greedy(f, c, seed, budget);
        ASSERT_EQ(lazy.size(), scan.size());
        for (std::size_t i = 0; i < lazy.size(); ++i) {
          EXPECT_EQ(lazy[i].solution, scan[i].solution);
          EXPECT_EQ(lazy[i].cost, scan[i].cost);
        }
        const double target = f(Solution::full(n)) * testing_util::unit(rng);
        const auto by_target = greedy(f, c, target_cfg(target, 0)).best;
        const auto scan_t = scan_greedy(f, c, Solution(n), kInf, target);
        EXPECT_EQ(by_target.solution, scan_t.back().solution);
      }
    }
  }
}

TEST(GreedyPropertyTest, BudgetComplianceAndDeterminism) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 10;
    const Utility f(testing_util::random_facility(rng, n));
    const Cost c(testing_util::random_weights(rng, n), n);
    const double b = 3.0 + 20.0 * testing_util::unit(rng);
    const auto r = greedy(f, c, budget_cfg(b, 2));
    EXPECT_LE(c(r.best.solution), b);
    EXPECT_EQ(r.best.cost, c(r.best.solution));
    EXPECT_EQ(r.best.solution, greedy(f, c, budget_cfg(b, 2)).best.solution);
  }
}

TEST(GreedyPropertyTest, CardinalityBudgetReachesOneMinusInverseE) {
  std::mt19937_64 rng(12);
  const double e1 = 1.0 - std::exp(-1.0);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 8 + rng() % 7;
    std::vector<Utility> fs;
    fs.emplace_back(testing_util::random_coverage(rng, n, 20, 5));
    fs.emplace_back(testing_util::random_facility(rng, n));
    const Cost c(CardinalityCost{}, n);
    for (const auto& f : fs) {
      const auto exact = testing_util::brute_force(f, c);
      for (std::size_t k = 0; k <= n; ++k) {
        double opt = 0.0;
        for (const auto& p : exact)
          if (p.cost <= static_cast<double>(k)) opt = std::max(opt, p.utility);
        const auto r = greedy(f, c, budget_cfg(static_cast<double>(k), 0));
        EXPECT_GE(r.best.utility, e1 * opt * (1 - 1e-12));
      }
    }
  }
}

TEST(GreedyPropertyTest, CoverageTargetWithinHarmonicFactor) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 8 + rng() % 7;
    const Utility f(testing_util::random_coverage(rng, n, 16, 5));
    const Cost c(testing_util::random_weights(rng, n), n);
    const double hn = harmonic_number(n);
    const auto exact = testing_util::brute_force(f, c);
    for (double k = 0; k <= f(Solution::full(n)); k += 1.0) {
      double opt = kInf;
      for (const auto& p : exact)
        if (p.utility >= k) opt = std::min(opt, p.cost);
      const auto r = greedy(f, c, target_cfg(k, 0));
      ASSERT_TRUE(r.target_reached);
      EXPECT_LE(r.best.cost, hn * opt * (1 + 1e-12));
    }
  }
}

}  // namespace
}  // namespace pareto
