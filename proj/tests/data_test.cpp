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
#include <filesystem>
#include <string>
#include <vector>

#include "pareto/generators.hpp"
#include "pareto/instance.hpp"
#include "pareto/io.hpp"

namespace pareto {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string temp_path(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "pareto_data_test";
  fs::create_directories(dir);
  return (dir / name).string();
}

json minimal_coverage() {
  return json::parse(R"({
    "schema": 1, "n": 2,
    "utility": {"kind": "coverage", "skills": [[0, 1], [1, 2]], "task": [0, 1, 2, 3]},
    "cost": {"kind": "linear", "weights": [5, 10]}
  })");
}

TEST(InstanceIoTest, RoundTripIsByteIdentical) {
  const Instance inst = instance_from_json(minimal_coverage());
  const std::string a = temp_path("a.json"), b = temp_path("b.json");
  save_instance(a, inst);
  save_instance(b, load_instance(a));
  EXPECT_EQ(read_text(a), read_text(b));
  const Utility f = load_instance(a).make_utility();
  EXPECT_EQ(f(Solution::full(2)), 3.0);
}

TEST(InstanceIoTest, RejectsInvalidInput) {
  auto j = minimal_coverage();
  j["cost"]["weights"] = {5, -1};
  EXPECT_THROW(instance_from_json(j), SchemaError);
  j = minimal_coverage();
  j["schema"] = 2;
  EXPECT_THROW(instance_from_json(j), SchemaError);
  j = minimal_coverage();
  j["cost"]["weights"] = {5};
  EXPECT_THROW(instance_from_json(j), SchemaError);
  j = minimal_coverage();
  j.erase("n");
  EXPECT_THROW(instance_from_json(j), SchemaError);
  j = minimal_coverage();
  j["cost"] = {{"kind", "quadratic"}};
  EXPECT_THROW(instance_from_json(j), SchemaError);
  j = minimal_coverage();
  j["graph"] = {{0, 5}};
  EXPECT_THROW(instance_from_json(j), std::invalid_argument);
  EXPECT_THROW(load_instance(temp_path("does_not_exist.json")), IoError);
}

TEST(InstanceIoTest, DiameterFromEdgeList) {
  auto j = minimal_coverage();
  j["n"] = 3;
  j["utility"]["skills"] = {{0}, {1}, {2}};
  j["cost"] = json::parse(R"({"kind": "diameter", "edges": [[0, 1, 1.0], [1, 2, 1.0]]})");
  const Instance inst = instance_from_json(j);
  const Cost cost = inst.make_cost();
  const auto& d = *cost.metric();
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(d(i, i), 0.0);
  EXPECT_EQ(d(0, 2), 2.0);
  ASSERT_TRUE(inst.metric_edges.has_value());
  EXPECT_EQ(instance_to_json(inst)["cost"]["edges"].size(), 2u);
  EXPECT_TRUE(inst.warnings.empty());
}

TEST(InstanceIoTest, TriangleViolationBecomesWarning) {
  auto j = minimal_coverage();
  j["n"] = 3;
  j["utility"]["skills"] = {{0}, {1}, {2}};
  j["cost"] = {{"kind", "diameter"}, {"matrix", {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}}};
  const Instance inst = instance_from_json(j);
  ASSERT_EQ(inst.warnings.size(), 1u);
  EXPECT_NE(inst.warnings[0].find("triangle"), std::string::npos);
}

TEST(InstanceIoTest, InfluenceAndFacilityRoundTrip) {
  const auto j = json::parse(R"({
    "schema": 1, "n": 3, "labels": ["a", "b", "c"],
    "utility": {"kind": "influence", "edges": [[0, 1, 0.5], [1, 2, 0.25]], "num_samples": 30, "seed": 4},
    "cost": {"kind": "cardinality"},
    "graph": [[0, 1], [1, 2]],
    "provenance": {"note": "hand made"}
  })");
  const Instance inst = instance_from_json(j);
  EXPECT_EQ(instance_to_json(instance_from_json(instance_to_json(inst))).dump(), instance_to_json(inst).dump());
  EXPECT_EQ(instance_to_json(inst)["provenance"]["note"], "hand made");
  EXPECT_EQ(inst.labels[2], "c");
  EXPECT_EQ(std::get<InfluenceSpec>(inst.utility).num_samples, 30u);

  const auto fj = json::parse(R"({
    "schema": 1, "n": 2,
    "utility": {"kind": "facility", "similarity": [[1, 0.5], [0.5, 1]]},
    "cost": {"kind": "cardinality"}
  })");
  const Instance fac = instance_from_json(fj);
  EXPECT_EQ(fac.make_utility()(Solution::from_members(2, {0})), 1.5);
  EXPECT_EQ(instance_to_json(instance_from_json(instance_to_json(fac))).dump(), instance_to_json(fac).dump());
}

TEST(SampleTest, FullSizeIsIdentity) {
  FacilityParams p;
  p.n = 12;
  p.rng_seed = 3;
  const Instance inst = gen_facility(p);
  SampleConfig cfg;
  cfg.sample_size = 12;
  cfg.rng_seed = 9;
  const Instance s = sample_subinstance(inst, cfg, 0);
  const Utility f = inst.make_utility(), g = s.make_utility();
  EXPECT_EQ(f(Solution::full(12)), g(Solution::full(12)));
  EXPECT_EQ(inst.make_cost()(Solution::full(12)), s.make_cost()(Solution::full(12)));
}

TEST(SampleTest, FacilityRestrictionKeepsSubmatrix) {
  const auto j = json::parse(R"({
    "schema": 1, "n": 3,
    "utility": {"kind": "facility", "similarity": [[1, 0.5, 0.25], [0.5, 1, 0.125], [0.25, 0.125, 1]]},
    "cost": {"kind": "linear", "weights": [1, 2, 3]}
  })");
  const Instance r = restrict_instance(instance_from_json(j), {0, 2});
  EXPECT_EQ(r.n, 2u);
  // The outer sum now runs over the two kept rows only.
  EXPECT_EQ(r.make_utility()(Solution::from_members(2, {0})), 1.25);
  EXPECT_EQ(r.make_cost()(Solution::full(2)), 4.0);
  EXPECT_EQ(r.labels, (std::vector<std::string>{"0", "2"}));
}

TEST(SampleTest, DeterministicAndDistinctAcrossIndices) {
  InfluenceParams p;
  p.n = 60;
  p.edge_density = 0.1;
  p.rng_seed = 2;
  const Instance inst = gen_influence(p);
  SampleConfig cfg;
  cfg.sample_size = 20;
  cfg.rng_seed = 5;
  EXPECT_EQ(instance_to_json(sample_subinstance(inst, cfg, 1)).dump(),
            instance_to_json(sample_subinstance(inst, cfg, 1)).dump());
  EXPECT_NE(sample_items(60, cfg, 0), sample_items(60, cfg, 1));
  const auto items = sample_items(60, cfg, 3);
  EXPECT_EQ(items.size(), 20u);
  EXPECT_TRUE(std::is_sorted(items.begin(), items.end()));
  // Induced influence graph: only arcs between sampled nodes survive.
  const Instance s = sample_subinstance(inst, cfg, 3);
  for (const auto& e : std::get<InfluenceSpec>(s.utility).edges) {
    EXPECT_LT(e.from, 20u);
    EXPECT_LT(e.to, 20u);
  }
  cfg.sample_size = 61;
  EXPECT_THROW(sample_items(60, cfg, 0), std::invalid_argument);
}

TEST(SampleTest, CoverageSkillListsFollowItems) {
  const Instance inst = instance_from_json(minimal_coverage());
  const Instance r = restrict_instance(inst, {1});
  EXPECT_EQ(std::get<CoverageSpec>(r.utility).skills[0], (std::vector<std::uint32_t>{1, 2}));
  EXPECT_EQ(r.make_cost()(Solution::full(1)), 10.0);
}

TEST(GeneratorTest, JaccardDistance) {
  EXPECT_EQ(jaccard_distance({1, 2, 3}, {1, 2, 3}), 0.0);
  EXPECT_EQ(jaccard_distance({1, 2}, {3, 4}), 1.0);
  EXPECT_DOUBLE_EQ(jaccard_distance({1, 2, 3}, {2, 3, 4}), 0.5);
}

TEST(GeneratorTest, CoverageRanges) {
  for (CostKind k : {CostKind::kLinear, CostKind::kDiameter}) {
    CoverageParams p;
    p.n_experts = 40;
    p.cost = k;
    p.rng_seed = 17;
    const Instance inst = gen_coverage(p);
    for (const auto& s : std::get<CoverageSpec>(inst.utility).skills) {
      EXPECT_GE(s.size(), 2u);
      EXPECT_LE(s.size(), 6u);
    }
    EXPECT_EQ(std::get<CoverageSpec>(inst.utility).task.size(), 15u);
    if (k == CostKind::kLinear) {
      for (double w : std::get<LinearCost>(inst.cost).weights) {
        EXPECT_GE(w, 5.0);
        EXPECT_LE(w, 100.0);
      }
    } else {
      const auto& d = std::get<DiameterCost>(inst.cost).metric;
      for (std::size_t i = 0; i < inst.n; ++i)
        for (std::size_t j = 0; j < inst.n; ++j) {
          EXPECT_GE(d(i, j), 0.0);
          EXPECT_LE(d(i, j), 1.0);
        }
      EXPECT_TRUE(d.triangle_check().triangle_ok);
    }
    EXPECT_EQ(instance_to_json(gen_coverage(p)).dump(), instance_to_json(inst).dump());
    EXPECT_NO_THROW(instance_from_json(instance_to_json(inst)));
  }
  CoverageParams bad;
  bad.min_skills = 1;
  EXPECT_THROW(gen_coverage(bad), std::invalid_argument);
}

TEST(GeneratorTest, CollaborationWeights) {
  const auto w = gen_collaboration_graph(3, {{0, 1, 0}, {1, 2, 10}, {0, 2, 1000}});
  EXPECT_EQ(w[0].weight, 1.0);
  EXPECT_NEAR(w[1].weight, 0.3679, 1e-4);
  EXPECT_GT(w[2].weight, 0.0);
  EXPECT_LT(w[2].weight, 1e-40);
  EXPECT_THROW(gen_collaboration_graph(2, {{0, 2, 1}}), std::invalid_argument);
}

TEST(GeneratorTest, InfluenceCostsAndMetric) {
  InfluenceParams p;
  p.n = 50;
  p.edge_density = 0.04;
  p.rng_seed = 11;
  const Instance lin = gen_influence(p);
  EXPECT_EQ(lin.provenance["probability"], 0.01);
  const auto deg = [&] {
    std::vector<std::size_t> d(p.n);
    for (const auto& e : *lin.graph) {
      ++d[e.u];
      ++d[e.v];
    }
    return d;
  }();
  const auto& w = std::get<LinearCost>(lin.cost).weights;
  bool saw_isolated = false;
  for (std::size_t i = 0; i < p.n; ++i) {
    EXPECT_EQ(w[i], std::max<double>(static_cast<double>(deg[i]), 1.0));
    saw_isolated = saw_isolated || deg[i] == 0;
  }
  EXPECT_TRUE(saw_isolated);
  for (const auto& e : std::get<InfluenceSpec>(lin.utility).edges) EXPECT_EQ(e.probability, 0.01);

  p.cost = CostKind::kDiameter;
  const Instance dia = gen_influence(p);
  ASSERT_TRUE(dia.metric_edges.has_value());
  for (const auto& e : *dia.metric_edges) {
    EXPECT_GT(e.weight, 0.0);
    EXPECT_LE(e.weight, 1.0);
  }
  // Two nodes joined by a single edge with no common neighbour get length 1.
  InfluenceParams pair;
  pair.n = 2;
  pair.edge_density = 1.0;
  pair.cost = CostKind::kDiameter;
  const Instance two = gen_influence(pair);
  EXPECT_EQ((*two.metric_edges)[0].weight, 1.0);
  EXPECT_NO_THROW(instance_from_json(instance_to_json(dia)));
}

TEST(GeneratorTest, FacilityProperties) {
  FacilityParams p;
  p.n = 30;
  p.rng_seed = 5;
  const Instance inst = gen_facility(p);
  const auto& m = std::get<FacilityLocationSpec>(inst.utility).similarity;
  for (std::size_t i = 0; i < p.n; ++i) {
    EXPECT_EQ(m(i, i), 1.0);
    for (std::size_t j = 0; j < p.n; ++j) {
      EXPECT_EQ(m(i, j), m(j, i));
      EXPECT_GT(m(i, j), 0.0);
    }
  }
  for (double w : std::get<LinearCost>(inst.cost).weights) EXPECT_GT(w, 0.0);
  ASSERT_TRUE(inst.graph.has_value());
  EXPECT_FALSE(inst.graph->empty());
  EXPECT_EQ(instance_to_json(gen_facility(p)).dump(), instance_to_json(inst).dump());
  p.cost = CostKind::kDiameter;
  EXPECT_TRUE(std::get<DiameterCost>(gen_facility(p).cost).metric.triangle_check().triangle_ok);
}

TEST(GeneratorTest, WeightFloor) {
  std::vector<double> w = {0.0, 2.0, 4.0};
  floor_weights(w);
  EXPECT_DOUBLE_EQ(w[0], 2e-3);
  EXPECT_EQ(w[1], 2.0);
}

}  // namespace
}  // namespace pareto
