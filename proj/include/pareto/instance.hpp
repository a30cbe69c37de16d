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
 * @file instance.hpp
 * @brief Problem instances, their JSON form (schema 1) and ground-set sampling.
 *
 * The file layout is described in docs/format.md.
 */

#ifndef PARETO_INSTANCE_HPP
#define PARETO_INSTANCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pareto/cost.hpp"
#include "pareto/io.hpp"
#include "pareto/rng.hpp"
#include "pareto/utility.hpp"

namespace pareto {

inline constexpr int kSchemaVersion = 1;

struct GraphEdge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct Instance {
  std::size_t n = 0;
  std::vector<std::string> labels;  // empty or one per item
  UtilitySpec utility;
  CostSpec cost;
  /// Source edges of a diameter cost given in edge-list form; saved back as-is.
  std::optional<std::vector<WeightedEdge>> metric_edges;
  /// Optional undirected graph over the items (used by top-degree).
  std::optional<std::vector<GraphEdge>> graph;
  nlohmann::json provenance = nlohmann::json::object();
  /// Non-fatal findings from validation (e.g. triangle-inequality violations).
  std::vector<std::string> warnings;

  Utility make_utility() const { return Utility(utility); }
  Cost make_cost() const { return Cost(cost, n); }
  UtilityKind utility_kind() const { return static_cast<UtilityKind>(utility.index()); }
  CostKind cost_kind() const { return static_cast<CostKind>(cost.index()); }
};

/// Thrown for schema violations in instance files.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void check_index(std::size_t v, std::size_t n, const char* what) {
  if (v >= n) throw SchemaError(std::string(what) + ": index " + std::to_string(v) + " out of range");
}

inline SquareMatrix matrix_from_json(const nlohmann::json& j, std::size_t n, const char* what) {
  const auto rows = j.get<std::vector<std::vector<double>>>();
  if (rows.size() != n) throw SchemaError(std::string(what) + ": expected " + std::to_string(n) + " rows");
  for (const auto& r : rows) {
    if (r.size() != n) throw SchemaError(std::string(what) + ": matrix is not n x n");
  }
  return SquareMatrix::from_rows(rows);
}

inline UtilitySpec utility_from_json(const nlohmann::json& j, std::size_t n) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "coverage") {
    CoverageSpec s;
    s.skills = j.at("skills").get<std::vector<std::vector<std::uint32_t>>>();
    s.task = j.at("task").get<std::vector<std::uint32_t>>();
    if (s.skills.size() != n) throw SchemaError("coverage: need one skill list per item");
    return s;
  }
  if (kind == "facility") {
    FacilityLocationSpec s{matrix_from_json(j.at("similarity"), n, "facility similarity")};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const double m = s.similarity(i, k);
        if (!(m >= 0.0 && m <= 1.0)) throw SchemaError("facility: similarity entries must lie in [0,1]");
      }
    return s;
  }
  if (kind == "influence") {
    InfluenceSpec s;
    s.n = n;
    for (const auto& e : j.at("edges")) {
      InfluenceEdge ie{e.at(0).get<ItemId>(), e.at(1).get<ItemId>(), e.at(2).get<double>()};
      check_index(ie.from, n, "influence edge");
      check_index(ie.to, n, "influence edge");
      if (!(ie.probability >= 0.0 && ie.probability <= 1.0)) {
        throw SchemaError("influence: probabilities must lie in [0,1]");
      }
      s.edges.push_back(ie);
    }
    s.num_samples = j.value("num_samples", std::size_t{200});
    s.rng_seed = j.value("seed", std::uint64_t{0});
    if (s.num_samples == 0) throw SchemaError("influence: num_samples must be >= 1");
    return s;
  }
  throw SchemaError("unknown utility kind '" + kind + "'");
}

inline nlohmann::json utility_to_json(const UtilitySpec& spec) {
  nlohmann::json j;
  if (auto* s = std::get_if<CoverageSpec>(&spec)) {
    j["kind"] = "coverage";
    j["skills"] = s->skills;
    j["task"] = s->task;
  } else if (auto* s = std::get_if<FacilityLocationSpec>(&spec)) {
    j["kind"] = "facility";
    j["similarity"] = s->similarity.to_rows();
  } else {
    const auto& inf = std::get<InfluenceSpec>(spec);
    j["kind"] = "influence";
    auto edges = nlohmann::json::array();
    for (const auto& e : inf.edges) edges.push_back({e.from, e.to, e.probability});
    j["edges"] = std::move(edges);
    j["num_samples"] = inf.num_samples;
    j["seed"] = inf.rng_seed;
  }
  return j;
}

}  // namespace detail

/// Parses and validates an instance document. Metric checks run here;
/// triangle-inequality violations become warnings.
inline Instance instance_from_json(const nlohmann::json& j) {
  try {
    Instance inst;
    const int schema = j.at("schema").get<int>();
    if (schema != kSchemaVersion) throw SchemaError("unsupported schema " + std::to_string(schema));
    inst.n = j.at("n").get<std::size_t>();
    if (j.contains("labels")) {
      inst.labels = j["labels"].get<std::vector<std::string>>();
      if (inst.labels.size() != inst.n) throw SchemaError("labels: need one per item");
    }
    inst.utility = detail::utility_from_json(j.at("utility"), inst.n);

    const auto& cj = j.at("cost");
    const auto kind = cj.at("kind").get<std::string>();
    if (kind == "cardinality") {
      inst.cost = CardinalityCost{};
    } else if (kind == "linear") {
      auto w = cj.at("weights").get<std::vector<double>>();
      if (w.size() != inst.n) throw SchemaError("linear: need one weight per item");
      for (double x : w) {
        if (!(x > 0.0)) throw SchemaError("linear: weights must be > 0");
      }
      inst.cost = LinearCost{std::move(w)};
    } else if (kind == "diameter") {
      if (cj.contains("matrix")) {
        inst.cost = DiameterCost{DistanceMatrix(detail::matrix_from_json(cj["matrix"], inst.n, "diameter"))};
      } else {
        std::vector<WeightedEdge> edges;
        for (const auto& e : cj.at("edges")) {
          WeightedEdge we{e.at(0).get<ItemId>(), e.at(1).get<ItemId>(), e.at(2).get<double>()};
          detail::check_index(we.u, inst.n, "diameter edge");
          detail::check_index(we.v, inst.n, "diameter edge");
          edges.push_back(we);
        }
        inst.cost = DiameterCost{shortest_path_metric(inst.n, edges)};
        inst.metric_edges = std::move(edges);
      }
      const auto& tri = std::get<DiameterCost>(inst.cost).metric.triangle_check();
      if (!tri.triangle_ok) {
        inst.warnings.push_back("diameter metric violates the triangle inequality (" +
                                std::to_string(tri.violations) + " triples, worst excess " +
                                format_double(tri.worst_violation) + ")");
      }
    } else {
      throw SchemaError("unknown cost kind '" + kind + "'");
    }

    if (j.contains("graph")) {
      std::vector<GraphEdge> g;
      for (const auto& e : j["graph"]) {
        GraphEdge ge{e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>()};
        detail::check_index(ge.u, inst.n, "graph edge");
        detail::check_index(ge.v, inst.n, "graph edge");
        g.push_back(ge);
      }
      inst.graph = std::move(g);
    }
    inst.provenance = j.value("provenance", nlohmann::json::object());
    // Builds the evaluators once so every remaining range error surfaces here.
    (void)inst.make_utility();
    (void)inst.make_cost();
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("instance schema: ") + e.what());
  }
}

inline nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["n"] = inst.n;
  if (!inst.labels.empty()) j["labels"] = inst.labels;
  j["utility"] = detail::utility_to_json(inst.utility);
  nlohmann::json cj;
  if (std::holds_alternative<CardinalityCost>(inst.cost)) {
    cj["kind"] = "cardinality";
  } else if (auto* lin = std::get_if<LinearCost>(&inst.cost)) {
    cj["kind"] = "linear";
    cj["weights"] = lin->weights;
  } else {
    cj["kind"] = "diameter";
    if (inst.metric_edges) {
      auto edges = nlohmann::json::array();
      for (const auto& e : *inst.metric_edges) edges.push_back({e.u, e.v, e.weight});
      cj["edges"] = std::move(edges);
    } else {
      cj["matrix"] = std::get<DiameterCost>(inst.cost).metric.matrix().to_rows();
    }
  }
  j["cost"] = std::move(cj);
  if (inst.graph) {
    auto g = nlohmann::json::array();
    for (const auto& e : *inst.graph) g.push_back({e.u, e.v});
    j["graph"] = std::move(g);
  }
  j["provenance"] = inst.provenance;
  return j;
}

inline Instance load_instance(const std::string& path) { return instance_from_json(read_json(path)); }

inline void save_instance(const std::string& path, const Instance& inst) {
  write_json(path, instance_to_json(inst));
}

struct SampleConfig {
  std::size_t sample_size = 0;
  std::size_t num_samples = 10;
  std::uint64_t rng_seed = 0;

  void validate(std::size_t n) const {
    if (sample_size > n) throw std::invalid_argument("sample_size exceeds n");
    if (num_samples == 0) throw std::invalid_argument("num_samples must be >= 1");
  }
};

/// The sorted item indices drawn for sample `index`.
inline std::vector<std::uint32_t> sample_items(std::size_t n, const SampleConfig& cfg, std::size_t index) {
  cfg.validate(n);
  Engine rng(derive_seed(cfg.rng_seed, "sample", index));
  return sample_without_replacement(rng, n, cfg.sample_size);
}

/// Restriction of `inst` to the given sorted item list, relabelled 0..k-1.
inline Instance restrict_instance(const Instance& inst, const std::vector<std::uint32_t>& keep) {
  constexpr std::uint32_t kDropped = ~std::uint32_t{0};
  std::vector<std::uint32_t> remap(inst.n, kDropped);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    detail::check_index(keep[i], inst.n, "restriction");
    remap[keep[i]] = static_cast<std::uint32_t>(i);
  }
  Instance out;
  out.n = keep.size();
  if (!inst.labels.empty()) {
    for (auto i : keep) out.labels.push_back(inst.labels[i]);
  } else {
    for (auto i : keep) out.labels.push_back(std::to_string(i));
  }

  if (auto* s = std::get_if<CoverageSpec>(&inst.utility)) {
    CoverageSpec r;
    r.task = s->task;
    for (auto i : keep) r.skills.push_back(s->skills[i]);
    out.utility = std::move(r);
  } else if (auto* s = std::get_if<FacilityLocationSpec>(&inst.utility)) {
    out.utility = FacilityLocationSpec{s->similarity.restrict_to(keep)};
  } else {
    const auto& inf = std::get<InfluenceSpec>(inst.utility);
    InfluenceSpec r;
    r.n = keep.size();
    r.num_samples = inf.num_samples;
    r.rng_seed = inf.rng_seed;
    for (const auto& e : inf.edges) {
      if (remap[e.from] != kDropped && remap[e.to] != kDropped) {
        r.edges.push_back(InfluenceEdge{remap[e.from], remap[e.to], e.probability});
      }
    }
    out.utility = std::move(r);
  }

  if (std::holds_alternative<CardinalityCost>(inst.cost)) {
    out.cost = CardinalityCost{};
  } else if (auto* lin = std::get_if<LinearCost>(&inst.cost)) {
    LinearCost r;
    for (auto i : keep) r.weights.push_back(lin->weights[i]);
    out.cost = std::move(r);
  } else {
    // Distances stay those of the full instance, so the matrix form is kept.
    out.cost = DiameterCost{std::get<DiameterCost>(inst.cost).metric.restrict_to(keep)};
  }

  if (inst.graph) {
    std::vector<GraphEdge> g;
    for (const auto& e : *inst.graph) {
      if (remap[e.u] != kDropped && remap[e.v] != kDropped) g.push_back(GraphEdge{remap[e.u], remap[e.v]});
    }
    out.graph = std::move(g);
  }
  out.provenance = inst.provenance;
  return out;
}

/// Uniform random sub-instance; deterministic in (cfg.rng_seed, index).
inline Instance sample_subinstance(const Instance& inst, const SampleConfig& cfg, std::size_t index) {
  Instance out = restrict_instance(inst, sample_items(inst.n, cfg, index));
  out.provenance["sample"] = {{"seed", cfg.rng_seed}, {"index", index}, {"size", cfg.sample_size}};
  return out;
}

}  // namespace pareto

#endif  // PARETO_INSTANCE_HPP
