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

// pareto_cli: generate instances, sample them, run frontier algorithms,
// check them against brute force and aggregate results.
//
// Exit codes: 0 success or PASS, 1 I/O failure, 2 usage or validation error,
// 3 instance too large for the oracle, 4 oracle FAIL.

#include <glob.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pareto/pareto.hpp"

namespace {

using pareto::format_double;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTooLarge = 3;
constexpr int kExitFail = 4;

std::uint64_t env_seed() {
  const char* s = std::getenv("PARETO_SUBMOD_SEED");
  if (s == nullptr || *s == '\0') return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("PARETO_SUBMOD_SEED is not an unsigned integer: ") + s);
  }
}

pareto::CostKind parse_cost(const std::string& s) {
  if (s == "cardinality") return pareto::CostKind::kCardinality;
  if (s == "linear") return pareto::CostKind::kLinear;
  if (s == "diameter") return pareto::CostKind::kDiameter;
  throw std::invalid_argument("unknown cost kind '" + s + "'");
}

std::string strip_json_suffix(const std::string& path) {
  const std::string ext = ".json";
  if (path.size() > ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
    return path.substr(0, path.size() - ext.size());
  }
  return path;
}

std::string base_name(const std::string& path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

void echo_provenance(int argc, char** argv, std::uint64_t seed) {
  std::cout << "provenance:";
  for (int i = 0; i < argc; ++i) std::cout << ' ' << argv[i];
  std::cout << " (effective seed " << seed << ")\n";
}

void print_warnings(const pareto::Instance& inst) {
  for (const auto& w : inst.warnings) std::cerr << "warning: " << w << "\n";
}

std::vector<std::string> expand_patterns(const std::vector<std::string>& patterns) {
  std::set<std::string> files;
  for (const auto& p : patterns) {
    glob_t g{};
    if (::glob(p.c_str(), 0, nullptr, &g) == 0) {
      for (std::size_t i = 0; i < g.gl_pathc; ++i) files.insert(g.gl_pathv[i]);
    }
    ::globfree(&g);
  }
  return {files.begin(), files.end()};
}

std::vector<double> split_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    std::size_t used = 0;
    out.push_back(std::stod(tok, &used));
    if (used != tok.size()) throw std::invalid_argument("bad number '" + tok + "'");
  }
  return out;
}

/// uniform:N | linear:LO:HI:DELTA | log:LO:HI:EPS | values:A,B,...
std::vector<double> parse_grid(const std::string& spec, const std::vector<pareto::Frontier>& frontiers) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  try {
    if (kind == "uniform") return pareto::uniform_cost_grid(frontiers, std::stoul(rest));
    if (kind == "values") {
      pareto::GridSpec g;
      g.kind = pareto::GridSpec::Kind::kExplicit;
      g.values = split_doubles(rest);
      return g.build();
    }
    std::vector<double> parts;
    std::stringstream ss(rest);
    for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(std::stod(tok));
    if (parts.size() == 3 && (kind == "linear" || kind == "log")) {
      pareto::GridSpec g;
      g.kind = kind == "linear" ? pareto::GridSpec::Kind::kLinear : pareto::GridSpec::Kind::kLogarithmic;
      g.lo = parts[0];
      g.hi = parts[1];
      g.step = parts[2];
      return g.build();
    }
  } catch (const std::logic_error& e) {
    throw std::invalid_argument("bad grid '" + spec + "': " + e.what());
  }
  throw std::invalid_argument("bad grid '" + spec + "' (uniform:N, linear:LO:HI:DELTA, log:LO:HI:EPS, values:A,B,...)");
}

struct GenArgs {
  std::string family;
  std::string out;
  std::size_t n = 0;
  std::string cost = "linear";
  std::size_t skills = 40, min_skills = 2, max_skills = 6, task = 15;
  double box = 10.0;
  double density = 0.05, probability = 0.01, alpha = 0.1;
  std::size_t samples = 200;
};

int cmd_gen(const GenArgs& a, std::uint64_t seed) {
  pareto::Instance inst;
  const auto cost = parse_cost(a.cost);
  if (a.family == "coverage") {
    pareto::CoverageParams p;
    p.n_experts = a.n;
    p.n_skills = a.skills;
    p.min_skills = a.min_skills;
    p.max_skills = a.max_skills;
    p.task_size = a.task;
    p.cost = cost;
    p.rng_seed = seed;
    inst = pareto::gen_coverage(p);
  } else if (a.family == "facility") {
    pareto::FacilityParams p;
    p.n = a.n;
    p.box = a.box;
    p.cost = cost;
    p.rng_seed = seed;
    inst = pareto::gen_facility(p);
  } else {
    pareto::InfluenceParams p;
    p.n = a.n;
    p.edge_density = a.density;
    p.probability = a.probability;
    p.alpha = a.alpha;
    p.num_samples = a.samples;
    p.cost = cost;
    p.rng_seed = seed;
    inst = pareto::gen_influence(p);
  }
  // Re-validate through the loader path before writing.
  inst = pareto::instance_from_json(pareto::instance_to_json(inst));
  print_warnings(inst);
  pareto::save_instance(a.out, inst);
  std::cout << "wrote " << a.out << " (" << a.family << ", n=" << inst.n << ", cost=" << a.cost << ")\n";
  std::cout << "params: " << inst.provenance.dump() << "\n";
  return kExitOk;
}

struct SampleArgs {
  std::string instance;
  std::string out;
  std::size_t size = 0;
  std::size_t count = 10;
};

int cmd_sample(const SampleArgs& a, std::uint64_t seed) {
  const auto inst = pareto::load_instance(a.instance);
  print_warnings(inst);
  pareto::SampleConfig cfg{a.size, a.count, seed};
  cfg.validate(inst.n);
  for (std::size_t i = 0; i < cfg.num_samples; ++i) {
    const std::string path = a.out + "_" + std::to_string(i) + ".json";
    pareto::save_instance(path, pareto::sample_subinstance(inst, cfg, i));
    std::cout << "wrote " << path << "\n";
  }
  return kExitOk;
}

struct RunArgs {
  std::string instance;
  std::string algorithm;
  std::string out;
  std::size_t tau = 1;
  double eps = 0.1;
  double delta = 0.0;
  double budget = 0.0;
  std::string budgets, targets, k_grid;
  double alpha1 = 0.0, alpha2 = 0.0;
};

pareto::RunOptions to_options(const RunArgs& a, CLI::App* sub, std::uint64_t seed, std::size_t jobs) {
  pareto::RunOptions o;
  o.tau = a.tau;
  o.eps = a.eps;
  if (!(o.eps > 0.0)) throw std::invalid_argument("--eps must be > 0");
  if (sub->count("--delta")) o.delta = a.delta;
  if (sub->count("--budget")) o.budget = a.budget;
  if (!a.budgets.empty()) o.budgets = split_doubles(a.budgets);
  if (!a.targets.empty()) o.targets = split_doubles(a.targets);
  if (!a.k_grid.empty()) {
    std::vector<std::size_t> ks;
    for (double k : split_doubles(a.k_grid)) {
      if (k < 0 || k != std::floor(k)) throw std::invalid_argument("--k-grid needs non-negative integers");
      ks.push_back(static_cast<std::size_t>(k));
    }
    o.k_grid = ks;
  }
  o.seed = seed;
  o.jobs = jobs;
  return o;
}

int cmd_run(const RunArgs& a, const pareto::RunOptions& o) {
  const auto inst = pareto::load_instance(a.instance);
  print_warnings(inst);
  const auto r = pareto::run_algorithm(inst, a.algorithm, o);
  const std::string stem = a.out.empty() ? strip_json_suffix(a.instance) + "_" + a.algorithm : a.out;
  auto j = pareto::result_to_json(r, inst.n, base_name(strip_json_suffix(a.instance)));
  j["cost"] = pareto::to_string(inst.cost_kind());
  auto prov = inst.provenance;
  prov.erase("sample");
  j["instance_provenance"] = prov;
  pareto::write_json(stem + ".json", j);
  pareto::write_text(stem + ".csv", pareto::frontier_to_csv(r.frontier));
  std::cout << r.algorithm << ": frontier size " << r.frontier.size() << ", candidates " << r.candidate_count
            << ", runtime " << format_double(r.runtime_seconds) << " s\n";
  if (r.unreachable_targets > 0) std::cout << "unreachable targets: " << r.unreachable_targets << "\n";
  std::cout << "wrote " << stem << ".json and " << stem << ".csv\n";
  return kExitOk;
}

int cmd_oracle_check(const RunArgs& a, pareto::RunOptions o, CLI::App* sub) {
  const auto inst = pareto::load_instance(a.instance);
  print_warnings(inst);
  if (a.algorithm == "fc-greedy" && !sub->count("--tau")) o.tau = 2;
  std::optional<pareto::ApproxParams> params = pareto::default_guarantee(inst, a.algorithm, o);
  if (sub->count("--alpha1") || sub->count("--alpha2")) {
    const double a1 = sub->count("--alpha1") ? a.alpha1 : (params ? params->alpha1 : 1.0);
    const double a2 = sub->count("--alpha2") ? a.alpha2 : (params ? params->alpha2 : 1.0);
    params = pareto::ApproxParams(a1, a2);
  }
  if (!params) {
    throw std::invalid_argument(a.algorithm + " has no default guarantee on this instance; pass --alpha1/--alpha2");
  }
  const auto check = pareto::oracle_check(inst, a.algorithm, o, *params);
  std::cout << (check.verdict ? "PASS " : "FAIL ") << a.algorithm << " at (alpha1, alpha2) = ("
            << format_double(params->alpha1) << ", " << format_double(params->alpha2) << "): approximate frontier "
            << check.result.frontier.size() << " points, exact frontier " << check.exact.size() << " points\n";
  if (!check.verdict) {
    const auto& w = *check.verdict.witness;
    std::cout << "witness: exact point cost " << format_double(w.cost) << ", utility " << format_double(w.utility)
              << ", solution {" << pareto::join_members(w.solution, ',') << "} is not covered\n";
    return kExitFail;
  }
  return kExitOk;
}

struct AggregateArgs {
  std::vector<std::string> patterns;
  std::string grid = "uniform:50";
  std::string out;
};

int cmd_aggregate(const AggregateArgs& a) {
  const auto files = expand_patterns(a.patterns);
  if (files.empty()) throw pareto::IoError("no result files match the given pattern(s)");
  std::vector<pareto::Frontier> frontiers;
  std::string algorithm, cost;
  nlohmann::json provenance;
  for (const auto& path : files) {
    const auto j = pareto::read_json(path);
    const auto r = pareto::result_from_json(j);
    const auto prov = j.value("instance_provenance", nlohmann::json::object());
    const auto c = j.value("cost", std::string("unknown"));
    if (frontiers.empty()) {
      algorithm = r.algorithm;
      cost = c;
      provenance = prov;
    } else if (r.algorithm != algorithm || c != cost || prov != provenance) {
      std::cerr << "warning: " << path << " comes from a different instance or algorithm; aggregating anyway\n";
    }
    frontiers.push_back(r.frontier);
  }
  const auto grid = parse_grid(a.grid, frontiers);
  const auto curve = pareto::aggregate(frontiers, grid);
  pareto::write_text(a.out + ".csv", pareto::curve_to_csv(curve));
  auto j = pareto::curve_to_json(curve, frontiers);
  j["algorithm"] = algorithm;
  j["cost"] = cost;
  j["inputs"] = files;
  pareto::write_json(a.out + ".json", j);
  std::cout << "aggregated " << files.size() << " result(s), mean frontier size "
            << format_double(curve.mean_frontier_size) << "; wrote " << a.out << ".csv and " << a.out << ".json\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate Pareto frontiers of submodular utility versus cost"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value settings file; command-line flags take precedence");

  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  app.add_option("--seed", seed, "Random seed (default: $PARETO_SUBMOD_SEED or 0)");
  app.add_option("--jobs", jobs, "Worker threads; results do not depend on it")->check(CLI::PositiveNumber);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic instance");
  gen_cmd->add_option("family", gen.family, "coverage | facility | influence")
      ->required()
      ->check(CLI::IsMember({"coverage", "facility", "influence"}));
  gen_cmd->add_option("-o,--out", gen.out, "Output instance file")->required();
  gen_cmd->add_option("--n", gen.n, "Number of items")->required();
  gen_cmd->add_option("--cost", gen.cost, "cardinality | linear | diameter")
      ->check(CLI::IsMember({"cardinality", "linear", "diameter"}));
  gen_cmd->add_option("--skills", gen.skills, "coverage: size of the skill universe");
  gen_cmd->add_option("--min-skills", gen.min_skills, "coverage: fewest skills per expert (>= 2)");
  gen_cmd->add_option("--max-skills", gen.max_skills, "coverage: most skills per expert");
  gen_cmd->add_option("--task", gen.task, "coverage: number of task skills");
  gen_cmd->add_option("--box", gen.box, "facility: side of the square");
  gen_cmd->add_option("--density", gen.density, "influence: edge probability of each pair");
  gen_cmd->add_option("--p", gen.probability, "influence: activation probability");
  gen_cmd->add_option("--alpha", gen.alpha, "influence: scale in exp(-alpha * shared neighbours)");
  gen_cmd->add_option("--samples", gen.samples, "influence: number of live-edge worlds");

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Write random sub-instances");
  sample_cmd->add_option("instance", sample.instance, "Instance file")->required();
  sample_cmd->add_option("--size", sample.size, "Items per sample")->required();
  sample_cmd->add_option("--count", sample.count, "Number of samples")->check(CLI::PositiveNumber);
  sample_cmd->add_option("-o,--out", sample.out, "Output prefix; files are PREFIX_<i>.json")->required();

  RunArgs run;
  auto add_run_options = [](CLI::App* cmd, RunArgs& r) {
    cmd->add_option("instance", r.instance, "Instance file")->required();
    cmd->add_option("algorithm", r.algorithm, "Algorithm name")
        ->required()
        ->check(CLI::IsMember(pareto::algorithm_names()));
    cmd->add_option("--tau", r.tau, "Seed size (0..3)")->check(CLI::Range(0, 3));
    cmd->add_option("--eps", r.eps, "Log-grid ratio epsilon");
    cmd->add_option("--delta", r.delta, "Use linear grids with this step")->check(CLI::PositiveNumber);
    cmd->add_option("--budget", r.budget, "pareto-greedy: largest budget (default c(V))");
    cmd->add_option("--budgets", r.budgets, "Explicit comma-separated cost thresholds");
    cmd->add_option("--targets", r.targets, "Explicit comma-separated utility targets");
    cmd->add_option("--k-grid", r.k_grid, "random: comma-separated subset sizes");
  };
  auto* run_cmd = app.add_subcommand("run", "Compute an approximate Pareto frontier");
  add_run_options(run_cmd, run);
  run_cmd->add_option("-o,--out", run.out, "Output stem; writes STEM.json and STEM.csv");

  RunArgs check;
  auto* check_cmd = app.add_subcommand("oracle-check", "Verify an algorithm against brute force");
  add_run_options(check_cmd, check);
  check_cmd->add_option("--alpha1", check.alpha1, "Utility factor (default: the algorithm's guarantee)");
  check_cmd->add_option("--alpha2", check.alpha2, "Cost factor (default: the algorithm's guarantee)");

  AggregateArgs agg;
  auto* agg_cmd = app.add_subcommand("aggregate", "Mean frontier over several results");
  agg_cmd->add_option("results", agg.patterns, "Result JSON files or glob patterns")->required();
  agg_cmd->add_option("--grid", agg.grid, "uniform:N | linear:LO:HI:DELTA | log:LO:HI:EPS | values:A,B,...");
  agg_cmd->add_option("-o,--out", agg.out, "Output stem; writes STEM.csv and STEM.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.get_option("--seed")->count() == 0) seed = env_seed();
    echo_provenance(argc, argv, seed);
    if (*gen_cmd) return cmd_gen(gen, seed);
    if (*sample_cmd) return cmd_sample(sample, seed);
    if (*run_cmd) return cmd_run(run, to_options(run, run_cmd, seed, jobs));
    if (*check_cmd) return cmd_oracle_check(check, to_options(check, check_cmd, seed, jobs), check_cmd);
    if (*agg_cmd) return cmd_aggregate(agg);
  } catch (const pareto::OracleLimitError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const pareto::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
