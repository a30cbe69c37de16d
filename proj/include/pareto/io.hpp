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

// Text serialization of frontiers and frontier results.

#ifndef PARETO_IO_HPP
#define PARETO_IO_HPP

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "pareto/core.hpp"
#include "pareto/frontiers.hpp"

namespace pareto {

/// Thrown on unreadable or unwritable files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal text that parses back to exactly `v`.
inline std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, end);
}

inline std::string join_members(const Solution& s, char sep = ';') {
  std::string out;
  s.for_each([&](ItemId e) {
    if (!out.empty()) out += sep;
    out += std::to_string(e);
  });
  return out;
}

/// CSV with header `cost,utility,solution`; members are joined by ';'.
inline std::string frontier_to_csv(const Frontier& f) {
  std::string out = "cost,utility,solution\n";
  for (const auto& p : f) {
    out += format_double(p.cost);
    out += ',';
    out += format_double(p.utility);
    out += ',';
    out += join_members(p.solution);
    out += '\n';
  }
  return out;
}

inline nlohmann::json frontier_to_json(const Frontier& f) {
  auto arr = nlohmann::json::array();
  for (const auto& p : f) {
    arr.push_back({{"cost", p.cost}, {"utility", p.utility}, {"solution", p.solution.members()}});
  }
  return arr;
}

inline Frontier frontier_from_json(const nlohmann::json& j, std::size_t n) {
  if (!j.is_array()) throw std::invalid_argument("frontier must be a JSON array");
  std::vector<ParetoPoint> pts;
  for (const auto& e : j) {
    Solution s = Solution::from_members(n, e.at("solution").get<std::vector<ItemId>>());
    pts.push_back(ParetoPoint{std::move(s), e.at("utility").get<double>(), e.at("cost").get<double>()});
  }
  return Frontier::from_sorted(std::move(pts));
}

/// `n` is the ground-set size; `instance` an optional label used to detect
/// mixed inputs when aggregating.
inline nlohmann::json result_to_json(const FrontierResult& r, std::size_t n, const std::string& instance = "") {
  nlohmann::json j;
  j["algorithm"] = r.algorithm;
  j["instance"] = instance;
  j["n"] = n;
  j["params"] = r.params;
  j["candidate_count"] = r.candidate_count;
  j["runtime_seconds"] = r.runtime_seconds;
  j["unreachable_targets"] = r.unreachable_targets;
  j["frontier_size"] = r.frontier.size();
  j["frontier"] = frontier_to_json(r.frontier);
  return j;
}

inline FrontierResult result_from_json(const nlohmann::json& j) {
  FrontierResult r;
  r.algorithm = j.at("algorithm").get<std::string>();
  r.params = j.value("params", nlohmann::json::object());
  r.candidate_count = j.value("candidate_count", std::size_t{0});
  r.runtime_seconds = j.value("runtime_seconds", 0.0);
  r.unreachable_targets = j.value("unreachable_targets", std::size_t{0});
  r.frontier = frontier_from_json(j.at("frontier"), j.at("n").get<std::size_t>());
  return r;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

inline nlohmann::json read_json(const std::string& path) {
  const std::string text = read_text(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

inline void write_json(const std::string& path, const nlohmann::json& j) { write_text(path, j.dump(2) + "\n"); }

}  // namespace pareto

#endif  // PARETO_IO_HPP
