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
 * @file utility.hpp
 * @brief Monotone submodular utilities: task coverage, facility location and
 *        Independent Cascade influence spread.
 *
 * A Utility is compiled once from its spec and is immutable afterwards.
 * UtilityState tracks one growing/shrinking solution and answers
 * f(S + e) and f(S - e) queries incrementally. Every incremental value is
 * bit-identical to a from-scratch evaluation of the same set.
 */

#ifndef PARETO_UTILITY_HPP
#define PARETO_UTILITY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pareto/core.hpp"
#include "pareto/matrix.hpp"
#include "pareto/rng.hpp"

namespace pareto {

/// f(Q) = |(union of skills of Q) ∩ task|, in raw counts.
struct CoverageSpec {
  std::vector<std::vector<std::uint32_t>> skills;  // per item
  std::vector<std::uint32_t> task;
};

/// f(Q) = sum_i max_{j in Q} M(i, j), with f(∅) = 0.
struct FacilityLocationSpec {
  SquareMatrix similarity;
};

struct InfluenceEdge {
  ItemId from = 0;
  ItemId to = 0;
  double probability = 0.0;
  friend bool operator==(const InfluenceEdge&, const InfluenceEdge&) = default;
};

/// Expected Independent Cascade spread, estimated over `num_samples` live-edge
/// worlds drawn once from `rng_seed` and shared by every evaluation.
struct InfluenceSpec {
  std::size_t n = 0;
  std::vector<InfluenceEdge> edges;
  std::size_t num_samples = 200;
  std::uint64_t rng_seed = 0;
};

using UtilitySpec = std::variant<CoverageSpec, FacilityLocationSpec, InfluenceSpec>;

enum class UtilityKind { kCoverage, kFacility, kInfluence };

inline const char* to_string(UtilityKind k) {
  switch (k) {
    case UtilityKind::kCoverage: return "coverage";
    case UtilityKind::kFacility: return "facility";
    case UtilityKind::kInfluence: return "influence";
  }
  return "?";
}

/// M(i, j) = exp(-kappa(i, j)). Throws on negative or NaN distances.
inline FacilityLocationSpec similarity_from_distances(const SquareMatrix& kappa) {
  SquareMatrix m(kappa.size());
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    for (std::size_t j = 0; j < kappa.size(); ++j) {
      const double d = kappa(i, j);
      if (!(d >= 0.0)) {
        throw std::invalid_argument("similarity_from_distances: negative distance at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
      m(i, j) = std::exp(-d);
    }
  }
  return FacilityLocationSpec{std::move(m)};
}

namespace detail {

// Sum of term(0..n-1) with a fixed four-way association. Every facility value
// goes through here, so incremental and from-scratch results agree bitwise.
template <typename Term>
double row_sum(std::size_t n, Term&& term) {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    a0 += term(i);
    a1 += term(i + 1);
    a2 += term(i + 2);
    a3 += term(i + 3);
  }
  for (; i < n; ++i) a0 += term(i);
  return (a0 + a1) + (a2 + a3);
}

}  // namespace detail

class UtilityState;

class Utility {
 public:
  explicit Utility(UtilitySpec spec) : spec_(std::move(spec)) {
    std::visit([this](const auto& s) { compile(s); }, spec_);
  }

  std::size_t size() const { return n_; }
  UtilityKind kind() const { return static_cast<UtilityKind>(spec_.index()); }
  const UtilitySpec& spec() const { return spec_; }

  double operator()(const Solution& s) const;

  /// f(S + e) - f(S). Throws if e is already in S.
  double marginal_gain(const Solution& s, ItemId e) const {
    if (s.contains(e)) {
      throw std::invalid_argument("marginal_gain: item " + std::to_string(e) +
                                  " already in solution");
    }
    return (*this)(s.with(e)) - (*this)(s);
  }

  double singleton(ItemId e) const {
    return (*this)(Solution::from_members(n_, {e}));
  }

  /// Upper bound on f for this instance (|T| for coverage, n otherwise).
  double max_value() const {
    return kind() == UtilityKind::kCoverage ? static_cast<double>(task_size_)
                                            : static_cast<double>(n_);
  }

  UtilityState state() const;
  UtilityState state(const Solution& start) const;

 private:
  friend class UtilityState;

  struct World {
    std::vector<std::uint32_t> offsets;  // CSR over live edges
    std::vector<ItemId> targets;
  };

  void compile(const CoverageSpec& s) {
    n_ = s.skills.size();
    std::vector<std::uint32_t> task = s.task;
    std::sort(task.begin(), task.end());
    task.erase(std::unique(task.begin(), task.end()), task.end());
    if (task.empty()) throw std::invalid_argument("coverage: task must be nonempty");
    task_size_ = task.size();
    item_skills_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::uint32_t skill : s.skills[i]) {
        auto it = std::lower_bound(task.begin(), task.end(), skill);
        if (it != task.end() && *it == skill) {
          item_skills_[i].push_back(static_cast<std::uint32_t>(it - task.begin()));
        }
      }
      auto& v = item_skills_[i];
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }

  void compile(const FacilityLocationSpec& s) {
    n_ = s.similarity.size();
    columns_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const double v = s.similarity(i, j);
        if (!(v >= 0.0) || v > 1.0) {
          throw std::invalid_argument("facility: similarity entries must lie in [0, 1]");
        }
        columns_[j * n_ + i] = v;
      }
    }
  }

  // Column e of the similarity matrix, contiguous.
  const double* column(ItemId e) const { return columns_.data() + static_cast<std::size_t>(e) * n_; }

  void compile(const InfluenceSpec& s) {
    n_ = s.n;
    if (s.num_samples < 1) throw std::invalid_argument("influence: num_samples must be >= 1");
    for (const auto& e : s.edges) {
      if (e.from >= n_ || e.to >= n_) throw std::invalid_argument("influence: edge endpoint out of range");
      if (!(e.probability >= 0.0 && e.probability <= 1.0)) {
        throw std::invalid_argument("influence: probabilities must lie in [0, 1]");
      }
    }
    worlds_.resize(s.num_samples);
    std::vector<std::uint32_t> degree(n_);
    for (std::size_t w = 0; w < s.num_samples; ++w) {
      std::vector<char> live(s.edges.size());
      std::fill(degree.begin(), degree.end(), 0);
      for (std::size_t k = 0; k < s.edges.size(); ++k) {
        live[k] = counter_uniform(s.rng_seed, w, k) < s.edges[k].probability;
        if (live[k]) ++degree[s.edges[k].from];
      }
      World& world = worlds_[w];
      world.offsets.assign(n_ + 1, 0);
      for (std::size_t v = 0; v < n_; ++v) world.offsets[v + 1] = world.offsets[v] + degree[v];
      world.targets.resize(world.offsets[n_]);
      std::vector<std::uint32_t> cursor(world.offsets.begin(), world.offsets.end() - 1);
      for (std::size_t k = 0; k < s.edges.size(); ++k) {
        if (live[k]) world.targets[cursor[s.edges[k].from]++] = s.edges[k].to;
      }
    }
  }

  UtilitySpec spec_;
  std::size_t n_ = 0;
  std::size_t task_size_ = 0;
  std::vector<std::vector<std::uint32_t>> item_skills_;
  std::vector<World> worlds_;
  std::vector<double> columns_;  // facility: transpose of the similarity matrix
};

/**
 * Incremental evaluator for one solution of a Utility. Not thread-safe (it
 * keeps scratch buffers); create one per thread. The Utility must outlive it.
 */
class UtilityState {
 public:
  explicit UtilityState(const Utility& f) : f_(&f), members_(f.size()) {
    const std::size_t n = f.size();
    switch (f.kind()) {
      case UtilityKind::kCoverage:
        counts_.assign(f.task_size_, 0);
        break;
      case UtilityKind::kFacility:
        best_.assign(n, 0.0);
        second_.assign(n, 0.0);
        best_owner_.assign(n, kNone);
        second_owner_.assign(n, kNone);
        break;
      case UtilityKind::kInfluence:
        visited_.assign(f.worlds_.size() * n, 0);
        stamp_.assign(n, 0);
        break;
    }
  }

  const Solution& solution() const { return members_; }
  double value() const { return value_; }

  /// f(S + e); returns value() if e is already a member.
  double value_with(ItemId e) const {
    if (members_.contains(e)) return value_;
    switch (f_->kind()) {
      case UtilityKind::kCoverage: {
        std::size_t gain = 0;
        for (auto k : f_->item_skills_[e]) gain += counts_[k] == 0;
        return static_cast<double>(covered_ + gain);
      }
      case UtilityKind::kFacility: {
        const double* col = f_->column(e);
        return detail::row_sum(best_.size(), [&](std::size_t i) { return std::max(best_[i], col[i]); });
      }
      case UtilityKind::kInfluence: {
        std::uint64_t extra = 0;
        for (std::size_t w = 0; w < f_->worlds_.size(); ++w) extra += reach_count(w, e);
        return influence_value(reached_ + extra);
      }
    }
    return value_;
  }

  /**
   * Marginal gain of e, 0 for members. Accumulated per covered skill, per row
   * or per reached node, so the rounded result never increases as S grows.
   * Greedy relies on this to evaluate gains lazily.
   */
  double gain(ItemId e) const {
    if (members_.contains(e)) return 0.0;
    switch (f_->kind()) {
      case UtilityKind::kCoverage: {
        std::size_t g = 0;
        for (auto k : f_->item_skills_[e]) g += counts_[k] == 0;
        return static_cast<double>(g);
      }
      case UtilityKind::kFacility: {
        const double* col = f_->column(e);
        return detail::row_sum(best_.size(), [&](std::size_t i) { return std::max(0.0, col[i] - best_[i]); });
      }
      case UtilityKind::kInfluence: {
        std::uint64_t extra = 0;
        for (std::size_t w = 0; w < f_->worlds_.size(); ++w) extra += reach_count(w, e);
        return influence_value(extra);
      }
    }
    return 0.0;
  }

  /// f(S - e); returns value() if e is not a member.
  double value_without(ItemId e) const {
    if (!members_.contains(e)) return value_;
    switch (f_->kind()) {
      case UtilityKind::kCoverage: {
        std::size_t loss = 0;
        for (auto k : f_->item_skills_[e]) loss += counts_[k] == 1;
        return static_cast<double>(covered_ - loss);
      }
      case UtilityKind::kFacility: {
        refresh_owners();
        return detail::row_sum(best_.size(), [&](std::size_t i) { return best_owner_[i] == e ? second_[i] : best_[i]; });
      }
      case UtilityKind::kInfluence: {
        Solution rest = members_.without(e);
        return (*f_)(rest);
      }
    }
    return value_;
  }

  void add(ItemId e) {
    if (!members_.insert(e)) return;
    switch (f_->kind()) {
      case UtilityKind::kCoverage:
        for (auto k : f_->item_skills_[e]) covered_ += counts_[k]++ == 0;
        value_ = static_cast<double>(covered_);
        break;
      case UtilityKind::kFacility: {
        const double* col = f_->column(e);
        for (std::size_t i = 0; i < best_.size(); ++i) best_[i] = std::max(best_[i], col[i]);
        owners_stale_ = true;
        value_ = facility_sum();
        break;
      }
      case UtilityKind::kInfluence: {
        const std::size_t n = f_->size();
        for (std::size_t w = 0; w < f_->worlds_.size(); ++w) {
          reached_ += bfs_mark(w, e, visited_.data() + w * n);
        }
        value_ = influence_value(reached_);
        break;
      }
    }
  }

  void remove(ItemId e) {
    if (!members_.erase(e)) return;
    switch (f_->kind()) {
      case UtilityKind::kCoverage:
        for (auto k : f_->item_skills_[e]) covered_ -= --counts_[k] == 0;
        value_ = static_cast<double>(covered_);
        break;
      case UtilityKind::kFacility: {
        std::fill(best_.begin(), best_.end(), 0.0);
        members_.for_each([&](ItemId j) {
          const double* col = f_->column(j);
          for (std::size_t i = 0; i < best_.size(); ++i) best_[i] = std::max(best_[i], col[i]);
        });
        owners_stale_ = true;
        value_ = facility_sum();
        break;
      }
      case UtilityKind::kInfluence: {
        std::fill(visited_.begin(), visited_.end(), 0);
        reached_ = 0;
        const std::size_t n = f_->size();
        const auto members = members_.members();
        for (std::size_t w = 0; w < f_->worlds_.size(); ++w) {
          for (ItemId s : members) reached_ += bfs_mark(w, s, visited_.data() + w * n);
        }
        value_ = influence_value(reached_);
        break;
      }
    }
  }

 private:
  static constexpr ItemId kNone = ~ItemId{0};

  // Owner and runner-up of every row. Only removals need them, so adds just
  // mark them stale and they are rebuilt from the members on first use.
  void refresh_owners() const {
    if (!owners_stale_) return;
    std::fill(best_owner_.begin(), best_owner_.end(), kNone);
    std::fill(second_.begin(), second_.end(), 0.0);
    std::fill(second_owner_.begin(), second_owner_.end(), kNone);
    members_.for_each([&](ItemId j) {
      const double* col = f_->column(j);
      for (std::size_t i = 0; i < best_.size(); ++i) {
        if (best_owner_[i] == kNone && col[i] == best_[i]) {
          best_owner_[i] = j;
        } else if (second_owner_[i] == kNone || col[i] > second_[i]) {
          second_[i] = col[i];
          second_owner_[i] = j;
        }
      }
    });
    owners_stale_ = false;
  }

  double facility_sum() const {
    return detail::row_sum(best_.size(), [&](std::size_t i) { return best_[i]; });
  }

  double influence_value(std::uint64_t reached) const {
    return static_cast<double>(reached) / static_cast<double>(f_->worlds_.size());
  }

  // Marks everything reachable from `src` in world w; returns newly marked count.
  std::uint64_t bfs_mark(std::size_t w, ItemId src, std::uint8_t* mark) {
    if (mark[src]) return 0;
    const auto& world = f_->worlds_[w];
    std::uint64_t count = 1;
    mark[src] = 1;
    queue_.clear();
    queue_.push_back(src);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const ItemId u = queue_[head];
      for (std::uint32_t k = world.offsets[u]; k < world.offsets[u + 1]; ++k) {
        const ItemId v = world.targets[k];
        if (!mark[v]) {
          mark[v] = 1;
          ++count;
          queue_.push_back(v);
        }
      }
    }
    return count;
  }

  // Nodes reachable from `src` in world w that are not yet visited by S.
  std::uint64_t reach_count(std::size_t w, ItemId src) const {
    const std::size_t n = f_->size();
    const std::uint8_t* visited = visited_.data() + w * n;
    if (visited[src]) return 0;
    const auto& world = f_->worlds_[w];
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    std::uint64_t count = 1;
    stamp_[src] = epoch_;
    queue_.clear();
    queue_.push_back(src);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const ItemId u = queue_[head];
      for (std::uint32_t k = world.offsets[u]; k < world.offsets[u + 1]; ++k) {
        const ItemId v = world.targets[k];
        if (!visited[v] && stamp_[v] != epoch_) {
          stamp_[v] = epoch_;
          ++count;
          queue_.push_back(v);
        }
      }
    }
    return count;
  }

  const Utility* f_;
  Solution members_;
  double value_ = 0.0;
  // coverage
  std::vector<std::uint32_t> counts_;
  std::size_t covered_ = 0;
  // facility location
  std::vector<double> best_;
  mutable std::vector<ItemId> best_owner_;
  mutable std::vector<double> second_;
  mutable std::vector<ItemId> second_owner_;
  mutable bool owners_stale_ = false;
  // influence
  std::vector<std::uint8_t> visited_;
  std::uint64_t reached_ = 0;
  mutable std::vector<std::uint32_t> stamp_;
  mutable std::uint32_t epoch_ = 0;
  mutable std::vector<ItemId> queue_;
};

inline UtilityState Utility::state() const { return UtilityState(*this); }

inline UtilityState Utility::state(const Solution& start) const {
  UtilityState st(*this);
  start.for_each([&](ItemId e) { st.add(e); });
  return st;
}

inline double Utility::operator()(const Solution& s) const {
  if (s.universe_size() != n_) throw std::invalid_argument("solution/utility size mismatch");
  switch (kind()) {
    case UtilityKind::kCoverage: {
      std::vector<char> hit(task_size_, 0);
      std::size_t covered = 0;
      s.for_each([&](ItemId e) {
        for (auto k : item_skills_[e]) {
          if (!hit[k]) {
            hit[k] = 1;
            ++covered;
          }
        }
      });
      return static_cast<double>(covered);
    }
    case UtilityKind::kFacility: {
      std::vector<double> best(n_, 0.0);
      s.for_each([&](ItemId j) {
        const double* col = column(j);
        for (std::size_t i = 0; i < n_; ++i) best[i] = std::max(best[i], col[i]);
      });
      return detail::row_sum(n_, [&](std::size_t i) { return best[i]; });
    }
    case UtilityKind::kInfluence: {
      std::vector<char> mark(n_);
      std::vector<ItemId> queue;
      std::uint64_t reached = 0;
      for (const auto& world : worlds_) {
        std::fill(mark.begin(), mark.end(), 0);
        queue.clear();
        s.for_each([&](ItemId e) {
          mark[e] = 1;
          queue.push_back(e);
        });
        for (std::size_t head = 0; head < queue.size(); ++head) {
          const ItemId u = queue[head];
          for (std::uint32_t k = world.offsets[u]; k < world.offsets[u + 1]; ++k) {
            const ItemId v = world.targets[k];
            if (!mark[v]) {
              mark[v] = 1;
              queue.push_back(v);
            }
          }
        }
        reached += queue.size();
      }
      return static_cast<double>(reached) / static_cast<double>(worlds_.size());
    }
  }
  return 0.0;
}

}  // namespace pareto

#endif  // PARETO_UTILITY_HPP
