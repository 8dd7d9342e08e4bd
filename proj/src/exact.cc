// Copyright 2026 The Authors.
//
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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "divmax/solvers.h"

namespace divmax {
namespace {

double Binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

class ExactSearch {
 public:
  ExactSearch(const Instance& instance, const DistanceOracle& oracle)
      : instance_(instance),
        oracle_(oracle),
        quality_mode_(!instance.quality.is_zero()),
        weight_(quality_mode_ ? instance.lambda : 1.0),
        state_(instance),
        quality_(instance.quality, instance.n) {
    const int m = instance.num_clusters();
    members_.resize(m);
    max_pair_.assign(m, 0.0);
    for (ClusterId j = 0; j < m; ++j) {
      members_[j] = instance.clusters[j].members;
      std::sort(members_[j].begin(), members_[j].end());
      const auto& mem = members_[j];
      for (std::size_t a = 0; a < mem.size(); ++a) {
        for (std::size_t b = a + 1; b < mem.size(); ++b) {
          max_pair_[j] = std::max(max_pair_[j], oracle.Distance(mem[a], mem[b]));
        }
      }
    }
    // Bound on the dispersion clusters j.. can still add from scratch.
    tail_.assign(m + 1, 0.0);
    for (ClusterId j = m - 1; j >= 0; --j) {
      const int k = std::min<int>(instance.clusters[j].budget,
                                  static_cast<int>(members_[j].size()));
      tail_[j] = tail_[j + 1] + Binomial(k, 2) * max_pair_[j];
    }
    if (quality_mode_) {
      std::vector<ElementId> everything(instance.n);
      for (int v = 0; v < instance.n; ++v) everything[v] = v;
      quality_all_ = instance.quality.Value(everything);
    }
  }

  ExactResult Run() {
    best_ = state_.ToSolution();
    best_score_ = Current();
    Cluster(0);
    ExactResult out;
    out.solution = best_;
    out.objective = CombinedObjective(instance_, oracle_, best_);
    out.score = Score(instance_, out.objective);
    out.nodes = nodes_;
    return out;
  }

 private:
  double Current() const {
    return (quality_mode_ ? quality_.value() : 0.0) + weight_ * dispersion_;
  }

  double Bound(ClusterId j, std::size_t next) const {
    const int s = state_.size(j);
    const int left = static_cast<int>(members_[j].size() - next);
    const int r = std::min(instance_.clusters[j].budget - s, left);
    const double here = (static_cast<double>(r) * s + Binomial(r, 2)) *
                        max_pair_[j];
    double bound = Current() + weight_ * (here + tail_[j + 1]);
    if (quality_mode_) bound += quality_all_ - quality_.value();
    return bound;
  }

  void Cluster(ClusterId j) {
    ++nodes_;
    if (j == instance_.num_clusters()) {
      const double score = Current();
      if (score > best_score_) {
        best_score_ = score;
        best_ = state_.ToSolution();
      }
      return;
    }
    Member(j, 0);
  }

  // Take-first enumeration of S_j over members_[j][next..].
  void Member(ClusterId j, std::size_t next) {
    if (Bound(j, next) <= best_score_ * (1.0 + 1e-12) + 1e-300) return;
    const auto& mem = members_[j];
    if (next == mem.size() || state_.size(j) == instance_.clusters[j].budget) {
      Cluster(j + 1);
      return;
    }
    const ElementId v = mem[next];
    if (state_.IsAvailable(v)) {
      const double peers = oracle_.SetDistanceSum(v, state_.selected(j));
      state_.Add(j, v);
      quality_.Add(v);
      dispersion_ += peers;
      Member(j, next + 1);
      dispersion_ -= peers;
      quality_.Remove(v);
      state_.Remove(j, v);
    }
    Member(j, next + 1);
  }

  const Instance& instance_;
  const DistanceOracle& oracle_;
  bool quality_mode_;
  double weight_;
  SelectionState state_;
  QualityState quality_;
  double dispersion_ = 0.0;
  double quality_all_ = 0.0;
  std::vector<std::vector<ElementId>> members_;
  std::vector<double> max_pair_;
  std::vector<double> tail_;
  Solution best_;
  double best_score_ = 0.0;
  std::int64_t nodes_ = 0;
};

}  // namespace

double ExactSearchSpace(const Instance& instance) {
  double total = 1.0;
  for (const Cluster& c : instance.clusters) {
    const int size = static_cast<int>(c.members.size());
    double options = 0.0;
    for (int k = 0; k <= std::min(c.budget, size); ++k) {
      options += Binomial(size, k);
    }
    total *= options;
  }
  return total;
}

ExactResult SolveExact(const Instance& instance, const DistanceOracle& oracle,
                       const ExactLimits& limits) {
  const double space = ExactSearchSpace(instance);
  if (space > limits.max_search_space) {
    throw OracleLimitExceeded("instance too large for oracle: search space " +
                              std::to_string(space) + " exceeds " +
                              std::to_string(limits.max_search_space));
  }
  return ExactSearch(instance, oracle).Run();
}

}  // namespace divmax
