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

#include <utility>
#include <vector>

#include "divmax/solvers.h"
#include "solver_internal.h"

namespace divmax {
namespace {

struct Candidate {
  ClusterId cluster = -1;
  ElementId x = kNoElement;
  ElementId y = kNoElement;
  double weight = 0.0;

  bool valid() const { return cluster != -1; }
};

bool Better(const Candidate& a, const Candidate& b) {
  if (!b.valid()) return a.valid();
  if (!a.valid()) return false;
  if (a.weight != b.weight) return a.weight > b.weight;
  if (a.cluster != b.cluster) return a.cluster < b.cluster;
  const auto ka = std::minmax(a.x, a.y);
  const auto kb = std::minmax(b.x, b.y);
  return ka < kb;
}

class GpaSolver {
 public:
  GpaSolver(const Instance& instance, const DistanceOracle& oracle,
            const SolverConfig& config)
      : instance_(instance),
        oracle_(oracle),
        alpha_(config.alpha),
        enhanced_(config.enhanced),
        quality_mode_(!instance.quality.is_zero()),
        policy_(EffectiveOddPolicy(instance, config)),
        budgets_(internal::PairPhaseBudgets(instance, policy_)),
        members_(internal::SortedMembers(instance)),
        memberships_(instance.n),
        run_(instance, oracle) {
    dist_to_sel_.resize(members_.size());
    for (ClusterId j = 0; j < instance.num_clusters(); ++j) {
      dist_to_sel_[j].assign(members_[j].size(), 0.0);
      for (std::size_t p = 0; p < members_[j].size(); ++p) {
        memberships_[members_[j][p]].push_back({j, static_cast<int>(p)});
      }
    }
  }

  SolveResult Solve() {
    std::vector<char> open(instance_.clusters.size());
    while (true) {
      bool any = false;
      for (ClusterId j = 0; j < instance_.num_clusters(); ++j) {
        open[j] = internal::CanTakePair(run_, budgets_, j);
        any = any || open[j];
      }
      if (!any) break;
      const Candidate best = enhanced_ ? EnhancedStep(open) : StandardStep(open);
      Add(best);
    }
    internal::FinishOddBudgets(run_, policy_);
    internal::FillShortClusters(run_);
    return run_.Finish();
  }

 private:
  bool Available(ElementId v) const { return run_.state().IsAvailable(v); }

  // Key of a candidate first endpoint: distance to S_j, or marginal
  // quality in quality mode.
  double FirstKey(ClusterId j, std::size_t pos) const {
    if (quality_mode_) return run_.quality().Marginal(members_[j][pos]);
    return dist_to_sel_[j][pos];
  }

  // Best first endpoint in cluster j; ties go to the smaller id.
  std::pair<ElementId, double> First(ClusterId j) const {
    ElementId x = kNoElement;
    double key = 0.0;
    for (std::size_t p = 0; p < members_[j].size(); ++p) {
      const ElementId v = members_[j][p];
      if (!Available(v)) continue;
      const double k = FirstKey(j, p);
      if (x == kNoElement || k > key) {
        x = v;
        key = k;
      }
    }
    return {x, key};
  }

  Candidate Partner(ClusterId j, ElementId x) {
    const auto& mem = members_[j];
    const CellId cell = instance_.cell_of(x);
    const int b = instance_.clusters[j].budget;
    Candidate out;
    if (quality_mode_) {
      for (ElementId y : mem) {
        if (y == x || !Available(y) || instance_.cell_of(y) == cell) continue;
        const double phi =
            run_.quality().MarginalPair(x, y) +
            PairWeightCombined(b, instance_.lambda, oracle_.Distance(x, y));
        if (!out.valid() || phi > out.weight) out = {j, x, y, phi};
      }
      return out;
    }
    scratch_.assign(mem.size(), -1.0);
    double furthest = -1.0;
    for (std::size_t p = 0; p < mem.size(); ++p) {
      const ElementId y = mem[p];
      if (y == x || !Available(y) || instance_.cell_of(y) == cell) continue;
      scratch_[p] = oracle_.Distance(x, y);
      if (scratch_[p] > furthest) furthest = scratch_[p];
    }
    if (furthest < 0.0) return out;
    std::size_t pick = mem.size();
    for (std::size_t p = 0; p < mem.size(); ++p) {
      if (scratch_[p] < 0.0 ||
          !AcceptSecondEndpointByDistance(scratch_[p], furthest, alpha_)) {
        continue;
      }
      if (pick == mem.size() || dist_to_sel_[j][p] > dist_to_sel_[j][pick] ||
          (dist_to_sel_[j][p] == dist_to_sel_[j][pick] &&
           scratch_[p] > scratch_[pick])) {
        pick = p;
      }
    }
    return {j, x, mem[pick], PairWeightDispersion(b, scratch_[pick])};
  }

  Candidate StandardStep(const std::vector<char>& open) {
    Candidate best;
    for (ClusterId j = 0; j < instance_.num_clusters(); ++j) {
      if (!open[j]) continue;
      const ElementId x = First(j).first;
      const Candidate c = Partner(j, x);
      if (Better(c, best)) best = c;
    }
    return best;
  }

  // Covering scheme: each round draws a first endpoint from a still
  // uncovered open cluster and pairs it within every open cluster that
  // contains it.
  Candidate EnhancedStep(const std::vector<char>& open) {
    std::vector<char> covered(instance_.clusters.size(), 0);
    Candidate best;
    while (true) {
      ElementId x = kNoElement;
      double key = 0.0;
      for (ClusterId j = 0; j < instance_.num_clusters(); ++j) {
        if (!open[j] || covered[j]) continue;
        const auto [v, k] = First(j);
        if (v != kNoElement && (x == kNoElement || k > key)) {
          x = v;
          key = k;
        }
      }
      if (x == kNoElement) break;
      for (const auto& [k, pos] : memberships_[x]) {
        covered[k] = 1;
        if (!open[k]) continue;
        const Candidate c = Partner(k, x);
        if (Better(c, best)) best = c;
      }
    }
    return best;
  }

  void Add(const Candidate& c) {
    run_.AddPair(c.cluster, c.x, c.y, c.weight);
    const auto& mem = members_[c.cluster];
    auto& dist = dist_to_sel_[c.cluster];
    for (std::size_t p = 0; p < mem.size(); ++p) {
      dist[p] += oracle_.Distance(mem[p], c.x) + oracle_.Distance(mem[p], c.y);
    }
  }

  const Instance& instance_;
  const DistanceOracle& oracle_;
  double alpha_;
  bool enhanced_;
  bool quality_mode_;
  OddPolicy policy_;
  std::vector<int> budgets_;
  std::vector<std::vector<ElementId>> members_;
  // d(member, S_j) per cluster, aligned with members_.
  std::vector<std::vector<double>> dist_to_sel_;
  std::vector<std::vector<std::pair<ClusterId, int>>> memberships_;
  std::vector<double> scratch_;
  internal::Run run_;
};

}  // namespace

SolveResult SolveGpa(const Instance& instance, const DistanceOracle& oracle,
                     const SolverConfig& config) {
  ValidateConfig(instance, config);
  return GpaSolver(instance, oracle, config).Solve();
}

}  // namespace divmax
