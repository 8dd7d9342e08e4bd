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
#include <numeric>
#include <random>
#include <vector>

#include "divmax/solvers.h"
#include "solver_internal.h"

namespace divmax {
namespace {

std::vector<ClusterId> BaseOrder(const Instance& instance,
                                 const SolverConfig& config) {
  if (!config.cluster_order.empty()) return config.cluster_order;
  std::vector<ClusterId> order(instance.clusters.size());
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

SolveResult SolveGelms(const Instance& instance, const DistanceOracle& oracle,
                       const SolverConfig& config) {
  ValidateConfig(instance, config);
  const auto members = internal::SortedMembers(instance);
  const bool quality = !instance.quality.is_zero();
  internal::Run run(instance, oracle);
  for (ClusterId j : BaseOrder(instance, config)) {
    const int budget = instance.clusters[j].budget;
    while (run.state().size(j) < budget) {
      ElementId best = kNoElement;
      double best_gain = 0.0;
      for (ElementId v : members[j]) {
        if (!run.state().IsAvailable(v)) continue;
        const double d = oracle.SetDistanceSum(v, run.state().selected(j));
        // Half the marginal quality, as in the single-cluster greedy with a
        // factor-2 guarantee.
        const double gain =
            quality ? 0.5 * run.quality().Marginal(v) + instance.lambda * d
                    : d;
        if (best == kNoElement || gain > best_gain) {
          best = v;
          best_gain = gain;
        }
      }
      if (best == kNoElement) break;
      run.AddSingle(j, best, best_gain);
    }
  }
  return run.Finish();
}

SolveResult SolveMc(const Instance& instance, const DistanceOracle& oracle,
                    const SolverConfig& config) {
  ValidateConfig(instance, config);
  const auto members = internal::SortedMembers(instance);
  internal::Run run(instance, oracle);
  while (true) {
    ClusterId best_j = -1;
    ElementId best = kNoElement;
    double best_gain = 0.0;
    for (ClusterId j = 0; j < instance.num_clusters(); ++j) {
      if (run.state().size(j) >= instance.clusters[j].budget) continue;
      for (ElementId v : members[j]) {
        if (!run.state().IsAvailable(v)) continue;
        const double gain = run.quality().Marginal(v);
        if (best == kNoElement || gain > best_gain) {
          best_j = j;
          best = v;
          best_gain = gain;
        }
      }
    }
    if (best == kNoElement) break;
    run.AddSingle(best_j, best, best_gain);
  }
  return run.Finish();
}

SolveResult SolveRn(const Instance& instance, const DistanceOracle& oracle,
                    const SolverConfig& config) {
  ValidateConfig(instance, config);
  std::mt19937_64 rng(config.seed);
  std::vector<ClusterId> order = BaseOrder(instance, config);
  std::shuffle(order.begin(), order.end(), rng);
  internal::Run run(instance, oracle);
  for (ClusterId j : order) {
    const int budget = instance.clusters[j].budget;
    while (run.state().size(j) < budget) {
      const std::vector<ElementId> avail = run.state().Available(j);
      if (avail.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, avail.size() - 1);
      run.AddSingle(j, avail[pick(rng)], 0.0);
    }
  }
  return run.Finish();
}

}  // namespace divmax
