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
#include <vector>

#include "divmax/solvers.h"
#include "solver_internal.h"

namespace divmax {
namespace {

// Best-improvement single swaps within a cluster. `global` selects the
// union-wide dispersion objective.
SolveResult LocalSearch(const Instance& instance, const DistanceOracle& oracle,
                        const SolverConfig& config, bool global) {
  ValidateConfig(instance, config);
  const Solution init = config.initial
                            ? *config.initial
                            : SolveRn(instance, oracle, config).solution;
  const std::int64_t cap =
      config.max_ls_iters.value_or(10LL * instance.n * instance.max_budget());
  const auto members = internal::SortedMembers(instance);
  const bool quality = !instance.quality.is_zero();
  const double weight = quality ? instance.lambda : 1.0;

  internal::Run run(instance, oracle, global);
  QualityState q(instance.quality, instance.n);
  for (ClusterId j = 0; j < instance.num_clusters(); ++j) {
    for (ElementId v : init.selected[j]) {
      run.AddSingle(j, v, 0.0);
      q.Add(v);
    }
  }

  std::vector<double> peer(instance.n, 0.0);
  for (std::int64_t iter = 0; iter < cap; ++iter) {
    const SelectionState& state = run.state();
    const Solution current = state.ToSolution();
    const std::vector<ElementId> all = current.Union();
    ClusterId best_j = -1;
    ElementId best_out = kNoElement, best_in = kNoElement;
    double best_delta = 0.0;
    for (ClusterId j = 0; j < instance.num_clusters(); ++j) {
      const std::vector<ElementId>& s = state.selected(j);
      if (s.empty()) continue;
      const std::span<const ElementId> peers =
          global ? std::span<const ElementId>(all)
                 : std::span<const ElementId>(s);
      for (ElementId x : members[j]) peer[x] = oracle.SetDistanceSum(x, peers);
      for (ElementId u : s) {
        const double before = q.value();
        q.Remove(u);
        const double loss = before - q.value();
        const CellId cell_u = instance.cell_of(u);
        for (ElementId v : members[j]) {
          if (state.IsSelected(v)) continue;
          const CellId cell_v = instance.cell_of(v);
          if (cell_v != cell_u && state.IsCellUsed(cell_v)) continue;
          const double dd = peer[v] - oracle.Distance(u, v) - peer[u];
          const double dq = quality ? q.Marginal(v) - loss : 0.0;
          const double delta = dq + weight * dd;
          if (best_j == -1 || delta > best_delta) {
            best_j = j;
            best_out = u;
            best_in = v;
            best_delta = delta;
          }
        }
        q.Add(u);
      }
    }
    if (best_j == -1 || !(best_delta > config.epsilon * run.objective())) {
      break;
    }
    run.Swap(best_j, best_out, best_in, best_delta);
    q.Remove(best_out);
    q.Add(best_in);
  }
  return run.Finish();
}

}  // namespace

SolveResult SolveLsi(const Instance& instance, const DistanceOracle& oracle,
                     const SolverConfig& config) {
  return LocalSearch(instance, oracle, config, false);
}

SolveResult SolveLsg(const Instance& instance, const DistanceOracle& oracle,
                     const SolverConfig& config) {
  return LocalSearch(instance, oracle, config, true);
}

}  // namespace divmax
