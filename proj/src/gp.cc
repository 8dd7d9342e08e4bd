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

#include <cstddef>
#include <vector>

#include "divmax/solvers.h"
#include "solver_internal.h"

namespace divmax {
namespace {

// Past this many entries over all clusters, distances come straight from the
// oracle instead of per-cluster tables.
constexpr std::size_t kLocalTableLimit = std::size_t{1} << 24;

// Distances among the members of one cluster, row-major by member position.
// The pair scan touches only these, so a compact copy keeps it in cache
// where rows of the full matrix would not fit.
struct LocalTable {
  std::size_t size = 0;
  std::vector<double> values;

  double at(std::size_t a, std::size_t c) const { return values[a * size + c]; }
};

std::vector<LocalTable> BuildTables(
    const DistanceOracle& oracle,
    const std::vector<std::vector<ElementId>>& members) {
  std::size_t total = 0;
  for (const auto& mem : members) total += mem.size() * mem.size();
  if (total > kLocalTableLimit) return {};
  std::vector<LocalTable> tables(members.size());
  for (std::size_t j = 0; j < members.size(); ++j) {
    const auto& mem = members[j];
    LocalTable& t = tables[j];
    t.size = mem.size();
    t.values.assign(t.size * t.size, 0.0);
    for (std::size_t a = 0; a < t.size; ++a) {
      for (std::size_t c = a + 1; c < t.size; ++c) {
        t.values[a * t.size + c] = t.values[c * t.size + a] =
            oracle.Distance(mem[a], mem[c]);
      }
    }
  }
  return tables;
}

}  // namespace

SolveResult SolveGp(const Instance& instance, const DistanceOracle& oracle,
                    const SolverConfig& config) {
  ValidateConfig(instance, config);
  const OddPolicy policy = EffectiveOddPolicy(instance, config);
  const std::vector<int> budgets =
      internal::PairPhaseBudgets(instance, policy);
  const auto members = internal::SortedMembers(instance);
  const bool quality = !instance.quality.is_zero();
  const std::vector<LocalTable> tables = BuildTables(oracle, members);
  internal::Run run(instance, oracle);

  std::vector<std::size_t> avail;  // positions in members[j]
  while (true) {
    ClusterId best_j = -1;
    ElementId best_u = kNoElement, best_v = kNoElement;
    double best_gain = 0.0;
    for (ClusterId j = 0; j < instance.num_clusters(); ++j) {
      if (!internal::CanTakePair(run, budgets, j)) continue;
      const int b = instance.clusters[j].budget;
      const auto& mem = members[j];
      avail.clear();
      for (std::size_t p = 0; p < mem.size(); ++p) {
        if (run.state().IsAvailable(mem[p])) avail.push_back(p);
      }
      for (std::size_t a = 0; a < avail.size(); ++a) {
        const ElementId u = mem[avail[a]];
        for (std::size_t c = a + 1; c < avail.size(); ++c) {
          const ElementId v = mem[avail[c]];
          if (instance.cell_of(u) == instance.cell_of(v)) continue;
          const double d = tables.empty() ? oracle.Distance(u, v)
                                          : tables[j].at(avail[a], avail[c]);
          const double gain =
              quality ? run.quality().MarginalPair(u, v) +
                            PairWeightCombined(b, instance.lambda, d)
                      : PairWeightDispersion(b, d);
          // Scan order already realizes the (cluster, min id, max id)
          // tie-break, so only a strictly larger gain wins.
          if (best_j == -1 || gain > best_gain) {
            best_j = j;
            best_u = u;
            best_v = v;
            best_gain = gain;
          }
        }
      }
    }
    if (best_j == -1) break;
    run.AddPair(best_j, best_u, best_v, best_gain);
  }
  internal::FinishOddBudgets(run, policy);
  internal::FillShortClusters(run);
  return run.Finish();
}

}  // namespace divmax
