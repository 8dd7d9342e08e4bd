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

#include "divmax/objective.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace divmax {

double ClusterDispersion(const DistanceOracle& oracle,
                         std::span<const ElementId> s) {
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      total += oracle.Distance(s[i], s[j]);
    }
  }
  return total;
}

double IntraDispersion(const DistanceOracle& oracle, const Solution& solution) {
  double total = 0.0;
  for (const auto& s : solution.selected) total += ClusterDispersion(oracle, s);
  return total;
}

double GlobalDispersion(const DistanceOracle& oracle,
                        const Solution& solution) {
  return ClusterDispersion(oracle, solution.Union());
}

ObjectiveValue CombinedObjective(const Instance& instance,
                                 const DistanceOracle& oracle,
                                 const Solution& solution) {
  ObjectiveValue value;
  value.quality = instance.quality.Value(solution.Union());
  value.dispersion = IntraDispersion(oracle, solution);
  value.combined = value.quality + instance.lambda * value.dispersion;
  return value;
}

double Score(const Instance& instance, const ObjectiveValue& value) {
  return instance.quality.is_zero() ? value.dispersion : value.combined;
}

double Score(const Instance& instance, const DistanceOracle& oracle,
             const Solution& solution) {
  return Score(instance, CombinedObjective(instance, oracle, solution));
}

namespace {

void CheckPairShape(const Instance& instance, ClusterId cluster, ElementId u,
                    ElementId v) {
  if (cluster < 0 || cluster >= instance.num_clusters()) {
    throw std::out_of_range("unknown cluster id " + std::to_string(cluster));
  }
  if (u == v) throw std::invalid_argument("pair needs two distinct elements");
  const auto& members = instance.clusters[cluster].members;
  for (ElementId w : {u, v}) {
    if (std::find(members.begin(), members.end(), w) == members.end()) {
      throw std::invalid_argument("element " + std::to_string(w) +
                                  " is not in cluster " +
                                  std::to_string(cluster));
    }
  }
  if (instance.cell_of(u) == instance.cell_of(v)) {
    throw std::invalid_argument("pair shares a partition cell");
  }
}

}  // namespace

double PairGainDispersion(const Instance& instance,
                          const DistanceOracle& oracle,
                          const Solution& partial, ClusterId cluster,
                          ElementId u, ElementId v) {
  CheckPairShape(instance, cluster, u, v);
  const SelectionState state = SelectionState::FromSolution(instance, partial);
  if (!state.IsAvailable(u) || !state.IsAvailable(v)) {
    throw std::invalid_argument("pair is not available");
  }
  return PairWeightDispersion(instance.clusters[cluster].budget,
                              oracle.Distance(u, v));
}

double PairGainCombined(const Instance& instance, const DistanceOracle& oracle,
                        std::span<const ElementId> partial_union,
                        ClusterId cluster, ElementId u, ElementId v) {
  CheckPairShape(instance, cluster, u, v);
  for (ElementId w : partial_union) {
    if (w == u || w == v || instance.cell_of(w) == instance.cell_of(u) ||
        instance.cell_of(w) == instance.cell_of(v)) {
      throw std::invalid_argument("pair is not available");
    }
  }
  return instance.quality.MarginalPair(partial_union, u, v) +
         PairWeightCombined(instance.clusters[cluster].budget, instance.lambda,
                            oracle.Distance(u, v));
}

std::vector<double> RemovalMeasures(const Instance& instance,
                                    const DistanceOracle& oracle,
                                    std::span<const SelectionRecord> order) {
  // Each pair is split evenly between its endpoints so the measures sum to
  // Score() of the selection.
  const double weight =
      instance.quality.is_zero() ? 0.5 : 0.5 * instance.lambda;
  std::vector<std::vector<ElementId>> peers(instance.clusters.size());
  for (const SelectionRecord& r : order) {
    if (r.cluster < 0 || r.cluster >= instance.num_clusters()) {
      throw std::out_of_range("unknown cluster id " +
                              std::to_string(r.cluster));
    }
    peers[r.cluster].push_back(r.element);
  }
  QualityState quality(instance.quality, instance.n);
  std::vector<double> out;
  out.reserve(order.size());
  for (const SelectionRecord& r : order) {
    const double q = quality.Marginal(r.element);
    quality.Add(r.element);
    out.push_back(q +
                  weight * oracle.SetDistanceSum(r.element, peers[r.cluster]));
  }
  return out;
}

double RemovalMeasure(const Instance& instance, const DistanceOracle& oracle,
                      std::span<const SelectionRecord> order,
                      ElementId target) {
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i].element == target) {
      return RemovalMeasures(instance, oracle, order)[i];
    }
  }
  throw std::invalid_argument("element " + std::to_string(target) +
                              " is not in the selection");
}

}  // namespace divmax
