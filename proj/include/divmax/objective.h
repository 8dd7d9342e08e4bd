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

// Objective evaluation and the per-step gain formulas used by the solvers.
//
// Pair convention: the dispersion of a set is the sum of d(u, v) over
// unordered pairs, each pair counted once.

#ifndef DIVMAX_OBJECTIVE_H_
#define DIVMAX_OBJECTIVE_H_

#include <span>
#include <vector>

#include "divmax/geometry.h"
#include "divmax/model.h"

namespace divmax {

struct ObjectiveValue {
  double quality = 0.0;
  double dispersion = 0.0;
  // quality + lambda * dispersion
  double combined = 0.0;
};

double ClusterDispersion(const DistanceOracle& oracle,
                         std::span<const ElementId> s);

// Sum over clusters of ClusterDispersion(S_j).
double IntraDispersion(const DistanceOracle& oracle, const Solution& solution);

// Dispersion of the union of all S_j, inter-cluster pairs included.
double GlobalDispersion(const DistanceOracle& oracle, const Solution& solution);

// Quality is evaluated once on the union of the selected sets.
ObjectiveValue CombinedObjective(const Instance& instance,
                                 const DistanceOracle& oracle,
                                 const Solution& solution);

// The value a solver maximizes: intra-cluster dispersion when the quality
// function is the zero function (lambda is then only a scale), the combined
// value otherwise.
double Score(const Instance& instance, const ObjectiveValue& value);
double Score(const Instance& instance, const DistanceOracle& oracle,
             const Solution& solution);

// (b_j - 1) * d(u, v) with the original budget b_j.
// Throws std::invalid_argument if u, v are not an available pair of C_j.
double PairGainDispersion(const Instance& instance,
                          const DistanceOracle& oracle,
                          const Solution& partial, ClusterId cluster,
                          ElementId u, ElementId v);

// Q({u, v} | union) + lambda * 2 * (b'_j - 1) * d(u, v), b'_j = 2 ceil(b_j/2).
// The factor 2 is the pair weight of the greedy rule as published.
// Throws std::invalid_argument if u, v are not an available pair of C_j
// given the selected union.
double PairGainCombined(const Instance& instance, const DistanceOracle& oracle,
                        std::span<const ElementId> partial_union,
                        ClusterId cluster, ElementId u, ElementId v);

// Unchecked forms used in solver inner loops.
inline double PairWeightDispersion(int budget, double d) {
  return (budget - 1) * d;
}
inline double PairWeightCombined(int budget, double lambda, double d) {
  const int rounded = 2 * ((budget + 1) / 2);
  return lambda * 2.0 * (rounded - 1) * d;
}

struct SelectionRecord {
  ElementId element = kNoElement;
  ClusterId cluster = -1;
};

// Per-element removal measure over a selection listed in order:
//   g(v_i) = Q(v_i | v_1..v_{i-1}) + (lambda / 2) * d(v_i, S_c(i) - v_i)
// where S_c(i) is v_i's cluster's full selection. The lambda / 2 weight
// matches the once-per-pair convention, so that the g(v_i) sum to Score():
// the combined value, or under zero quality the intra dispersion (the
// dispersion term is then weighted 1 / 2).
std::vector<double> RemovalMeasures(const Instance& instance,
                                    const DistanceOracle& oracle,
                                    std::span<const SelectionRecord> order);

// Single-element form. Throws std::invalid_argument if target is absent.
double RemovalMeasure(const Instance& instance, const DistanceOracle& oracle,
                      std::span<const SelectionRecord> order,
                      ElementId target);

}  // namespace divmax

#endif  // DIVMAX_OBJECTIVE_H_
