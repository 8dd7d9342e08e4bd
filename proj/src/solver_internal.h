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

#ifndef DIVMAX_SRC_SOLVER_INTERNAL_H_
#define DIVMAX_SRC_SOLVER_INTERNAL_H_

#include <chrono>
#include <vector>

#include "divmax/solvers.h"

namespace divmax::internal {

// Selection plus incrementally maintained objective and the event log of
// one solver run.
class Run {
 public:
  // `global`: dispersion over the union instead of within clusters.
  Run(const Instance& instance, const DistanceOracle& oracle,
      bool global = false);

  const Instance& instance() const { return *instance_; }
  const DistanceOracle& oracle() const { return *oracle_; }
  const SelectionState& state() const { return state_; }
  const QualityState& quality() const { return quality_; }
  double dispersion() const { return dispersion_; }
  double objective() const;
  int iteration() const { return iteration_; }

  void AddPair(ClusterId j, ElementId u, ElementId v, double gain);
  void AddSingle(ClusterId j, ElementId v, double gain);
  void Remove(ClusterId j, ElementId v, double gain);
  void Swap(ClusterId j, ElementId out, ElementId in, double gain);

  // Current selection in the order it was made; removed elements dropped.
  std::vector<SelectionRecord> Chronology() const;

  SolveResult Finish();

 private:
  double PeerSum(ClusterId j, ElementId v) const;
  void Insert(ClusterId j, ElementId v);
  void Erase(ClusterId j, ElementId v);
  void Log(EventKind kind, ClusterId j, ElementId first, ElementId second,
           double gain);

  const Instance* instance_;
  const DistanceOracle* oracle_;
  bool global_;
  SelectionState state_;
  QualityState quality_;
  double dispersion_ = 0.0;
  int iteration_ = 0;
  std::vector<SelectionRecord> chronology_;
  SolveTrace trace_;
  std::chrono::steady_clock::time_point start_;
};

// Per-cluster loop budget of the pair phase.
std::vector<int> PairPhaseBudgets(const Instance& instance, OddPolicy policy);

// Whether cluster j can take one more pair under `budgets`.
bool CanTakePair(const Run& run, const std::vector<int>& budgets, ClusterId j);

// Odd-budget step shared by GP and GPa, run after the pair phase.
void FinishOddBudgets(Run& run, OddPolicy policy);

// Leftover capacity after the pair phase: a cluster whose available members
// no longer form a pair takes single elements, best gain first, until it is
// full or runs dry. Only adds, so the objective cannot drop.
void FillShortClusters(Run& run);

// Members of each cluster sorted by id.
std::vector<std::vector<ElementId>> SortedMembers(const Instance& instance);

}  // namespace divmax::internal

#endif  // DIVMAX_SRC_SOLVER_INTERNAL_H_
