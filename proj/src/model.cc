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

#include "divmax/model.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "divmax/geometry.h"

namespace divmax {

const char* FeatureKindName(FeatureKind kind) {
  return kind == FeatureKind::kVector ? "vector" : "set";
}

const char* MetricName(Metric metric) {
  switch (metric) {
    case Metric::kEuclidean:
      return "euclidean";
    case Metric::kCosine:
      return "cosine";
    case Metric::kJaccard:
      return "jaccard";
    case Metric::kMatrix:
      return "matrix";
  }
  return "?";
}

int Instance::max_budget() const {
  int best = 0;
  for (const Cluster& c : clusters) best = std::max(best, c.budget);
  return best;
}

Solution Solution::Empty(const Instance& instance) {
  Solution s;
  s.selected.resize(instance.clusters.size());
  return s;
}

std::vector<ElementId> Solution::Union() const {
  std::vector<ElementId> out;
  out.reserve(TotalSize());
  for (const auto& s : selected) out.insert(out.end(), s.begin(), s.end());
  return out;
}

int Solution::TotalSize() const {
  int total = 0;
  for (const auto& s : selected) total += static_cast<int>(s.size());
  return total;
}

std::vector<Violation> ValidateInstance(const Instance& instance) {
  std::vector<Violation> out;
  auto add = [&out](std::string where, std::string what) {
    out.push_back({std::move(where), std::move(what)});
  };
  const int n = instance.n;
  if (n < 1) add("n", "ground set is empty");
  if (instance.clusters.empty()) add("clusters", "no clusters");
  if (!std::isfinite(instance.lambda) || instance.lambda < 0.0) {
    add("lambda", "lambda negative");
  }

  for (std::size_t j = 0; j < instance.clusters.size(); ++j) {
    const Cluster& c = instance.clusters[j];
    const std::string where = "clusters[" + std::to_string(j) + "]";
    if (c.budget < 0) add(where + ".budget", "budget negative");
    if (c.members.empty()) add(where + ".members", "cluster is empty");
    std::vector<ElementId> sorted = c.members;
    std::sort(sorted.begin(), sorted.end());
    for (ElementId v : sorted) {
      if (v < 0 || v >= n) {
        add(where + ".members", "member out of range: " + std::to_string(v));
      }
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      add(where + ".members", "duplicate member");
    }
  }

  if (!instance.cells.empty()) {
    if (static_cast<int>(instance.cells.size()) != n) {
      add("partition", "expected one cell per element");
    } else {
      for (int v = 0; v < n; ++v) {
        if (instance.cells[v] < 0 || instance.cells[v] >= n) {
          add("partition[" + std::to_string(v) + "]", "cell id out of range");
        }
      }
    }
  }

  const bool matrix = instance.metric == Metric::kMatrix;
  if (instance.feature_kind == FeatureKind::kVector) {
    const std::size_t expected =
        static_cast<std::size_t>(std::max(n, 0)) * std::max(instance.dim, 0);
    const bool empty_ok = matrix && instance.vectors.empty();
    if (instance.dim < 0) {
      add("features", "negative dimension");
    } else if (!empty_ok && instance.vectors.size() != expected) {
      add("features", "vector table does not hold n vectors of one dimension");
    }
    for (double x : instance.vectors) {
      if (!std::isfinite(x)) {
        add("features", "non-finite coordinate");
        break;
      }
    }
    if (instance.metric == Metric::kJaccard) {
      add("metric", "jaccard requires set features");
    } else if (!matrix && instance.dim < 1) {
      add("features", "vector metric needs dimension >= 1");
    }
  } else {
    const bool empty_ok = matrix && instance.sets.empty();
    if (!empty_ok && static_cast<int>(instance.sets.size()) != n) {
      add("features", "expected one set per element");
    }
    if (instance.metric == Metric::kEuclidean ||
        instance.metric == Metric::kCosine) {
      add("metric", std::string(MetricName(instance.metric)) +
                        " requires vector features");
    }
  }
  if (matrix && !instance.distances) {
    add("distance_matrix", "matrix metric without a distance matrix");
  }
  if (instance.distances) {
    const DistanceTable& t = instance.distances.value();
    if (t.size < 0 ||
        t.values.size() != static_cast<std::size_t>(t.size) * t.size) {
      add("distance_matrix", "matrix is not square");
    } else if (t.labels.empty()) {
      if (t.size != n) add("distance_matrix", "matrix is not n x n");
    } else if (static_cast<int>(t.labels.size()) != n) {
      add("distance_labels", "expected one label per element");
    } else {
      for (int v = 0; v < n; ++v) {
        if (t.labels[v] < 0 || t.labels[v] >= t.size) {
          add("distance_labels[" + std::to_string(v) + "]",
              "label out of range");
        }
      }
    }
  }

  const QualityFunction& q = instance.quality;
  if (!q.is_zero() && q.domain_size() != n) {
    add("quality", "quality function must cover every element");
  }

  // Metric axioms only make sense once the shapes are right.
  if (out.empty()) {
    for (std::string& msg : CheckDistanceInputs(instance)) {
      add(matrix ? "distance_matrix" : "features", std::move(msg));
    }
  }
  return out;
}

const char* FeasibilityIssueName(FeasibilityIssue issue) {
  switch (issue) {
    case FeasibilityIssue::kShapeMismatch:
      return "shape mismatch";
    case FeasibilityIssue::kUnknownElement:
      return "unknown element";
    case FeasibilityIssue::kNotInCluster:
      return "not in cluster";
    case FeasibilityIssue::kDuplicate:
      return "duplicate";
    case FeasibilityIssue::kOverBudget:
      return "over budget";
    case FeasibilityIssue::kNotDisjoint:
      return "not disjoint";
    case FeasibilityIssue::kCellConflict:
      return "cell conflict";
  }
  return "?";
}

FeasibilityReport CheckFeasibility(const Instance& instance,
                                   const Solution& solution) {
  FeasibilityReport report;
  auto& out = report.violations;
  if (solution.selected.size() != instance.clusters.size()) {
    out.push_back({FeasibilityIssue::kShapeMismatch});
    return report;
  }
  const int n = instance.n;
  std::vector<ClusterId> owner(n, -1);
  std::vector<ElementId> cell_holder(n, kNoElement);
  for (ClusterId j = 0; j < instance.num_clusters(); ++j) {
    const Cluster& c = instance.clusters[j];
    const auto& s = solution.selected[j];
    if (static_cast<int>(s.size()) > c.budget) {
      out.push_back({FeasibilityIssue::kOverBudget, j});
    }
    std::vector<ElementId> members = c.members;
    std::sort(members.begin(), members.end());
    for (ElementId v : s) {
      if (v < 0 || v >= n) {
        out.push_back({FeasibilityIssue::kUnknownElement, j, v});
        continue;
      }
      if (!std::binary_search(members.begin(), members.end(), v)) {
        out.push_back({FeasibilityIssue::kNotInCluster, j, v});
      }
      if (owner[v] == j) {
        out.push_back({FeasibilityIssue::kDuplicate, j, v});
        continue;
      }
      if (owner[v] != -1) {
        out.push_back({FeasibilityIssue::kNotDisjoint, j, v});
        continue;
      }
      owner[v] = j;
      const CellId cell = instance.cell_of(v);
      if (cell_holder[cell] != kNoElement) {
        out.push_back({FeasibilityIssue::kCellConflict, j, v});
      } else {
        cell_holder[cell] = v;
      }
    }
  }
  return report;
}

SelectionState::SelectionState(const Instance& instance)
    : instance_(&instance),
      sets_(instance.clusters.size()),
      selected_(instance.n, 0),
      cell_used_(instance.n, 0),
      in_cluster_(instance.clusters.size()) {
  for (ClusterId j = 0; j < instance.num_clusters(); ++j) {
    in_cluster_[j].assign(instance.n, 0);
    for (ElementId v : instance.clusters[j].members) in_cluster_[j][v] = 1;
  }
}

SelectionState SelectionState::FromSolution(const Instance& instance,
                                            const Solution& solution) {
  if (!CheckFeasibility(instance, solution).feasible()) {
    throw std::invalid_argument("solution is not feasible");
  }
  SelectionState state(instance);
  for (ClusterId j = 0; j < instance.num_clusters(); ++j) {
    for (ElementId v : solution.selected[j]) state.Add(j, v);
  }
  return state;
}

bool SelectionState::InCluster(ClusterId j, ElementId v) const {
  return in_cluster_[j][v] != 0;
}

std::vector<ElementId> SelectionState::Available(ClusterId j) const {
  std::vector<ElementId> out;
  for (ElementId v : instance_->clusters[j].members) {
    if (IsAvailable(v)) out.push_back(v);
  }
  return out;
}

bool SelectionState::HasAvailable(ClusterId j) const {
  for (ElementId v : instance_->clusters[j].members) {
    if (IsAvailable(v)) return true;
  }
  return false;
}

bool SelectionState::HasAvailablePair(ClusterId j) const {
  CellId first_cell = -1;
  for (ElementId v : instance_->clusters[j].members) {
    if (!IsAvailable(v)) continue;
    const CellId c = instance_->cell_of(v);
    if (first_cell == -1) {
      first_cell = c;
    } else if (c != first_cell) {
      return true;
    }
  }
  return false;
}

void SelectionState::Add(ClusterId j, ElementId v) {
  if (!InCluster(j, v)) {
    throw std::invalid_argument("element " + std::to_string(v) +
                                " is not in cluster " + std::to_string(j));
  }
  if (!IsAvailable(v)) {
    throw std::invalid_argument("element " + std::to_string(v) +
                                " is not available");
  }
  sets_[j].push_back(v);
  selected_[v] = 1;
  cell_used_[instance_->cell_of(v)] = 1;
}

void SelectionState::Remove(ClusterId j, ElementId v) {
  auto& s = sets_[j];
  auto it = std::find(s.begin(), s.end(), v);
  if (it == s.end()) {
    throw std::invalid_argument("element " + std::to_string(v) +
                                " is not selected in cluster " +
                                std::to_string(j));
  }
  s.erase(it);
  selected_[v] = 0;
  cell_used_[instance_->cell_of(v)] = 0;
}

void SelectionState::Replace(ClusterId j, ElementId out, ElementId in) {
  auto& s = sets_[j];
  auto it = std::find(s.begin(), s.end(), out);
  if (it == s.end()) {
    throw std::invalid_argument("element " + std::to_string(out) +
                                " is not selected in cluster " +
                                std::to_string(j));
  }
  const std::size_t pos = it - s.begin();
  Remove(j, out);
  try {
    Add(j, in);
  } catch (...) {
    Add(j, out);
    std::rotate(s.begin() + pos, s.end() - 1, s.end());
    throw;
  }
  std::rotate(s.begin() + pos, s.end() - 1, s.end());
}

Solution SelectionState::ToSolution() const { return Solution{sets_}; }

int PairBudget(int budget, bool round_up) {
  return round_up ? 2 * ((budget + 1) / 2) : 2 * (budget / 2);
}

namespace {

void CheckCluster(const Instance& instance, ClusterId cluster) {
  if (cluster < 0 || cluster >= instance.num_clusters()) {
    throw std::out_of_range("unknown cluster id " + std::to_string(cluster));
  }
}

}  // namespace

std::vector<ElementId> AvailableElements(const Instance& instance,
                                         const Solution& partial,
                                         ClusterId cluster) {
  CheckCluster(instance, cluster);
  return SelectionState::FromSolution(instance, partial).Available(cluster);
}

bool IsSaturated(const Instance& instance, const Solution& partial,
                 ClusterId cluster, bool pair_mode) {
  CheckCluster(instance, cluster);
  const SelectionState state = SelectionState::FromSolution(instance, partial);
  const int budget = instance.clusters[cluster].budget;
  if (pair_mode) {
    return state.size(cluster) + 2 > PairBudget(budget, false) ||
           !state.HasAvailablePair(cluster);
  }
  return state.size(cluster) >= budget || !state.HasAvailable(cluster);
}

}  // namespace divmax
