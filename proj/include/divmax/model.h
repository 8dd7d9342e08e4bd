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

// Problem instances over overlapping clusters, solutions, and feasibility.
//
// An instance is a ground set of n elements with features, a list of
// possibly-overlapping clusters C_j each with an upper budget b_j, a
// partition of the ground set into cells, a metric, a trade-off weight
// lambda and a quality function. A solution picks pairwise disjoint S_j from
// each C_j with |S_j| <= b_j and at most one element per cell.

#ifndef DIVMAX_MODEL_H_
#define DIVMAX_MODEL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "divmax/quality.h"
#include "divmax/types.h"

namespace divmax {

enum class FeatureKind { kVector, kSet };
enum class Metric { kEuclidean, kCosine, kJaccard, kMatrix };

const char* FeatureKindName(FeatureKind kind);
const char* MetricName(Metric metric);

struct Cluster {
  std::vector<ElementId> members;
  int budget = 0;
};

// Explicit pairwise distances. With no labels, `values` is a dense n x n
// matrix. With labels, `values` is an L x L block matrix and
// d(u, v) = values[label(u)][label(v)] for u != v; the diagonal entry of a
// label is then the distance between two distinct elements sharing it.
// Block form keeps structured constructions with many elements compact.
struct DistanceTable {
  std::vector<int> labels;
  int size = 0;
  std::vector<double> values;  // size x size, row-major

  double at(int row, int col) const { return values[row * size + col]; }
  int label(ElementId v) const { return labels.empty() ? v : labels[v]; }
};

struct Instance {
  int n = 0;
  FeatureKind feature_kind = FeatureKind::kVector;
  int dim = 0;
  std::vector<double> vectors;                  // n * dim, row-major
  std::vector<std::vector<std::int64_t>> sets;  // per element, sorted
  std::vector<Cluster> clusters;
  std::vector<CellId> cells;  // empty: every element is its own cell
  Metric metric = Metric::kEuclidean;
  std::optional<DistanceTable> distances;
  double lambda = 1.0;
  QualityFunction quality;

  int num_clusters() const { return static_cast<int>(clusters.size()); }
  CellId cell_of(ElementId v) const { return cells.empty() ? v : cells[v]; }
  std::span<const double> vector(ElementId v) const {
    return {vectors.data() + static_cast<std::size_t>(v) * dim,
            static_cast<std::size_t>(dim)};
  }
  int max_budget() const;
};

struct Solution {
  std::vector<std::vector<ElementId>> selected;

  static Solution Empty(const Instance& instance);
  // Concatenation of S_1, ..., S_m in cluster order.
  std::vector<ElementId> Union() const;
  int TotalSize() const;
  bool operator==(const Solution&) const = default;
};

struct Violation {
  std::string location;
  std::string message;
};

// Structural checks (membership, budgets, feature dimensions, metric/feature
// compatibility, lambda, quality domain, explicit-distance shape). Metric
// axioms of explicit tables and unit norms under cosine are checked by
// CheckDistanceInputs in geometry.h, which this calls. Empty = valid.
std::vector<Violation> ValidateInstance(const Instance& instance);

enum class FeasibilityIssue {
  kShapeMismatch,
  kUnknownElement,
  kNotInCluster,
  kDuplicate,
  kOverBudget,
  kNotDisjoint,
  kCellConflict,
};

const char* FeasibilityIssueName(FeasibilityIssue issue);

struct FeasibilityViolation {
  FeasibilityIssue issue;
  ClusterId cluster = -1;
  ElementId element = kNoElement;
};

struct FeasibilityReport {
  std::vector<FeasibilityViolation> violations;

  bool feasible() const { return violations.empty(); }
  // A shape mismatch is reported alone; nothing else is checked.
  bool shape_mismatch() const {
    return !violations.empty() &&
           violations.front().issue == FeasibilityIssue::kShapeMismatch;
  }
};

FeasibilityReport CheckFeasibility(const Instance& instance,
                                   const Solution& solution);

// Mutable selection with O(1) availability queries. The instance must
// outlive the state.
class SelectionState {
 public:
  explicit SelectionState(const Instance& instance);
  // Throws std::invalid_argument if `solution` is infeasible.
  static SelectionState FromSolution(const Instance& instance,
                                     const Solution& solution);

  const Instance& instance() const { return *instance_; }

  bool IsSelected(ElementId v) const { return selected_[v] != 0; }
  bool IsCellUsed(CellId c) const { return cell_used_[c] != 0; }
  // Not selected anywhere and its cell holds no selected element.
  bool IsAvailable(ElementId v) const {
    return selected_[v] == 0 && cell_used_[instance_->cell_of(v)] == 0;
  }

  const std::vector<ElementId>& selected(ClusterId j) const {
    return sets_[j];
  }
  int size(ClusterId j) const { return static_cast<int>(sets_[j].size()); }

  // Available members of C_j in member order.
  std::vector<ElementId> Available(ClusterId j) const;
  bool HasAvailable(ClusterId j) const;
  // Two available members of C_j in distinct cells exist.
  bool HasAvailablePair(ClusterId j) const;

  // Preconditions are checked with exceptions: v available, v in C_j.
  void Add(ClusterId j, ElementId v);
  void Remove(ClusterId j, ElementId v);
  // Puts `in` at the position of `out` in S_j.
  void Replace(ClusterId j, ElementId out, ElementId in);

  Solution ToSolution() const;

 private:
  bool InCluster(ClusterId j, ElementId v) const;

  const Instance* instance_;
  std::vector<std::vector<ElementId>> sets_;
  std::vector<char> selected_;
  std::vector<char> cell_used_;
  std::vector<std::vector<char>> in_cluster_;
};

// 2 * floor(b / 2), or 2 * ceil(b / 2) with round_up.
int PairBudget(int budget, bool round_up);

// Members of C_j not selected anywhere whose cell is free.
// Throws std::out_of_range for an unknown cluster id.
std::vector<ElementId> AvailableElements(const Instance& instance,
                                         const Solution& partial,
                                         ClusterId cluster);

// Element mode: |S_j| >= b_j or nothing available. Pair mode: fewer than two
// slots left against 2 * floor(b_j / 2), or no available pair in distinct
// cells. Throws std::out_of_range for an unknown cluster id.
bool IsSaturated(const Instance& instance, const Solution& partial,
                 ClusterId cluster, bool pair_mode);

}  // namespace divmax

#endif  // DIVMAX_MODEL_H_
