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

// Monotone submodular quality functions over the ground set, with value and
// marginal-gain oracles.
//
// Three kinds are supported: the zero function, a non-negative modular
// function (per-element weights), and a coverage function (the size of the
// union of per-element cover sets). QualityFunction is an immutable
// definition; QualityState is the incremental evaluator a solver run owns.

#ifndef DIVMAX_QUALITY_H_
#define DIVMAX_QUALITY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "divmax/types.h"

namespace divmax {

struct Instance;

enum class QualityKind { kZero, kModular, kCoverage };

class QualityFunction {
 public:
  // The zero function.
  QualityFunction() = default;

  // Throws std::invalid_argument on a negative or non-finite weight.
  static QualityFunction Modular(std::vector<double> weights);
  // Cover sets may contain arbitrary item ids; duplicates are ignored.
  static QualityFunction Coverage(std::vector<std::vector<std::int64_t>> covers);

  QualityKind kind() const { return kind_; }
  bool is_zero() const { return kind_ == QualityKind::kZero; }

  // Number of elements the function is defined on; 0 for the zero kind,
  // which accepts any id.
  int domain_size() const;

  const std::vector<double>& weights() const { return weights_; }
  // Cover sets as given (sorted, deduplicated), for serialization.
  const std::vector<std::vector<std::int64_t>>& covers() const {
    return covers_;
  }
  // Cover sets remapped to dense item indices 0..num_items()-1.
  const std::vector<int>& dense_cover(ElementId v) const {
    return dense_covers_[v];
  }
  int num_items() const { return num_items_; }

  // Q(s). Repeated ids count once.
  double Value(std::span<const ElementId> s) const;
  // Q(s + v) - Q(s); zero when v is already in s.
  double Marginal(std::span<const ElementId> s, ElementId v) const;
  // Q(s + {u, v}) - Q(s). Throws std::invalid_argument when u == v.
  double MarginalPair(std::span<const ElementId> s, ElementId u,
                      ElementId v) const;

 private:
  QualityKind kind_ = QualityKind::kZero;
  std::vector<double> weights_;
  std::vector<std::vector<std::int64_t>> covers_;
  std::vector<std::vector<int>> dense_covers_;
  int num_items_ = 0;
};

// Running Q(S) for a set that grows and shrinks one element at a time.
// Coverage keeps a per-item multiplicity count so that marginals cost
// O(|cover set|) and removals are exact.
class QualityState {
 public:
  QualityState(const QualityFunction& q, int n);

  double value() const { return value_; }
  bool Contains(ElementId v) const { return member_[v] != 0; }

  double Marginal(ElementId v) const;
  // Marginal(u) + marginal of v after u, evaluated without mutating.
  double MarginalPair(ElementId u, ElementId v) const;

  // No-ops for elements already present (Add) or absent (Remove).
  void Add(ElementId v);
  void Remove(ElementId v);

 private:
  const QualityFunction* q_;
  std::vector<char> member_;
  std::vector<int> item_count_;
  double value_ = 0.0;
};

// Drops element v from cluster C_j when fewer than `threshold` of v's cover
// items are attributable to C_j, i.e. also covered by another member of C_j.
// Clusters never become empty: if every member would be dropped, the member
// with the most attributable items is kept. No-op unless the instance has a
// coverage quality and threshold > 0. Returns the number of removals.
int ApplyMinCoverageFilter(Instance& instance, int threshold);

}  // namespace divmax

#endif  // DIVMAX_QUALITY_H_
