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

// Distance metrics over element features and the diameter primitives.

#ifndef DIVMAX_GEOMETRY_H_
#define DIVMAX_GEOMETRY_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "divmax/model.h"
#include "divmax/types.h"

namespace divmax {

inline constexpr int kDefaultCacheThreshold = 4096;
inline constexpr double kUnitNormTolerance = 1e-6;

// Immutable distance oracle. Owns a copy of the features it needs, so it
// does not reference the instance after construction. When n is at most the
// cache threshold the full matrix is computed eagerly; above it distances
// are computed on demand and memory stays linear in n.
//
// Modes:
//   euclidean  ||u - v||_2
//   cosine     ||u - v||_2 on unit vectors, i.e. sqrt(2 - 2 <u, v>)
//   jaccard    1 - |u & v| / |u | v|  (0 for two empty sets)
//   matrix     explicit table, dense or labelled blocks
class DistanceOracle {
 public:
  // Throws std::invalid_argument when the features do not match the metric
  // (dimension mismatch, a non-unit vector under cosine, a missing table).
  explicit DistanceOracle(const Instance& instance,
                          int cache_threshold = kDefaultCacheThreshold);

  int size() const { return n_; }
  Metric metric() const { return metric_; }
  bool cached() const { return !cache_.empty(); }

  double Distance(ElementId u, ElementId v) const {
    if (u == v) return 0.0;
    if (!cache_.empty()) return cache_[static_cast<std::size_t>(u) * n_ + v];
    return Compute(u, v);
  }

  // Sum of d(v, u) over u in s. d(v, v) contributes 0.
  double SetDistanceSum(ElementId v, std::span<const ElementId> s) const;

 private:
  double Compute(ElementId u, ElementId v) const;

  int n_ = 0;
  Metric metric_ = Metric::kEuclidean;
  int dim_ = 0;
  std::vector<double> vectors_;
  std::vector<std::vector<std::int64_t>> sets_;
  DistanceTable table_;
  std::vector<double> cache_;
};

struct DiameterResult {
  ElementId first = kNoElement;
  ElementId second = kNoElement;
  double distance = 0.0;
};

// Furthest pair over unordered pairs of s; ties go to the lexicographically
// smallest (min id, max id). first < second. Throws std::invalid_argument
// when |s| < 2.
DiameterResult ExactDiameter(const DistanceOracle& oracle,
                             std::span<const ElementId> s);

// (anchor, y) with y the member of s furthest from the anchor, ties to the
// smaller id. Its distance is at least half the exact diameter in any
// metric. Throws std::invalid_argument if the anchor is not in s or
// |s| < 2.
DiameterResult ApproxDiameter(const DistanceOracle& oracle,
                              std::span<const ElementId> s, ElementId anchor);

// Metric checks on raw inputs: unit norms under cosine, and for explicit
// tables finite non-negative entries, symmetry, zero diagonal (dense form)
// and the triangle inequality, on every triple when n <= 64 and on 10 * n
// sampled triples above that. Returns messages;
// empty means valid.
std::vector<std::string> CheckDistanceInputs(const Instance& instance,
                                             std::uint64_t seed = 0x5eed);

// Triangle inequality over every triple of block labels that can be realized
// by distinct elements. Exhaustive for labelled tables; O(L^3).
std::vector<std::string> CheckBlockTriangles(const DistanceTable& table,
                                             double tolerance = 1e-12);

}  // namespace divmax

#endif  // DIVMAX_GEOMETRY_H_
