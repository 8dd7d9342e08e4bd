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

#include "divmax/geometry.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace divmax {
namespace {

double Jaccard(const std::vector<std::int64_t>& a,
               const std::vector<std::int64_t>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t i = 0, j = 0, common = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  const double uni = static_cast<double>(a.size() + b.size() - common);
  return 1.0 - static_cast<double>(common) / uni;
}

bool IsSortedUnique(const std::vector<std::int64_t>& s) {
  return std::adjacent_find(s.begin(), s.end(),
                            std::greater_equal<std::int64_t>()) == s.end();
}

}  // namespace

DistanceOracle::DistanceOracle(const Instance& instance, int cache_threshold)
    : n_(instance.n), metric_(instance.metric), dim_(instance.dim) {
  switch (metric_) {
    case Metric::kEuclidean:
    case Metric::kCosine:
      if (instance.feature_kind != FeatureKind::kVector) {
        throw std::invalid_argument("metric needs vector features");
      }
      if (dim_ < 1 ||
          instance.vectors.size() != static_cast<std::size_t>(n_) * dim_) {
        throw std::invalid_argument("vector dimension mismatch");
      }
      vectors_ = instance.vectors;
      if (metric_ == Metric::kCosine) {
        for (int v = 0; v < n_; ++v) {
          double norm2 = 0.0;
          for (double x : instance.vector(v)) norm2 += x * x;
          if (std::abs(std::sqrt(norm2) - 1.0) > kUnitNormTolerance) {
            throw std::invalid_argument("vector " + std::to_string(v) +
                                        " is not unit-normalized");
          }
        }
      }
      break;
    case Metric::kJaccard:
      if (instance.feature_kind != FeatureKind::kSet ||
          static_cast<int>(instance.sets.size()) != n_) {
        throw std::invalid_argument("jaccard needs one item set per element");
      }
      sets_ = instance.sets;
      for (auto& s : sets_) {
        if (!IsSortedUnique(s)) {
          std::sort(s.begin(), s.end());
          s.erase(std::unique(s.begin(), s.end()), s.end());
        }
      }
      break;
    case Metric::kMatrix:
      if (!instance.distances) {
        throw std::invalid_argument("matrix metric without a distance matrix");
      }
      table_ = *instance.distances;
      if (table_.values.size() !=
              static_cast<std::size_t>(table_.size) * table_.size ||
          (table_.labels.empty() ? table_.size != n_
                                 : static_cast<int>(table_.labels.size()) !=
                                       n_)) {
        throw std::invalid_argument("distance matrix shape mismatch");
      }
      break;
  }
  if (n_ <= cache_threshold) {
    cache_.assign(static_cast<std::size_t>(n_) * n_, 0.0);
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        const double d = Compute(u, v);
        cache_[static_cast<std::size_t>(u) * n_ + v] = d;
        cache_[static_cast<std::size_t>(v) * n_ + u] = d;
      }
    }
  }
}

double DistanceOracle::Compute(ElementId u, ElementId v) const {
  if (u == v) return 0.0;
  switch (metric_) {
    case Metric::kEuclidean: {
      const double* a = vectors_.data() + static_cast<std::size_t>(u) * dim_;
      const double* b = vectors_.data() + static_cast<std::size_t>(v) * dim_;
      double s = 0.0;
      for (int k = 0; k < dim_; ++k) {
        const double t = a[k] - b[k];
        s += t * t;
      }
      return std::sqrt(s);
    }
    case Metric::kCosine: {
      // Chordal form sqrt(2 - 2 cos) of the unit vectors; 1 - cos alone
      // is not a metric.
      const double* a = vectors_.data() + static_cast<std::size_t>(u) * dim_;
      const double* b = vectors_.data() + static_cast<std::size_t>(v) * dim_;
      double dot = 0.0;
      for (int k = 0; k < dim_; ++k) dot += a[k] * b[k];
      return std::sqrt(std::max(0.0, 2.0 - 2.0 * dot));
    }
    case Metric::kJaccard:
      return Jaccard(sets_[u], sets_[v]);
    case Metric::kMatrix:
      return table_.at(table_.label(u), table_.label(v));
  }
  return 0.0;
}

double DistanceOracle::SetDistanceSum(ElementId v,
                                      std::span<const ElementId> s) const {
  double total = 0.0;
  for (ElementId u : s) total += Distance(v, u);
  return total;
}

DiameterResult ExactDiameter(const DistanceOracle& oracle,
                             std::span<const ElementId> s) {
  if (s.size() < 2) throw std::invalid_argument("diameter needs two elements");
  DiameterResult best;
  best.distance = -1.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const ElementId a = std::min(s[i], s[j]);
      const ElementId b = std::max(s[i], s[j]);
      const double d = oracle.Distance(a, b);
      if (d > best.distance ||
          (d == best.distance &&
           std::pair(a, b) < std::pair(best.first, best.second))) {
        best = {a, b, d};
      }
    }
  }
  return best;
}

DiameterResult ApproxDiameter(const DistanceOracle& oracle,
                              std::span<const ElementId> s, ElementId anchor) {
  if (s.size() < 2) throw std::invalid_argument("diameter needs two elements");
  if (std::find(s.begin(), s.end(), anchor) == s.end()) {
    throw std::invalid_argument("anchor is not in the set");
  }
  DiameterResult best{anchor, kNoElement, -1.0};
  for (ElementId u : s) {
    if (u == anchor) continue;
    const double d = oracle.Distance(anchor, u);
    if (d > best.distance || (d == best.distance && u < best.second)) {
      best.second = u;
      best.distance = d;
    }
  }
  return best;
}

constexpr int kExhaustiveTriangleLimit = 64;

std::vector<std::string> CheckDistanceInputs(const Instance& instance,
                                             std::uint64_t seed) {
  std::vector<std::string> out;
  const int n = instance.n;
  if (instance.metric == Metric::kCosine) {
    for (int v = 0; v < n; ++v) {
      double norm2 = 0.0;
      for (double x : instance.vector(v)) norm2 += x * x;
      if (std::abs(std::sqrt(norm2) - 1.0) > kUnitNormTolerance) {
        out.push_back("vector " + std::to_string(v) +
                      " is not unit-normalized under cosine");
      }
    }
    return out;
  }
  if (instance.metric != Metric::kMatrix || !instance.distances) return out;

  const DistanceTable& t = *instance.distances;
  const int size = t.size;
  bool finite = true;
  for (double x : t.values) {
    if (!std::isfinite(x)) finite = false;
  }
  if (!finite) {
    out.push_back("distance matrix has non-finite entries");
    return out;
  }
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      if (t.at(r, c) < 0.0) {
        out.push_back("negative distance at (" + std::to_string(r) + ", " +
                      std::to_string(c) + ")");
        return out;
      }
      if (t.at(r, c) != t.at(c, r)) {
        out.push_back("distance matrix is not symmetric at (" +
                      std::to_string(r) + ", " + std::to_string(c) + ")");
        return out;
      }
    }
    if (t.labels.empty() && t.at(r, r) != 0.0) {
      out.push_back("nonzero diagonal at " + std::to_string(r));
      return out;
    }
  }
  if (n < 3) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  auto dist = [&t](int u, int v) {
    return u == v ? 0.0 : t.at(t.label(u), t.label(v));
  };
  auto check = [&](int u, int v, int w) {
    const double lhs = dist(u, w);
    const double rhs = dist(u, v) + dist(v, w);
    if (lhs <= rhs + 1e-9 * std::max(1.0, rhs)) return true;
    out.push_back("triangle inequality fails for (" + std::to_string(u) +
                  ", " + std::to_string(v) + ", " + std::to_string(w) + ")");
    return false;
  };
  // Small tables are checked exhaustively.
  if (n <= kExhaustiveTriangleLimit) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        for (int w = u + 1; w < n; ++w) {
          if (!check(u, v, w)) return out;
        }
      }
    }
    return out;
  }
  const std::int64_t samples = 10LL * n;
  for (std::int64_t i = 0; i < samples; ++i) {
    if (!check(pick(rng), pick(rng), pick(rng))) break;
  }
  return out;
}

std::vector<std::string> CheckBlockTriangles(const DistanceTable& table,
                                             double tolerance) {
  std::vector<std::string> out;
  const int size = table.size;
  // Elements per label; an unlabelled table has one element per row.
  std::vector<int> count(size, table.labels.empty() ? 1 : 0);
  for (int l : table.labels) {
    if (l >= 0 && l < size) ++count[l];
  }
  auto realizable = [&count](int a, int b, int c) {
    return count[a] >= 1 + (a == b) + (a == c) &&
           count[b] >= 1 + (b == a) + (b == c) &&
           count[c] >= 1 + (c == a) + (c == b);
  };
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      const double ab = table.at(a, b);
      for (int c = 0; c < size; ++c) {
        if (!realizable(a, b, c)) continue;
        if (table.at(a, c) > ab + table.at(b, c) + tolerance) {
          out.push_back("triangle inequality fails for labels (" +
                        std::to_string(a) + ", " + std::to_string(b) + ", " +
                        std::to_string(c) + ")");
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace divmax
