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

// Independent reference computations for tests. Nothing here goes through
// DistanceOracle, QualityState or the solvers.

#ifndef DIVMAX_TESTS_TEST_ORACLES_H_
#define DIVMAX_TESTS_TEST_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iterator>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "divmax/model.h"

namespace divmax::testing {

inline double RawDistance(const Instance& inst, int u, int v) {
  if (u == v) return 0.0;
  switch (inst.metric) {
    case Metric::kEuclidean: {
      double s = 0.0;
      for (int k = 0; k < inst.dim; ++k) {
        const double t = inst.vectors[u * inst.dim + k] -
                         inst.vectors[v * inst.dim + k];
        s += t * t;
      }
      return std::sqrt(s);
    }
    case Metric::kCosine: {
      double dot = 0.0;
      for (int k = 0; k < inst.dim; ++k) {
        dot += inst.vectors[u * inst.dim + k] * inst.vectors[v * inst.dim + k];
      }
      return std::sqrt(std::max(0.0, 2.0 - 2.0 * dot));
    }
    case Metric::kJaccard: {
      std::set<std::int64_t> a(inst.sets[u].begin(), inst.sets[u].end());
      std::set<std::int64_t> b(inst.sets[v].begin(), inst.sets[v].end());
      std::vector<std::int64_t> both, either;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(both));
      std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                     std::back_inserter(either));
      if (either.empty()) return 0.0;
      return 1.0 - static_cast<double>(both.size()) / either.size();
    }
    case Metric::kMatrix: {
      const DistanceTable& t = *inst.distances;
      const int a = t.labels.empty() ? u : t.labels[u];
      const int b = t.labels.empty() ? v : t.labels[v];
      return t.values[a * t.size + b];
    }
  }
  return 0.0;
}

inline double BruteDispersion(const Instance& inst, std::span<const int> s) {
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      total += RawDistance(inst, s[i], s[j]);
    }
  }
  return total;
}

inline double BruteQuality(const Instance& inst, std::span<const int> s) {
  const std::set<int> unique(s.begin(), s.end());
  switch (inst.quality.kind()) {
    case QualityKind::kZero:
      return 0.0;
    case QualityKind::kModular: {
      double total = 0.0;
      for (int v : unique) total += inst.quality.weights()[v];
      return total;
    }
    case QualityKind::kCoverage: {
      std::set<std::int64_t> items;
      for (int v : unique) {
        items.insert(inst.quality.covers()[v].begin(),
                     inst.quality.covers()[v].end());
      }
      return static_cast<double>(items.size());
    }
  }
  return 0.0;
}

inline std::vector<int> Flatten(const Solution& s) {
  std::vector<int> out;
  for (const auto& part : s.selected) out.insert(out.end(), part.begin(), part.end());
  return out;
}

inline double BruteIntra(const Instance& inst, const Solution& s) {
  double total = 0.0;
  for (const auto& part : s.selected) total += BruteDispersion(inst, part);
  return total;
}

inline double BruteScore(const Instance& inst, const Solution& s) {
  const double disp = BruteIntra(inst, s);
  if (inst.quality.is_zero()) return disp;
  return BruteQuality(inst, Flatten(s)) + inst.lambda * disp;
}

inline bool BruteFeasible(const Instance& inst, const Solution& s) {
  if (s.selected.size() != inst.clusters.size()) return false;
  std::set<int> used, cells;
  for (std::size_t j = 0; j < s.selected.size(); ++j) {
    const auto& members = inst.clusters[j].members;
    if (static_cast<int>(s.selected[j].size()) > inst.clusters[j].budget) {
      return false;
    }
    for (int v : s.selected[j]) {
      if (std::find(members.begin(), members.end(), v) == members.end()) {
        return false;
      }
      if (!used.insert(v).second) return false;
      const int cell = inst.cells.empty() ? v : inst.cells[v];
      if (!cells.insert(cell).second) return false;
    }
  }
  return true;
}

struct BruteResult {
  Solution solution;
  double score = 0.0;
};

// Plain enumeration of every feasible selection; keep instances tiny.
inline BruteResult BruteOptimum(const Instance& inst) {
  BruteResult best;
  best.solution.selected.assign(inst.clusters.size(), {});
  best.score = BruteScore(inst, best.solution);
  Solution cur;
  cur.selected.assign(inst.clusters.size(), {});
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t j,
                                                          std::size_t from) {
    if (j == inst.clusters.size()) {
      if (!BruteFeasible(inst, cur)) return;
      const double score = BruteScore(inst, cur);
      if (score > best.score + 1e-12 * std::max(1.0, best.score)) {
        best.score = score;
        best.solution = cur;
      }
      return;
    }
    rec(j + 1, 0);
    const auto& members = inst.clusters[j].members;
    if (static_cast<int>(cur.selected[j].size()) >= inst.clusters[j].budget) {
      return;
    }
    for (std::size_t i = from; i < members.size(); ++i) {
      cur.selected[j].push_back(members[i]);
      rec(j, i + 1);
      cur.selected[j].pop_back();
    }
  };
  // rec(j, from) visits S_j as built so far and every extension of it.
  rec(0, 0);
  return best;
}

inline Instance LineInstance(const std::vector<double>& coords,
                             const std::vector<std::vector<int>>& clusters,
                             const std::vector<int>& budgets) {
  Instance inst;
  inst.n = static_cast<int>(coords.size());
  inst.dim = 1;
  inst.vectors = coords;
  for (std::size_t j = 0; j < clusters.size(); ++j) {
    inst.clusters.push_back({clusters[j], budgets[j]});
  }
  return inst;
}

struct SmallOptions {
  int min_n = 4;
  int max_n = 12;
  int m = 0;  // 0: uniform in [1, max_m]
  int max_m = 3;
  int max_budget = 4;
  int max_overlap = 2;
  bool quality = false;
  bool even_budgets = false;
  bool partition = true;
};

// Shortest-path closure of random edge weights, which is always a metric.
inline DistanceTable RandomMetricTable(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> w(1, 10);
  DistanceTable t;
  t.size = n;
  t.values.assign(n * n, 0.0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      t.values[a * n + b] = t.values[b * n + a] = w(rng);
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        t.values[a * n + b] =
            std::min(t.values[a * n + b], t.values[a * n + k] + t.values[k * n + b]);
      }
    }
  }
  return t;
}

inline Instance RandomSmallInstance(std::mt19937_64& rng,
                                    const SmallOptions& opt) {
  auto uniform = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  Instance inst;
  inst.n = uniform(opt.min_n, opt.max_n);
  const int m = opt.m > 0 ? opt.m : uniform(1, opt.max_m);
  const int metric = uniform(0, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  if (metric == 0) {
    inst.metric = Metric::kEuclidean;
    inst.dim = uniform(1, 3);
    for (int i = 0; i < inst.n * inst.dim; ++i) inst.vectors.push_back(unit(rng));
  } else if (metric == 1) {
    inst.metric = Metric::kCosine;
    inst.dim = uniform(2, 4);
    for (int v = 0; v < inst.n; ++v) {
      std::vector<double> x(inst.dim);
      double norm = 0.0;
      do {
        norm = 0.0;
        for (double& c : x) {
          c = gauss(rng);
          norm += c * c;
        }
      } while (norm < 1e-6);
      norm = std::sqrt(norm);
      for (double c : x) inst.vectors.push_back(c / norm);
    }
  } else if (metric == 2) {
    inst.metric = Metric::kJaccard;
    inst.feature_kind = FeatureKind::kSet;
    for (int v = 0; v < inst.n; ++v) {
      std::vector<std::int64_t> s;
      for (int item = 0; item < 8; ++item) {
        if (unit(rng) < 0.4) s.push_back(item);
      }
      if (s.empty()) s.push_back(uniform(0, 7));
      inst.sets.push_back(s);
    }
  } else {
    inst.metric = Metric::kMatrix;
    inst.distances = RandomMetricTable(inst.n, rng);
  }

  inst.clusters.resize(m);
  const int overlap_cap = std::min(opt.max_overlap, m);
  std::vector<int> ids(m);
  for (int j = 0; j < m; ++j) ids[j] = j;
  for (int v = 0; v < inst.n; ++v) {
    const int k = uniform(1, overlap_cap);
    std::vector<int> chosen;
    std::sample(ids.begin(), ids.end(), std::back_inserter(chosen), k, rng);
    for (int j : chosen) inst.clusters[j].members.push_back(v);
  }
  for (auto& c : inst.clusters) {
    if (c.members.empty()) c.members.push_back(uniform(0, inst.n - 1));
    c.budget = opt.even_budgets ? 2 * uniform(0, opt.max_budget / 2)
                                : uniform(0, opt.max_budget);
  }
  if (opt.partition && unit(rng) < 0.3) {
    inst.cells.resize(inst.n);
    for (int v = 0; v < inst.n; ++v) inst.cells[v] = v;
    // Merge a few elements into shared cells.
    for (int r = 0; r < inst.n / 4; ++r) {
      inst.cells[uniform(0, inst.n - 1)] = inst.cells[uniform(0, inst.n - 1)];
    }
  }
  if (opt.quality) {
    const double lambdas[] = {0.1, 1.0, 10.0};
    inst.lambda = lambdas[uniform(0, 2)];
    if (uniform(0, 1) == 0) {
      std::vector<double> w(inst.n);
      for (double& x : w) x = uniform(0, 5);
      inst.quality = QualityFunction::Modular(w);
    } else {
      std::vector<std::vector<std::int64_t>> covers(inst.n);
      for (auto& c : covers) {
        for (int item = 0; item < 10; ++item) {
          if (unit(rng) < 0.25) c.push_back(item);
        }
      }
      inst.quality = QualityFunction::Coverage(covers);
    }
  }
  return inst;
}

}  // namespace divmax::testing

#endif  // DIVMAX_TESTS_TEST_ORACLES_H_
