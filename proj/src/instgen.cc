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

#include "divmax/instgen.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace divmax {

const char* FamilyName(Family family) {
  switch (family) {
    case Family::kRandom:
      return "random";
    case Family::kPrototype:
      return "prototype";
    case Family::kFig1:
      return "fig1";
    case Family::kTight:
      return "tight";
  }
  return "?";
}

std::optional<Family> ParseFamily(std::string_view name) {
  for (Family f :
       {Family::kRandom, Family::kPrototype, Family::kFig1, Family::kTight}) {
    if (name == FamilyName(f)) return f;
  }
  return std::nullopt;
}

namespace {

void CheckCommon(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("n must be at least 1");
  if (spec.m < 1) throw std::invalid_argument("m must be at least 1");
  if (spec.dim < 1) throw std::invalid_argument("dim must be at least 1");
  if (!spec.budgets.empty() && static_cast<int>(spec.budgets.size()) != spec.m) {
    throw std::invalid_argument("expected one budget per cluster");
  }
  for (int b : spec.budgets) {
    if (b < 0) throw std::invalid_argument("budget must be non-negative");
  }
  if (spec.budgets.empty() && spec.budget < 0) {
    throw std::invalid_argument("budget must be non-negative");
  }
  if (spec.lambda < 0) throw std::invalid_argument("lambda must be >= 0");
}

Instance VectorShell(const GenSpec& spec) {
  Instance inst;
  inst.n = spec.n;
  inst.feature_kind = FeatureKind::kVector;
  inst.dim = spec.dim;
  inst.metric = Metric::kEuclidean;
  inst.lambda = spec.lambda;
  inst.clusters.resize(spec.m);
  for (int j = 0; j < spec.m; ++j) {
    inst.clusters[j].budget =
        spec.budgets.empty() ? spec.budget : spec.budgets[j];
  }
  return inst;
}

// Clusters left empty by sampling get one uniformly drawn element.
void RepairEmpty(Instance& inst, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, inst.n - 1);
  for (Cluster& c : inst.clusters) {
    if (c.members.empty()) c.members.push_back(pick(rng));
  }
}

}  // namespace

Instance GenerateRandom(const GenSpec& spec) {
  CheckCommon(spec);
  if (spec.overlap < 1 || spec.overlap > spec.m) {
    throw std::invalid_argument("overlap must lie in [1, m]");
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Instance inst = VectorShell(spec);
  inst.vectors.resize(static_cast<std::size_t>(spec.n) * spec.dim);
  for (double& x : inst.vectors) x = unit(rng);
  std::vector<int> ids(spec.m);
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<int> chosen;
  for (int v = 0; v < spec.n; ++v) {
    chosen.clear();
    std::sample(ids.begin(), ids.end(), std::back_inserter(chosen),
                spec.overlap, rng);
    for (int j : chosen) inst.clusters[j].members.push_back(v);
  }
  RepairEmpty(inst, rng);
  return inst;
}

Instance GeneratePrototype(const GenSpec& spec) {
  CheckCommon(spec);
  if (!(spec.spread > 0.0)) throw std::invalid_argument("spread must be > 0");
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, spec.spread);
  std::uniform_int_distribution<int> cluster(0, spec.m - 1);
  const int dim = spec.dim;
  std::vector<double> centers(static_cast<std::size_t>(spec.m) * dim);
  for (double& x : centers) x = unit(rng);

  Instance inst = VectorShell(spec);
  inst.vectors.resize(static_cast<std::size_t>(spec.n) * dim);
  for (int v = 0; v < spec.n; ++v) {
    const int home = cluster(rng);
    double* x = inst.vectors.data() + static_cast<std::size_t>(v) * dim;
    for (int k = 0; k < dim; ++k) x[k] = centers[home * dim + k] + noise(rng);
    int nearest = 0;
    double nearest_d = INFINITY;
    for (int j = 0; j < spec.m; ++j) {
      double d = 0.0;
      for (int k = 0; k < dim; ++k) {
        const double t = x[k] - centers[j * dim + k];
        d += t * t;
      }
      if (d < nearest_d) {
        nearest = j;
        nearest_d = d;
      }
    }
    inst.clusters[home].members.push_back(v);
    if (nearest != home) inst.clusters[nearest].members.push_back(v);
  }
  RepairEmpty(inst, rng);
  return inst;
}

Fig1Instance GenerateFig1(double separation) {
  if (!(separation > 1.0)) {
    throw std::invalid_argument("separation must exceed 1");
  }
  // Ids: o_1, o_2, o_3 = 0, 1, 2 form a unit triangle at the origin, r = 3
  // is its centroid, h_i = 3 + i sits at (i * D, 0).
  const double s3 = std::sqrt(3.0);
  Fig1Instance out;
  Instance& inst = out.instance;
  inst.n = 7;
  inst.dim = 2;
  inst.metric = Metric::kEuclidean;
  inst.vectors = {0.0, 0.0,  1.0, 0.0,  0.5, s3 / 2, 0.5, s3 / 6,
                  separation, 0.0,  2 * separation, 0.0,  3 * separation, 0.0};
  for (int i = 0; i < 3; ++i) inst.clusters.push_back({{4 + i, i}, 2});
  // R has budget 3 so it can absorb every o_i.
  inst.clusters.push_back({{0, 1, 2, 3}, 3});
  out.right_cluster = 3;
  out.adversarial_init.selected = {{4}, {5}, {6}, {0, 1, 2}};
  out.right_first_order = {3, 0, 1, 2};
  return out;
}

TightInstance GenerateTight(int q, double eps) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  // Ids: clique K = [0, 2q); hubs of hub cluster j at 2q + 2j, 2q + 2j + 1;
  // its 2q non-hubs at 4q + 2qj + t. Cluster 0 is the clique-and-matching
  // cluster, cluster 1 + j the j-th hub cluster.
  const int k = 2 * q;
  const int n = 4 * q + k * q;
  auto hub = [k](int j, int t) { return k + 2 * j + t; };
  auto nonhub = [k](int j, int t) { return 2 * k + k * j + t; };

  // Block labels: 0 = K, 1 + j = hubs of j, 1 + q + j = non-hubs of j.
  DistanceTable table;
  table.size = 1 + 2 * q;
  table.values.assign(static_cast<std::size_t>(table.size) * table.size, 0.0);
  auto set = [&table](int a, int b, double d) {
    table.values[a * table.size + b] = d;
    table.values[b * table.size + a] = d;
  };
  set(0, 0, 2.0);
  for (int j = 0; j < q; ++j) {
    const int h = 1 + j, c = 1 + q + j;
    set(0, h, 1.0 + eps);
    set(0, c, 3.0 + eps);
    set(h, h, 2.0 + eps);
    set(c, c, eps);
    set(h, c, 2.0);
    for (int i = 0; i < q; ++i) {
      if (i == j) continue;
      set(h, 1 + i, 1.0 + eps);
      set(h, 1 + q + i, 3.0 + eps);
      set(c, 1 + q + i, 5.0 + eps);
    }
  }
  table.labels.resize(n);
  for (int v = 0; v < k; ++v) table.labels[v] = 0;
  for (int j = 0; j < q; ++j) {
    table.labels[hub(j, 0)] = table.labels[hub(j, 1)] = 1 + j;
    for (int t = 0; t < k; ++t) table.labels[nonhub(j, t)] = 1 + q + j;
  }

  TightInstance out;
  Instance& inst = out.instance;
  inst.n = n;
  inst.feature_kind = FeatureKind::kVector;
  inst.dim = 0;
  inst.metric = Metric::kMatrix;
  inst.distances = std::move(table);
  Cluster big{{}, k};
  for (int v = 0; v < 2 * k; ++v) big.members.push_back(v);
  inst.clusters.push_back(std::move(big));
  out.optimal.selected.resize(q + 1);
  out.adversarial.selected.resize(q + 1);
  for (int v = 0; v < k; ++v) out.optimal.selected[0].push_back(v);
  for (int j = 0; j < q; ++j) {
    Cluster c{{hub(j, 0), hub(j, 1)}, k};
    for (int t = 0; t < k; ++t) c.members.push_back(nonhub(j, t));
    inst.clusters.push_back(std::move(c));
    auto& opt = out.optimal.selected[1 + j];
    opt = {hub(j, 0), hub(j, 1)};
    for (int t = 0; t < k - 2; ++t) opt.push_back(nonhub(j, t));
    out.adversarial.selected[0].push_back(hub(j, 0));
    out.adversarial.selected[0].push_back(hub(j, 1));
    for (int t = 0; t < k; ++t) {
      out.adversarial.selected[1 + j].push_back(nonhub(j, t));
    }
  }
  return out;
}

Instance Generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::kRandom:
      return GenerateRandom(spec);
    case Family::kPrototype:
      return GeneratePrototype(spec);
    case Family::kFig1:
      return GenerateFig1(spec.separation).instance;
    case Family::kTight:
      return GenerateTight(spec.q, spec.eps).instance;
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace divmax
