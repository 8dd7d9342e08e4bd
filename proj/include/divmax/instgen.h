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

// Synthetic and adversarial instance constructors.

#ifndef DIVMAX_INSTGEN_H_
#define DIVMAX_INSTGEN_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "divmax/model.h"

namespace divmax {

enum class Family { kRandom, kPrototype, kFig1, kTight };

const char* FamilyName(Family family);
std::optional<Family> ParseFamily(std::string_view name);

struct GenSpec {
  Family family = Family::kRandom;
  int n = 100;
  int dim = 2;
  int m = 10;
  int budget = 10;           // uniform budget
  std::vector<int> budgets;  // per cluster; overrides `budget` when set
  int overlap = 1;           // clusters per element (random)
  double spread = 0.1;       // Gaussian std around prototypes
  double separation = 100;   // D (fig1)
  int q = 2;                 // tight
  double eps = 1e-6;         // tight
  double lambda = 1.0;
  std::uint64_t seed = 0;
};

// n uniform vectors in [0,1]^dim under the euclidean metric; each element
// joins `overlap` distinct clusters drawn uniformly. A cluster left empty
// receives one uniformly drawn element. Throws std::invalid_argument when
// overlap is outside [1, m].
Instance GenerateRandom(const GenSpec& spec);

// m prototype centers uniform in [0,1]^dim. Each element is drawn from
// N(center_c, spread^2 I) for a uniform cluster c, and joins c and the
// cluster of its nearest center. Empty clusters are repaired as above.
Instance GeneratePrototype(const GenSpec& spec);

// Instance on which element greedy and single-swap local search are
// arbitrarily bad. Three left clusters L_i = {h_i, o_i} (budget 2) with h_i
// at (i * D, 0), and a right cluster R = {o_1, o_2, o_3, r} (budget 3) whose
// members sit within unit distance of the origin: the o_i form a unit
// equilateral triangle and r is its centroid.
struct Fig1Instance {
  Instance instance;
  ClusterId right_cluster = 3;
  // R holds all o_i, each L_i holds only h_i.
  Solution adversarial_init;
  // Cluster order that processes R first.
  std::vector<ClusterId> right_first_order;
};
Fig1Instance GenerateFig1(double separation);

// Tight family for greedy pairs. Cluster 0 holds 4q elements: a clique of
// 2q elements at mutual distance 2 and the 2q hubs. Clusters 1..q each hold
// two hubs at distance 2 + eps and 2q further elements at mutual distance
// eps and distance 2 from their hubs. Remaining pairs inside cluster 0 are
// at 1 + eps; other pairs take their shortest-path distance. All budgets
// are 2q and distances come as a labelled block table.
struct TightInstance {
  Instance instance;
  Solution optimal;      // hubs and 2q - 2 others per hub cluster, clique
  Solution adversarial;  // hub pairs in cluster 0, non-hubs elsewhere
};
// Throws std::invalid_argument unless q >= 2 and eps > 0.
TightInstance GenerateTight(int q, double eps);

// Dispatches on spec.family.
Instance Generate(const GenSpec& spec);

}  // namespace divmax

#endif  // DIVMAX_INSTGEN_H_
