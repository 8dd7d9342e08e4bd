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

// Selection algorithms for intra-cluster diversity.
//
//   GP     greedy pairs: repeatedly add the within-cluster pair of maximal
//          weighted gain over all unsaturated clusters.
//   GPA    GP with an anchor-based 2-approximate diameter and a relaxation
//          alpha trading pair span against distance to the current
//          selection; linear in n per iteration. Optional enhanced scheme.
//   GELMS  cluster-by-cluster element greedy on
//          Q(v | S) / 2 + lambda * d(v, S_j).
//   LSI    single-swap local search on the intra-cluster objective.
//   LSG    single-swap local search on global dispersion.
//   MC     element greedy on marginal quality only.
//   RN     uniformly random feasible fill.
//   EXACT  exhaustive search, for verification on small instances.
//
// Tie-breaking everywhere: larger gain, then smaller cluster id, then
// smaller first element id, then smaller second element id.

#ifndef DIVMAX_SOLVERS_H_
#define DIVMAX_SOLVERS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "divmax/geometry.h"
#include "divmax/model.h"
#include "divmax/objective.h"

namespace divmax {

enum class Algorithm { kGp, kGpa, kGelms, kLsi, kLsg, kMc, kRn, kExact };

// kAlg1Arbitrary: pair loop against 2 floor(b/2), then one extra element per
// odd-budget cluster. kRoundUpRemove: pair loop against 2 ceil(b/2), then
// per odd-budget cluster drop the element with the least removal measure.
enum class OddPolicy { kAlg1Arbitrary, kRoundUpRemove };

const char* AlgorithmName(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);
const char* OddPolicyName(OddPolicy policy);
std::optional<OddPolicy> ParseOddPolicy(std::string_view name);

struct ExactLimits {
  // Upper bound on prod_j sum_{k <= b_j} C(|C_j|, k).
  double max_search_space = 1e7;
};

struct SolverConfig {
  Algorithm algorithm = Algorithm::kGp;
  double alpha = 1.0;     // GPA, in (0, 1]
  double epsilon = 1e-3;  // local search, relative improvement threshold
  std::uint64_t seed = 0;
  // Processing order for GELMS and RN; empty means 0..m-1.
  std::vector<ClusterId> cluster_order;
  bool enhanced = false;  // GPA covering scheme
  // Unset: kAlg1Arbitrary under zero quality, kRoundUpRemove otherwise.
  std::optional<OddPolicy> odd_policy;
  // Unset: 10 * n * max budget.
  std::optional<std::int64_t> max_ls_iters;
  // Local-search start; unset means RN with `seed`.
  std::optional<Solution> initial;
  ExactLimits exact;
};

// Throws std::invalid_argument for alpha outside (0, 1], epsilon <= 0 or a
// cluster order that is not a permutation.
void ValidateConfig(const Instance& instance, const SolverConfig& config);

OddPolicy EffectiveOddPolicy(const Instance& instance,
                             const SolverConfig& config);

enum class EventKind { kAddPair, kAddSingle, kRemove, kSwap };

const char* EventKindName(EventKind kind);

// kAddPair adds first and second to the cluster. kAddSingle adds first.
// kRemove removes first. kSwap replaces first (out) by second (in), in place.
struct TraceEvent {
  EventKind kind = EventKind::kAddSingle;
  int iteration = 0;
  ClusterId cluster = -1;
  ElementId first = kNoElement;
  ElementId second = kNoElement;
  double gain = 0.0;
  // Objective the solver optimizes, right after the event.
  double objective = 0.0;

  bool operator==(const TraceEvent&) const = default;
};

struct SolveTrace {
  std::vector<TraceEvent> events;
  double wall_seconds = 0.0;

  std::vector<double> Trajectory() const;
};

struct SolveResult {
  Solution solution;
  SolveTrace trace;
  ObjectiveValue objective;
  double score = 0.0;
};

SolveResult SolveGp(const Instance& instance, const DistanceOracle& oracle,
                    const SolverConfig& config);
SolveResult SolveGpa(const Instance& instance, const DistanceOracle& oracle,
                     const SolverConfig& config);
SolveResult SolveGelms(const Instance& instance, const DistanceOracle& oracle,
                       const SolverConfig& config);
SolveResult SolveLsi(const Instance& instance, const DistanceOracle& oracle,
                     const SolverConfig& config);
SolveResult SolveLsg(const Instance& instance, const DistanceOracle& oracle,
                     const SolverConfig& config);
SolveResult SolveMc(const Instance& instance, const DistanceOracle& oracle,
                    const SolverConfig& config);
SolveResult SolveRn(const Instance& instance, const DistanceOracle& oracle,
                    const SolverConfig& config);

class OracleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactResult {
  Solution solution;
  ObjectiveValue objective;
  double score = 0.0;
  std::int64_t nodes = 0;
};

// prod_j sum_{k <= min(b_j, |C_j|)} C(|C_j|, k).
double ExactSearchSpace(const Instance& instance);

// Maximizes Score() over all feasible selections. Among maximizers the first
// in enumeration order wins (clusters in id order, members in member order,
// larger subsets first). Throws OracleLimitExceeded when the search space
// exceeds the limit.
ExactResult SolveExact(const Instance& instance, const DistanceOracle& oracle,
                       const ExactLimits& limits = {});

// Dispatches on config.algorithm. EXACT results carry a trace of single
// additions so that replay still reconstructs the solution.
SolveResult Solve(const Instance& instance, const DistanceOracle& oracle,
                  const SolverConfig& config);

// Applies the events in order to an empty selection.
Solution ReplayTrace(const Instance& instance, const SolveTrace& trace);

// oracle / algorithm, defined as 1 when the oracle value is not positive and
// +inf when only the algorithm value is zero.
double ApproximationRatio(double oracle_score, double algorithm_score);
double ApproximationRatio(const Instance& instance,
                          const DistanceOracle& oracle,
                          const Solution& algorithm_solution,
                          const Solution& oracle_solution);

// Relaxed acceptance predicates of GPA. The built-in search takes exact
// argmaxes, which satisfy all three for any alpha <= 1.
// Dispersion mode: second endpoint spans at least alpha of the furthest.
bool AcceptSecondEndpointByDistance(double d_xy, double d_x_furthest,
                                    double alpha);
// Quality mode: first endpoint has at least alpha of the best marginal.
bool AcceptFirstEndpointByQuality(double q_x, double q_best, double alpha);
// Quality mode: the pair adds at least alpha of the best extra gain that any
// partner of x adds on top of Q(x).
bool AcceptSecondEndpointByGain(double phi_xy, double q_x,
                                double phi_best_for_x, double alpha);

}  // namespace divmax

#endif  // DIVMAX_SOLVERS_H_
