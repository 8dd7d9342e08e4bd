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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "divmax/solvers.h"
#include "solver_internal.h"

namespace divmax {

const char* AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGp:
      return "gp";
    case Algorithm::kGpa:
      return "gpa";
    case Algorithm::kGelms:
      return "gelms";
    case Algorithm::kLsi:
      return "lsi";
    case Algorithm::kLsg:
      return "lsg";
    case Algorithm::kMc:
      return "mc";
    case Algorithm::kRn:
      return "rn";
    case Algorithm::kExact:
      return "exact";
  }
  return "?";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  lower.erase(std::remove(lower.begin(), lower.end(), '-'), lower.end());
  for (Algorithm a : {Algorithm::kGp, Algorithm::kGpa, Algorithm::kGelms,
                      Algorithm::kLsi, Algorithm::kLsg, Algorithm::kMc,
                      Algorithm::kRn, Algorithm::kExact}) {
    if (lower == AlgorithmName(a)) return a;
  }
  return std::nullopt;
}

const char* OddPolicyName(OddPolicy policy) {
  return policy == OddPolicy::kAlg1Arbitrary ? "alg1_arbitrary"
                                             : "roundup_remove";
}

std::optional<OddPolicy> ParseOddPolicy(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  std::replace(lower.begin(), lower.end(), '-', '_');
  if (lower == "alg1_arbitrary" || lower == "arbitrary") {
    return OddPolicy::kAlg1Arbitrary;
  }
  if (lower == "roundup_remove" || lower == "roundup") {
    return OddPolicy::kRoundUpRemove;
  }
  return std::nullopt;
}

const char* EventKindName(EventKind kind) {
  switch (kind) {
    case EventKind::kAddPair:
      return "add_pair";
    case EventKind::kAddSingle:
      return "add_single";
    case EventKind::kRemove:
      return "remove";
    case EventKind::kSwap:
      return "swap";
  }
  return "?";
}

void ValidateConfig(const Instance& instance, const SolverConfig& config) {
  if (!(config.alpha > 0.0 && config.alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1]");
  }
  if (!(config.epsilon > 0.0) || !std::isfinite(config.epsilon)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (!config.cluster_order.empty()) {
    std::vector<ClusterId> sorted = config.cluster_order;
    std::sort(sorted.begin(), sorted.end());
    bool ok = static_cast<int>(sorted.size()) == instance.num_clusters();
    for (std::size_t i = 0; ok && i < sorted.size(); ++i) {
      ok = sorted[i] == static_cast<ClusterId>(i);
    }
    if (!ok) {
      throw std::invalid_argument("cluster order is not a permutation");
    }
  }
  if (config.max_ls_iters && *config.max_ls_iters < 0) {
    throw std::invalid_argument("max_ls_iters must be non-negative");
  }
  if (config.initial &&
      !CheckFeasibility(instance, *config.initial).feasible()) {
    throw std::invalid_argument("initial solution is not feasible");
  }
}

OddPolicy EffectiveOddPolicy(const Instance& instance,
                             const SolverConfig& config) {
  if (config.odd_policy) return *config.odd_policy;
  return instance.quality.is_zero() ? OddPolicy::kAlg1Arbitrary
                                    : OddPolicy::kRoundUpRemove;
}

std::vector<double> SolveTrace::Trajectory() const {
  std::vector<double> out;
  out.reserve(events.size());
  for (const TraceEvent& e : events) out.push_back(e.objective);
  return out;
}

Solution ReplayTrace(const Instance& instance, const SolveTrace& trace) {
  SelectionState state(instance);
  for (const TraceEvent& e : trace.events) {
    switch (e.kind) {
      case EventKind::kAddPair:
        state.Add(e.cluster, e.first);
        state.Add(e.cluster, e.second);
        break;
      case EventKind::kAddSingle:
        state.Add(e.cluster, e.first);
        break;
      case EventKind::kRemove:
        state.Remove(e.cluster, e.first);
        break;
      case EventKind::kSwap:
        state.Replace(e.cluster, e.first, e.second);
        break;
    }
  }
  return state.ToSolution();
}

double ApproximationRatio(double oracle_score, double algorithm_score) {
  if (oracle_score <= 0.0) return 1.0;
  if (algorithm_score <= 0.0) return std::numeric_limits<double>::infinity();
  return oracle_score / algorithm_score;
}

double ApproximationRatio(const Instance& instance,
                          const DistanceOracle& oracle,
                          const Solution& algorithm_solution,
                          const Solution& oracle_solution) {
  return ApproximationRatio(Score(instance, oracle, oracle_solution),
                            Score(instance, oracle, algorithm_solution));
}

bool AcceptSecondEndpointByDistance(double d_xy, double d_x_furthest,
                                    double alpha) {
  return d_xy >= alpha * d_x_furthest;
}

bool AcceptFirstEndpointByQuality(double q_x, double q_best, double alpha) {
  return q_x >= alpha * q_best;
}

bool AcceptSecondEndpointByGain(double phi_xy, double q_x,
                                double phi_best_for_x, double alpha) {
  return phi_xy - q_x >= alpha * (phi_best_for_x - q_x);
}

SolveResult Solve(const Instance& instance, const DistanceOracle& oracle,
                  const SolverConfig& config) {
  switch (config.algorithm) {
    case Algorithm::kGp:
      return SolveGp(instance, oracle, config);
    case Algorithm::kGpa:
      return SolveGpa(instance, oracle, config);
    case Algorithm::kGelms:
      return SolveGelms(instance, oracle, config);
    case Algorithm::kLsi:
      return SolveLsi(instance, oracle, config);
    case Algorithm::kLsg:
      return SolveLsg(instance, oracle, config);
    case Algorithm::kMc:
      return SolveMc(instance, oracle, config);
    case Algorithm::kRn:
      return SolveRn(instance, oracle, config);
    case Algorithm::kExact: {
      internal::Run run(instance, oracle);
      const ExactResult exact = SolveExact(instance, oracle, config.exact);
      for (ClusterId j = 0; j < instance.num_clusters(); ++j) {
        for (ElementId v : exact.solution.selected[j]) {
          run.AddSingle(j, v, 0.0);
        }
      }
      return run.Finish();
    }
  }
  throw std::invalid_argument("unknown algorithm");
}

namespace internal {

Run::Run(const Instance& instance, const DistanceOracle& oracle, bool global)
    : instance_(&instance),
      oracle_(&oracle),
      global_(global),
      state_(instance),
      quality_(instance.quality, instance.n),
      start_(std::chrono::steady_clock::now()) {}

double Run::objective() const {
  if (instance_->quality.is_zero()) return dispersion_;
  return quality_.value() + instance_->lambda * dispersion_;
}

double Run::PeerSum(ClusterId j, ElementId v) const {
  if (!global_) return oracle_->SetDistanceSum(v, state_.selected(j));
  double total = 0.0;
  for (ClusterId k = 0; k < instance_->num_clusters(); ++k) {
    total += oracle_->SetDistanceSum(v, state_.selected(k));
  }
  return total;
}

void Run::Insert(ClusterId j, ElementId v) {
  const double peers = PeerSum(j, v);
  state_.Add(j, v);
  quality_.Add(v);
  dispersion_ += peers;
  chronology_.push_back({v, j});
}

void Run::Erase(ClusterId j, ElementId v) {
  state_.Remove(j, v);
  quality_.Remove(v);
  dispersion_ -= PeerSum(j, v);
  chronology_.erase(std::find_if(
      chronology_.begin(), chronology_.end(),
      [v](const SelectionRecord& r) { return r.element == v; }));
}

void Run::Log(EventKind kind, ClusterId j, ElementId first, ElementId second,
              double gain) {
  trace_.events.push_back(
      {kind, iteration_++, j, first, second, gain, objective()});
}

void Run::AddPair(ClusterId j, ElementId u, ElementId v, double gain) {
  Insert(j, u);
  Insert(j, v);
  Log(EventKind::kAddPair, j, u, v, gain);
}

void Run::AddSingle(ClusterId j, ElementId v, double gain) {
  Insert(j, v);
  Log(EventKind::kAddSingle, j, v, kNoElement, gain);
}

void Run::Remove(ClusterId j, ElementId v, double gain) {
  Erase(j, v);
  Log(EventKind::kRemove, j, v, kNoElement, gain);
}

void Run::Swap(ClusterId j, ElementId out, ElementId in, double gain) {
  state_.Replace(j, out, in);
  // Replace keeps the position in S_j; redo the bookkeeping around it.
  quality_.Remove(out);
  quality_.Add(in);
  dispersion_ += PeerSum(j, in);
  dispersion_ -= PeerSum(j, out) - oracle_->Distance(out, in);
  for (SelectionRecord& r : chronology_) {
    if (r.element == out) r.element = in;
  }
  Log(EventKind::kSwap, j, out, in, gain);
}

std::vector<SelectionRecord> Run::Chronology() const { return chronology_; }

SolveResult Run::Finish() {
  SolveResult result;
  result.solution = state_.ToSolution();
  result.objective = CombinedObjective(*instance_, *oracle_, result.solution);
  result.score = Score(*instance_, result.objective);
  trace_.wall_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
  result.trace = std::move(trace_);
  return result;
}

std::vector<int> PairPhaseBudgets(const Instance& instance, OddPolicy policy) {
  std::vector<int> out;
  out.reserve(instance.clusters.size());
  for (const Cluster& c : instance.clusters) {
    out.push_back(PairBudget(c.budget, policy == OddPolicy::kRoundUpRemove));
  }
  return out;
}

bool CanTakePair(const Run& run, const std::vector<int>& budgets,
                 ClusterId j) {
  return run.state().size(j) + 2 <= budgets[j] &&
         run.state().HasAvailablePair(j);
}

void FinishOddBudgets(Run& run, OddPolicy policy) {
  const Instance& instance = run.instance();
  const DistanceOracle& oracle = run.oracle();
  const bool quality = !instance.quality.is_zero();
  if (policy == OddPolicy::kAlg1Arbitrary) {
    for (ClusterId j = 0; j < instance.num_clusters(); ++j) {
      const int budget = instance.clusters[j].budget;
      if (budget % 2 == 0 || run.state().size(j) >= budget) continue;
      ElementId best = kNoElement;
      double best_gain = -1.0;
      for (ElementId v : instance.clusters[j].members) {
        if (!run.state().IsAvailable(v)) continue;
        const double d = oracle.SetDistanceSum(v, run.state().selected(j));
        const double gain =
            quality ? run.quality().Marginal(v) + instance.lambda * d : d;
        if (gain > best_gain || (gain == best_gain && v < best)) {
          best = v;
          best_gain = gain;
        }
      }
      if (best != kNoElement) run.AddSingle(j, best, best_gain);
    }
    return;
  }
  const std::vector<SelectionRecord> order = run.Chronology();
  const std::vector<double> measures =
      RemovalMeasures(instance, oracle, order);
  for (ClusterId j = 0; j < instance.num_clusters(); ++j) {
    const int budget = instance.clusters[j].budget;
    if (budget % 2 == 0 || run.state().size(j) <= budget) continue;
    std::size_t worst = order.size();
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (order[i].cluster != j) continue;
      if (worst == order.size() || measures[i] < measures[worst] ||
          (measures[i] == measures[worst] &&
           order[i].element < order[worst].element)) {
        worst = i;
      }
    }
    run.Remove(j, order[worst].element, measures[worst]);
  }
}

void FillShortClusters(Run& run) {
  const Instance& instance = run.instance();
  const DistanceOracle& oracle = run.oracle();
  const bool quality = !instance.quality.is_zero();
  for (ClusterId j = 0; j < instance.num_clusters(); ++j) {
    while (run.state().size(j) < instance.clusters[j].budget) {
      ElementId best = kNoElement;
      double best_gain = -1.0;
      for (ElementId v : instance.clusters[j].members) {
        if (!run.state().IsAvailable(v)) continue;
        const double d = oracle.SetDistanceSum(v, run.state().selected(j));
        const double gain =
            quality ? run.quality().Marginal(v) + instance.lambda * d : d;
        if (gain > best_gain || (gain == best_gain && v < best)) {
          best = v;
          best_gain = gain;
        }
      }
      if (best == kNoElement) break;
      run.AddSingle(j, best, best_gain);
    }
  }
}

std::vector<std::vector<ElementId>> SortedMembers(const Instance& instance) {
  std::vector<std::vector<ElementId>> out;
  out.reserve(instance.clusters.size());
  for (const Cluster& c : instance.clusters) {
    out.push_back(c.members);
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace internal
}  // namespace divmax
