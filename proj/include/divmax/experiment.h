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

// Experiment sweeps with normalized min/avg/max reporting, and runtime
// scaling benchmarks.

#ifndef DIVMAX_EXPERIMENT_H_
#define DIVMAX_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "divmax/geometry.h"
#include "divmax/instgen.h"
#include "divmax/model.h"
#include "divmax/solvers.h"

namespace divmax {

// What changes between the runs of one algorithm.
//   kSeed          seed = base_seed + run
//   kClusterOrder  as kSeed, plus a seeded random cluster order
//   kAlpha         as kSeed, plus alpha = alphas[run % alphas.size()]
enum class Vary { kSeed, kClusterOrder, kAlpha };

std::optional<Vary> ParseVary(std::string_view name);

struct AlgorithmSpec {
  std::string label;
  SolverConfig config;
  // Overrides ExperimentSpec::vary for this algorithm.
  std::optional<Vary> vary;
};

struct ExperimentSpec {
  std::vector<AlgorithmSpec> algorithms;
  int runs = 10;
  Vary vary = Vary::kClusterOrder;
  std::vector<double> alphas;
  std::uint64_t base_seed = 0;
  int workers = 1;
};

struct ReportRow {
  std::string algorithm;
  int run = 0;
  std::uint64_t seed = 0;
  ObjectiveValue objective;
  double score = 0.0;
  // score / best score over every row of the report
  double normalized = 0.0;
  double wall_seconds = 0.0;
  std::vector<int> counts;  // |S_j| per cluster
  std::string error;        // non-empty: the row failed
};

struct ExperimentReport {
  std::vector<ReportRow> rows;
};

// Runs every (algorithm, run) pair on `workers` threads. The report is
// identical for any worker count. A failing solver marks its row only.
// Throws std::invalid_argument when runs < 1, or when any algorithm sweeps
// alpha and there are no alphas.
ExperimentReport RunExperiment(const Instance& instance,
                               const DistanceOracle& oracle,
                               const ExperimentSpec& spec);

struct SummaryRow {
  std::string algorithm;
  double min = 0.0;
  double avg = 0.0;
  double max = 0.0;
  double avg_selected = 0.0;  // mean |S_j| over clusters and runs
  int failures = 0;
};

// One row per algorithm label, in first-appearance order.
std::vector<SummaryRow> Summarize(const ExperimentReport& report);

// Columns: algorithm, run, seed, quality, dispersion, combined, score,
// normalized, wall_seconds, counts (';'-joined), error. Reals use 17
// significant digits.
void WriteReportCsv(const ExperimentReport& report, std::ostream& out);
// Throws std::runtime_error on malformed input.
ExperimentReport ReadReportCsv(std::istream& in);

// Whitespace-separated min/avg/max per algorithm, gnuplot-ready.
void WriteSummaryTsv(std::span<const SummaryRow> summary, std::ostream& out);

struct BenchRow {
  int n = 0;
  double seconds = 0.0;
  // seconds / previous row's seconds; 0 for the first row
  double ratio = 0.0;
};

// Times `config` on instances generated from `base` with n replaced by each
// size. Generation and oracle construction are not timed; each size reports
// the fastest of `repeats` solves.
std::vector<BenchRow> BenchScaling(const GenSpec& base,
                                   std::span<const int> sizes,
                                   const SolverConfig& config,
                                   int repeats = 3);

}  // namespace divmax

#endif  // DIVMAX_EXPERIMENT_H_
