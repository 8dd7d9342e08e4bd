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

#include "divmax/experiment.h"

#include <sstream>
#include <vector>

#include "divmax/geometry.h"
#include "divmax/instgen.h"
#include "gtest/gtest.h"
#include "test_oracles.h"

namespace divmax {
namespace {

Instance SmallRandom() {
  GenSpec spec;
  spec.n = 120;
  spec.m = 4;
  spec.budget = 4;
  spec.overlap = 2;
  spec.seed = 5;
  return Generate(spec);
}

AlgorithmSpec Algo(const std::string& label, Algorithm a) {
  SolverConfig c;
  c.algorithm = a;
  return {label, c, std::nullopt};
}

TEST(ExperimentTest, SingleRunNormalizesToOne) {
  const Instance inst = SmallRandom();
  ExperimentSpec spec;
  spec.algorithms = {Algo("gp", Algorithm::kGp)};
  spec.runs = 1;
  const ExperimentReport r = RunExperiment(inst, DistanceOracle(inst), spec);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].normalized, 1.0);
  EXPECT_EQ(r.rows[0].counts.size(), 4u);
}

TEST(ExperimentTest, NormalizationAndSummary) {
  const Instance inst = SmallRandom();
  const DistanceOracle d(inst);
  ExperimentSpec spec;
  spec.algorithms = {Algo("gpa", Algorithm::kGpa), Algo("rn", Algorithm::kRn)};
  spec.runs = 5;
  spec.base_seed = 100;
  const ExperimentReport r = RunExperiment(inst, d, spec);
  ASSERT_EQ(r.rows.size(), 10u);
  double best = 0.0;
  for (const auto& row : r.rows) best = std::max(best, row.score);
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.error.empty());
    EXPECT_DOUBLE_EQ(row.normalized, row.score / best);
    EXPECT_EQ(row.seed, 100u + row.run);
  }
  const auto summary = Summarize(r);
  ASSERT_EQ(summary.size(), 2u);
  EXPECT_EQ(summary[0].algorithm, "gpa");
  EXPECT_EQ(summary[1].algorithm, "rn");
  for (const auto& s : summary) {
    EXPECT_LE(s.min, s.avg);
    EXPECT_LE(s.avg, s.max);
    EXPECT_LE(s.max, 1.0);
    EXPECT_EQ(s.failures, 0);
  }
}

TEST(ExperimentTest, WorkerCountDoesNotChangeTheReport) {
  const Instance inst = SmallRandom();
  const DistanceOracle d(inst);
  ExperimentSpec spec;
  spec.algorithms = {Algo("gelms", Algorithm::kGelms), Algo("rn", Algorithm::kRn),
                     Algo("lsi", Algorithm::kLsi)};
  spec.runs = 4;
  const ExperimentReport one = RunExperiment(inst, d, spec);
  spec.workers = 3;
  const ExperimentReport three = RunExperiment(inst, d, spec);
  ASSERT_EQ(one.rows.size(), three.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    EXPECT_EQ(one.rows[i].algorithm, three.rows[i].algorithm);
    EXPECT_EQ(one.rows[i].score, three.rows[i].score);
    EXPECT_EQ(one.rows[i].counts, three.rows[i].counts);
  }
}

TEST(ExperimentTest, ClusterOrderVariesGelms) {
  const Fig1Instance f = GenerateFig1(100);
  ExperimentSpec spec;
  spec.algorithms = {Algo("gelms", Algorithm::kGelms)};
  spec.runs = 12;
  spec.vary = Vary::kClusterOrder;
  const ExperimentReport r =
      RunExperiment(f.instance, DistanceOracle(f.instance), spec);
  double lo = r.rows[0].score, hi = lo;
  for (const auto& row : r.rows) {
    lo = std::min(lo, row.score);
    hi = std::max(hi, row.score);
  }
  EXPECT_LT(lo, hi);
}

TEST(ExperimentTest, AlphaSweep) {
  const Instance inst = SmallRandom();
  ExperimentSpec spec;
  spec.algorithms = {Algo("gpa", Algorithm::kGpa)};
  spec.runs = 3;
  spec.vary = Vary::kAlpha;
  EXPECT_THROW(RunExperiment(inst, DistanceOracle(inst), spec),
               std::invalid_argument);
  spec.alphas = {0.5, 0.75, 1.0};
  const ExperimentReport r = RunExperiment(inst, DistanceOracle(inst), spec);
  for (const auto& row : r.rows) EXPECT_TRUE(row.error.empty());
}

TEST(ExperimentTest, PerAlgorithmSweep) {
  const Instance inst = SmallRandom();
  ExperimentSpec spec;
  AlgorithmSpec gpa = Algo("gpa", Algorithm::kGpa);
  gpa.vary = Vary::kAlpha;
  spec.algorithms = {gpa, Algo("gelms", Algorithm::kGelms)};
  spec.runs = 4;
  EXPECT_THROW(RunExperiment(inst, DistanceOracle(inst), spec),
               std::invalid_argument);
  spec.alphas = {0.2, 1.0};
  const DistanceOracle d(inst);
  const ExperimentReport r = RunExperiment(inst, d, spec);
  ASSERT_EQ(r.rows.size(), 8u);
  for (int run = 0; run < 4; ++run) {
    SolverConfig c;
    c.algorithm = Algorithm::kGpa;
    c.alpha = spec.alphas[run % 2];
    EXPECT_EQ(r.rows[run].score, Solve(inst, d, c).score);
  }
  // G-Elms keeps the spec-wide cluster-order sweep.
  spec.algorithms = {Algo("gelms", Algorithm::kGelms)};
  const ExperimentReport alone = RunExperiment(inst, d, spec);
  for (int run = 0; run < 4; ++run) {
    EXPECT_EQ(r.rows[4 + run].score, alone.rows[run].score);
  }
}

TEST(ExperimentTest, FailuresStayInTheirRow) {
  const Instance inst = SmallRandom();
  ExperimentSpec spec;
  AlgorithmSpec bad = Algo("gpa-bad", Algorithm::kGpa);
  bad.config.alpha = 2.0;
  spec.algorithms = {Algo("gp", Algorithm::kGp), bad};
  spec.runs = 2;
  const ExperimentReport r = RunExperiment(inst, DistanceOracle(inst), spec);
  EXPECT_TRUE(r.rows[0].error.empty());
  EXPECT_FALSE(r.rows[2].error.empty());
  EXPECT_EQ(r.rows[0].normalized, 1.0);
  const auto summary = Summarize(r);
  EXPECT_EQ(summary[1].failures, 2);
}

TEST(ExperimentTest, RejectsZeroRuns) {
  const Instance inst = SmallRandom();
  ExperimentSpec spec;
  spec.algorithms = {Algo("gp", Algorithm::kGp)};
  spec.runs = 0;
  EXPECT_THROW(RunExperiment(inst, DistanceOracle(inst), spec),
               std::invalid_argument);
}

TEST(ReportCsvTest, RoundTrip) {
  ExperimentReport r;
  ReportRow row;
  row.algorithm = "gp, odd";
  row.run = 3;
  row.seed = 1234567890123ULL;
  row.objective = {0.1, 1.0 / 3.0, 2.0 / 7.0};
  row.score = 1.0 / 3.0;
  row.normalized = 0.7;
  row.wall_seconds = 1e-5;
  row.counts = {1, 0, 4};
  r.rows.push_back(row);
  row.algorithm = "rn";
  row.counts.clear();
  row.error = "it said \"no\"";
  r.rows.push_back(row);
  std::stringstream s;
  WriteReportCsv(r, s);
  const ExperimentReport back = ReadReportCsv(s);
  ASSERT_EQ(back.rows.size(), 2u);
  EXPECT_EQ(back.rows[0].algorithm, "gp, odd");
  EXPECT_EQ(back.rows[0].seed, row.seed);
  EXPECT_EQ(back.rows[0].objective.dispersion, 1.0 / 3.0);
  EXPECT_EQ(back.rows[0].counts, (std::vector<int>{1, 0, 4}));
  EXPECT_EQ(back.rows[1].error, "it said \"no\"");
  EXPECT_TRUE(back.rows[1].counts.empty());

  std::stringstream junk("not,a,report\n");
  EXPECT_THROW(ReadReportCsv(junk), std::runtime_error);
}

TEST(SummaryTsvTest, Header) {
  std::stringstream s;
  WriteSummaryTsv(std::vector<SummaryRow>{{"gp", 0.5, 0.75, 1.0, 2.0, 0}}, s);
  std::string header;
  std::getline(s, header);
  EXPECT_EQ(header, "algorithm\tmin\tavg\tmax\tavg_selected\tfailures");
}

TEST(BenchTest, ShapeAndRatios) {
  GenSpec base;
  base.m = 4;
  base.budget = 4;
  SolverConfig c;
  c.algorithm = Algorithm::kGpa;
  EXPECT_TRUE(BenchScaling(base, {}, c).empty());
  const std::vector<int> sizes = {200, 400};
  const auto rows = BenchScaling(base, sizes, c, 2);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].n, 200);
  EXPECT_EQ(rows[0].ratio, 0.0);
  EXPECT_GT(rows[1].seconds, 0.0);
  EXPECT_DOUBLE_EQ(rows[1].ratio, rows[1].seconds / rows[0].seconds);
}

}  // namespace
}  // namespace divmax
