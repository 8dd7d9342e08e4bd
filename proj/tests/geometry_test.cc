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

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "test_oracles.h"

namespace divmax {
namespace {

using testing::LineInstance;
using testing::RawDistance;

Instance PlaneInstance(const std::vector<std::pair<double, double>>& pts) {
  Instance inst;
  inst.n = static_cast<int>(pts.size());
  inst.dim = 2;
  for (auto [x, y] : pts) {
    inst.vectors.push_back(x);
    inst.vectors.push_back(y);
  }
  std::vector<ElementId> all(inst.n);
  for (int v = 0; v < inst.n; ++v) all[v] = v;
  inst.clusters = {{all, 2}};
  return inst;
}

TEST(DistanceOracleTest, Euclidean) {
  const DistanceOracle d(PlaneInstance({{0, 0}, {3, 4}}));
  EXPECT_EQ(d.Distance(0, 1), 5.0);
  EXPECT_EQ(d.Distance(1, 0), 5.0);
  EXPECT_EQ(d.Distance(1, 1), 0.0);
}

TEST(DistanceOracleTest, CosineIsChordal) {
  Instance inst = PlaneInstance({{1, 0}, {0, 1}, {-1, 0}});
  inst.metric = Metric::kCosine;
  const DistanceOracle d(inst);
  EXPECT_NEAR(d.Distance(0, 1), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(d.Distance(0, 2), 2.0, 1e-15);
}

TEST(DistanceOracleTest, CosineRejectsNonUnitVectors) {
  Instance inst = PlaneInstance({{1, 0}, {0, 2}});
  inst.metric = Metric::kCosine;
  EXPECT_THROW(DistanceOracle{inst}, std::invalid_argument);
}

TEST(DistanceOracleTest, Jaccard) {
  Instance inst;
  inst.n = 4;
  inst.feature_kind = FeatureKind::kSet;
  inst.metric = Metric::kJaccard;
  inst.sets = {{1, 2, 3}, {2, 3, 4}, {}, {}};
  inst.clusters = {{{0, 1, 2, 3}, 2}};
  const DistanceOracle d(inst);
  EXPECT_DOUBLE_EQ(d.Distance(0, 1), 0.5);
  EXPECT_EQ(d.Distance(2, 3), 0.0);
  EXPECT_EQ(d.Distance(0, 2), 1.0);
}

TEST(DistanceOracleTest, JaccardOverlappingPair) {
  Instance inst;
  inst.n = 2;
  inst.feature_kind = FeatureKind::kSet;
  inst.metric = Metric::kJaccard;
  inst.sets = {{1, 2}, {2, 3}};
  inst.clusters = {{{0, 1}, 2}};
  EXPECT_DOUBLE_EQ(DistanceOracle(inst).Distance(0, 1), 2.0 / 3.0);
}

TEST(DistanceOracleTest, LabelledTable) {
  Instance inst;
  inst.n = 4;
  inst.metric = Metric::kMatrix;
  inst.distances = DistanceTable{{0, 0, 1, 1}, 2, {0.5, 3, 3, 0.25}};
  inst.clusters = {{{0, 1, 2, 3}, 2}};
  const DistanceOracle d(inst);
  EXPECT_EQ(d.Distance(0, 1), 0.5);
  EXPECT_EQ(d.Distance(0, 3), 3.0);
  EXPECT_EQ(d.Distance(2, 3), 0.25);
  EXPECT_EQ(d.Distance(2, 2), 0.0);
}

TEST(DistanceOracleTest, MissingMatrixThrows) {
  Instance inst;
  inst.n = 2;
  inst.metric = Metric::kMatrix;
  inst.clusters = {{{0, 1}, 1}};
  EXPECT_THROW(DistanceOracle{inst}, std::invalid_argument);
}

// The cached and on-demand paths must agree exactly, and both must match the
// reference formula.
TEST(DistanceOracleTest, CacheAndLazyAgreeWithReference) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::RandomSmallInstance(rng, {});
    const DistanceOracle cached(inst);
    const DistanceOracle lazy(inst, 0);
    ASSERT_TRUE(cached.cached());
    ASSERT_FALSE(lazy.cached());
    for (int u = 0; u < inst.n; ++u) {
      for (int v = 0; v < inst.n; ++v) {
        ASSERT_EQ(cached.Distance(u, v), lazy.Distance(u, v));
        ASSERT_NEAR(cached.Distance(u, v), RawDistance(inst, u, v), 1e-12);
        ASSERT_EQ(cached.Distance(u, v), cached.Distance(v, u));
      }
    }
  }
}

TEST(DistanceOracleTest, SetDistanceSum) {
  const Instance inst = LineInstance({0, 1, 5}, {{0, 1, 2}}, {3});
  const DistanceOracle d(inst);
  const std::vector<ElementId> s = {0, 1, 2};
  EXPECT_EQ(d.SetDistanceSum(0, s), 6.0);
  EXPECT_EQ(d.SetDistanceSum(2, std::vector<ElementId>{0}), 5.0);
  EXPECT_EQ(d.SetDistanceSum(2, {}), 0.0);
}

TEST(DiameterTest, ExactPicksFurthestPair) {
  const Instance inst = LineInstance({0, 4, 1, -3}, {{0, 1, 2, 3}}, {2});
  const DistanceOracle d(inst);
  const std::vector<ElementId> s = {0, 1, 2, 3};
  const DiameterResult r = ExactDiameter(d, s);
  EXPECT_EQ(r.first, 1);
  EXPECT_EQ(r.second, 3);
  EXPECT_EQ(r.distance, 7.0);
}

TEST(DiameterTest, ExactTieGoesToSmallestPair) {
  const Instance inst = LineInstance({0, 1, 2, 3}, {{0, 1, 2, 3}}, {2});
  const DistanceOracle d(inst);
  // (0, 2) and (1, 3) both span 2; 3 is left out.
  const std::vector<ElementId> s = {2, 1, 0};
  const DiameterResult r = ExactDiameter(d, s);
  EXPECT_EQ(r.first, 0);
  EXPECT_EQ(r.second, 2);

  const Instance square = PlaneInstance({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const DistanceOracle ds(square);
  const std::vector<ElementId> all = {3, 2, 1, 0};
  const DiameterResult diag = ExactDiameter(ds, all);
  EXPECT_EQ(diag.first, 0);
  EXPECT_EQ(diag.second, 2);
}

TEST(DiameterTest, Errors) {
  const Instance inst = LineInstance({0, 1, 2}, {{0, 1, 2}}, {2});
  const DistanceOracle d(inst);
  EXPECT_THROW(ExactDiameter(d, std::vector<ElementId>{0}), std::invalid_argument);
  EXPECT_THROW(ApproxDiameter(d, std::vector<ElementId>{0, 1}, 2),
               std::invalid_argument);
  EXPECT_THROW(ApproxDiameter(d, std::vector<ElementId>{0}, 0),
               std::invalid_argument);
}

TEST(DiameterTest, ApproxIsFurthestFromAnchor) {
  const Instance inst = LineInstance({0, 4, 1, -3}, {{0, 1, 2, 3}}, {2});
  const DistanceOracle d(inst);
  const std::vector<ElementId> s = {0, 1, 2, 3};
  const DiameterResult r = ApproxDiameter(d, s, 2);
  EXPECT_EQ(r.first, 2);
  EXPECT_EQ(r.second, 3);
  EXPECT_EQ(r.distance, 4.0);
}

TEST(DiameterTest, ApproxOnLine) {
  const Instance inst = LineInstance({0, 1, 10}, {{0, 1, 2}}, {2});
  const DistanceOracle d(inst);
  const std::vector<ElementId> s = {0, 1, 2};
  const DiameterResult r = ApproxDiameter(d, s, 1);
  EXPECT_EQ(r.second, 2);
  EXPECT_EQ(r.distance, 9.0);
  EXPECT_EQ(ExactDiameter(d, s).distance, 10.0);
  const std::vector<ElementId> two = {0, 2};
  EXPECT_EQ(ApproxDiameter(d, two, 2).distance, 10.0);
}

// Half-diameter guarantee against a brute-force diameter, every anchor.
TEST(DiameterTest, ApproxIsAtLeastHalfTheDiameter) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::RandomSmallInstance(rng, {});
    const DistanceOracle d(inst);
    std::vector<ElementId> s(inst.n);
    for (int v = 0; v < inst.n; ++v) s[v] = v;
    double diameter = 0.0;
    for (int u = 0; u < inst.n; ++u) {
      for (int v = u + 1; v < inst.n; ++v) {
        diameter = std::max(diameter, RawDistance(inst, u, v));
      }
    }
    ASSERT_NEAR(ExactDiameter(d, s).distance, diameter, 1e-12);
    for (ElementId a : s) {
      ASSERT_GE(ApproxDiameter(d, s, a).distance, diameter / 2 - 1e-12);
    }
  }
}

TEST(CheckDistanceInputsTest, AcceptsMetricTable) {
  std::mt19937_64 rng(2);
  Instance inst;
  inst.n = 9;
  inst.metric = Metric::kMatrix;
  inst.distances = testing::RandomMetricTable(9, rng);
  inst.clusters = {{{0, 1, 2}, 2}};
  EXPECT_TRUE(CheckDistanceInputs(inst).empty());
}

TEST(CheckDistanceInputsTest, FlagsBrokenTables) {
  Instance inst;
  inst.n = 3;
  inst.metric = Metric::kMatrix;
  inst.clusters = {{{0, 1, 2}, 2}};

  inst.distances = DistanceTable{{}, 3, {0, 1, 1, 2, 0, 1, 1, 1, 0}};
  EXPECT_FALSE(CheckDistanceInputs(inst).empty());  // asymmetric

  inst.distances = DistanceTable{{}, 3, {0, -1, 1, -1, 0, 1, 1, 1, 0}};
  EXPECT_FALSE(CheckDistanceInputs(inst).empty());

  inst.distances = DistanceTable{{}, 3, {1, 1, 1, 1, 0, 1, 1, 1, 0}};
  EXPECT_FALSE(CheckDistanceInputs(inst).empty());

  inst.distances = DistanceTable{{}, 3, {0, 1, 5, 1, 0, 1, 5, 1, 0}};
  EXPECT_FALSE(CheckDistanceInputs(inst).empty());  // 5 > 1 + 1
}

TEST(CheckDistanceInputsTest, FlagsNonUnitCosine) {
  Instance inst = PlaneInstance({{1, 0}, {0.5, 0.5}});
  inst.metric = Metric::kCosine;
  EXPECT_FALSE(CheckDistanceInputs(inst).empty());
}

TEST(CheckBlockTrianglesTest, Blocks) {
  // Two labels, each holding at least two elements.
  DistanceTable ok{{0, 0, 1, 1}, 2, {1, 1, 1, 1}};
  EXPECT_TRUE(CheckBlockTriangles(ok).empty());
  // d(a, a') = 3 > d(a, b) + d(b, a') = 2.
  DistanceTable bad{{0, 0, 1, 1}, 2, {3, 1, 1, 1}};
  EXPECT_FALSE(CheckBlockTriangles(bad).empty());
  // A singleton label cannot realize its own diagonal block.
  DistanceTable singleton{{0, 1, 1}, 2, {3, 1, 1, 1}};
  EXPECT_TRUE(CheckBlockTriangles(singleton).empty());
}

}  // namespace
}  // namespace divmax
