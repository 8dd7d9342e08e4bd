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

#include "divmax/model.h"

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_oracles.h"

namespace divmax {
namespace {

using testing::LineInstance;

bool HasMessage(const std::vector<Violation>& v, const std::string& needle) {
  for (const Violation& x : v) {
    if (x.message.find(needle) != std::string::npos) return true;
  }
  return false;
}

bool HasIssue(const FeasibilityReport& r, FeasibilityIssue issue) {
  for (const auto& v : r.violations) {
    if (v.issue == issue) return true;
  }
  return false;
}

TEST(ValidateInstanceTest, WellFormedIsClean) {
  const Instance inst = LineInstance({0, 1, 2, 3}, {{0, 1, 2, 3}}, {2});
  EXPECT_TRUE(ValidateInstance(inst).empty());
}

TEST(ValidateInstanceTest, MemberOutOfRange) {
  const Instance inst = LineInstance({0, 1, 2, 3}, {{0, 4}}, {2});
  const auto v = ValidateInstance(inst);
  ASSERT_TRUE(HasMessage(v, "member out of range"));
  EXPECT_EQ(v.front().location, "clusters[0].members");
}

TEST(ValidateInstanceTest, NegativeLambda) {
  Instance inst = LineInstance({0, 1}, {{0, 1}}, {2});
  inst.lambda = -1;
  EXPECT_TRUE(HasMessage(ValidateInstance(inst), "lambda negative"));
}

TEST(ValidateInstanceTest, StructuralErrors) {
  Instance inst = LineInstance({0, 1, 2}, {{}, {1, 1}}, {-1, 1});
  const auto v = ValidateInstance(inst);
  EXPECT_TRUE(HasMessage(v, "cluster is empty"));
  EXPECT_TRUE(HasMessage(v, "budget negative"));
  EXPECT_TRUE(HasMessage(v, "duplicate member"));

  Instance no_clusters = LineInstance({0}, {}, {});
  EXPECT_TRUE(HasMessage(ValidateInstance(no_clusters), "no clusters"));

  Instance jaccard_on_vectors = LineInstance({0, 1}, {{0, 1}}, {1});
  jaccard_on_vectors.metric = Metric::kJaccard;
  EXPECT_TRUE(HasMessage(ValidateInstance(jaccard_on_vectors),
                         "jaccard requires set features"));

  Instance ragged = LineInstance({0, 1, 2}, {{0, 1}}, {1});
  ragged.vectors.pop_back();
  EXPECT_FALSE(ValidateInstance(ragged).empty());

  Instance bad_cells = LineInstance({0, 1}, {{0, 1}}, {1});
  bad_cells.cells = {0};
  EXPECT_FALSE(ValidateInstance(bad_cells).empty());
}

TEST(FeasibilityTest, EmptySolutionIsFeasible) {
  const Instance inst = LineInstance({0, 1, 2}, {{0, 1}, {1, 2}}, {1, 1});
  EXPECT_TRUE(CheckFeasibility(inst, Solution::Empty(inst)).feasible());
}

TEST(FeasibilityTest, SharedElementBreaksDisjointness) {
  const Instance inst = LineInstance({0, 1, 2}, {{0, 1}, {1, 2}}, {2, 2});
  const auto r = CheckFeasibility(inst, {{{1}, {1}}});
  EXPECT_TRUE(HasIssue(r, FeasibilityIssue::kNotDisjoint));
}

TEST(FeasibilityTest, SharedCellAcrossClusters) {
  Instance inst = LineInstance({0, 1, 2}, {{0, 1}, {1, 2}}, {2, 2});
  inst.cells = {0, 1, 0};
  const auto r = CheckFeasibility(inst, {{{0}, {2}}});
  EXPECT_TRUE(HasIssue(r, FeasibilityIssue::kCellConflict));
}

TEST(FeasibilityTest, ReportsEveryKind) {
  const Instance inst = LineInstance({0, 1, 2}, {{0, 1}, {1, 2}}, {1, 2});
  const auto r = CheckFeasibility(inst, {{{0, 1}, {0, 2, 2, 7}}});
  EXPECT_TRUE(HasIssue(r, FeasibilityIssue::kOverBudget));
  EXPECT_TRUE(HasIssue(r, FeasibilityIssue::kNotInCluster));
  EXPECT_TRUE(HasIssue(r, FeasibilityIssue::kDuplicate));
  EXPECT_TRUE(HasIssue(r, FeasibilityIssue::kUnknownElement));
  EXPECT_FALSE(r.shape_mismatch());
}

TEST(FeasibilityTest, ShapeMismatchIsDistinct) {
  const Instance inst = LineInstance({0, 1, 2}, {{0, 1}, {1, 2}}, {1, 1});
  const auto r = CheckFeasibility(inst, {{{0}}});
  EXPECT_TRUE(r.shape_mismatch());
  EXPECT_EQ(r.violations.size(), 1u);
}

TEST(AvailableElementsTest, Examples) {
  Instance inst = LineInstance({0, 1, 2, 3}, {{0, 1, 2}, {1, 3}}, {3, 2});
  EXPECT_EQ(AvailableElements(inst, Solution::Empty(inst), 0),
            (std::vector<ElementId>{0, 1, 2}));
  EXPECT_EQ(AvailableElements(inst, {{{}, {1}}}, 0),
            (std::vector<ElementId>{0, 2}));
  inst.cells = {0, 0, 2, 3};
  EXPECT_EQ(AvailableElements(inst, {{{0}, {}}}, 0),
            (std::vector<ElementId>{2}));
  EXPECT_THROW(AvailableElements(inst, Solution::Empty(inst), 5),
               std::out_of_range);
}

TEST(IsSaturatedTest, Examples) {
  const Instance four = LineInstance({0, 1, 2, 3, 4, 5}, {{0, 1, 2, 3, 4, 5}}, {4});
  EXPECT_TRUE(IsSaturated(four, {{{0, 1, 2, 3}}}, 0, true));
  EXPECT_TRUE(IsSaturated(four, {{{0, 1, 2, 3}}}, 0, false));
  EXPECT_FALSE(IsSaturated(four, {{{0, 1}}}, 0, true));

  const Instance five = LineInstance({0, 1, 2, 3, 4, 5}, {{0, 1, 2, 3, 4, 5}}, {5});
  EXPECT_TRUE(IsSaturated(five, {{{0, 1, 2, 3}}}, 0, true));
  EXPECT_FALSE(IsSaturated(five, {{{0, 1, 2, 3}}}, 0, false));

  const Instance tight = LineInstance({0, 1, 2}, {{0, 1, 2}, {0, 1}}, {4, 2});
  EXPECT_TRUE(IsSaturated(tight, {{{2}, {0}}}, 0, true));
  EXPECT_FALSE(IsSaturated(tight, {{{2}, {0}}}, 0, false));

  const Instance zero = LineInstance({0, 1}, {{0, 1}}, {0});
  EXPECT_TRUE(IsSaturated(zero, Solution::Empty(zero), 0, false));
  EXPECT_THROW(IsSaturated(zero, Solution::Empty(zero), 1, true),
               std::out_of_range);
}

TEST(SelectionStateTest, ReplaceKeepsPosition) {
  const Instance inst = LineInstance({0, 1, 2, 3}, {{0, 1, 2, 3}}, {3});
  SelectionState s(inst);
  s.Add(0, 0);
  s.Add(0, 1);
  s.Add(0, 2);
  s.Replace(0, 1, 3);
  EXPECT_EQ(s.selected(0), (std::vector<ElementId>{0, 3, 2}));
  EXPECT_FALSE(s.IsSelected(1));
  EXPECT_TRUE(s.IsAvailable(1));
  EXPECT_THROW(s.Replace(0, 1, 3), std::invalid_argument);
  EXPECT_THROW(s.Add(0, 3), std::invalid_argument);
}

TEST(SelectionStateTest, AddRejectsForeignElement) {
  const Instance inst = LineInstance({0, 1, 2}, {{0, 1}, {2}}, {2, 1});
  SelectionState s(inst);
  EXPECT_THROW(s.Add(0, 2), std::invalid_argument);
}

// Random selections checked against the reference predicate, plus the two
// equivalent encodings of the default partition.
TEST(FeasibilityPropertyTest, MatchesReferenceAndSingletonEncoding) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    testing::SmallOptions opt;
    Instance inst = testing::RandomSmallInstance(rng, opt);
    Solution s = Solution::Empty(inst);
    for (int j = 0; j < inst.num_clusters(); ++j) {
      for (ElementId v : inst.clusters[j].members) {
        if (rng() % 3 == 0) s.selected[j].push_back(v);
      }
    }
    ASSERT_EQ(CheckFeasibility(inst, s).feasible(),
              testing::BruteFeasible(inst, s));
    if (inst.cells.empty()) {
      Instance explicit_cells = inst;
      explicit_cells.cells.resize(inst.n);
      for (int v = 0; v < inst.n; ++v) explicit_cells.cells[v] = v;
      ASSERT_EQ(CheckFeasibility(inst, s).feasible(),
                CheckFeasibility(explicit_cells, s).feasible());
    }
  }
}

TEST(AvailableElementsTest, ShrinksAlongFeasibleAdditions) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::RandomSmallInstance(rng, {});
    SelectionState state(inst);
    std::vector<std::size_t> last(inst.clusters.size());
    for (int j = 0; j < inst.num_clusters(); ++j) {
      last[j] = state.Available(j).size();
    }
    for (int step = 0; step < 6; ++step) {
      const int j = rng() % inst.num_clusters();
      const auto avail = state.Available(j);
      if (avail.empty()) continue;
      state.Add(j, avail[rng() % avail.size()]);
      for (int k = 0; k < inst.num_clusters(); ++k) {
        const std::size_t now = state.Available(k).size();
        ASSERT_LE(now, last[k]);
        last[k] = now;
      }
    }
  }
}

}  // namespace
}  // namespace divmax
