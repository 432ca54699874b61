// Copyright 2026 The affprov Authors.
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

#include "affprov/placement.h"

#include <random>

#include "gtest/gtest.h"
#include "testing.h"

namespace affprov {
namespace {

using ::affprov::testing::make_instance;

struct Fixture {
  explicit Fixture(Instance in) : instance(std::move(in)), graph(instance.num_apps(), instance.arcs),
                                  state(instance, graph) {}
  Instance instance;
  AffinityGraph graph;
  PlacementState state;
};

TEST(CanPlaceTest, EmptyNodeAcceptsFittingApp) {
  Fixture f(make_instance({10, 10}, {{1, {3, 3}}}));
  const NodeId n = f.state.activate_node();
  EXPECT_TRUE(f.state.can_place(0, n));
}

TEST(CanPlaceTest, RejectsWhenResidualTooSmall) {
  // Filler (6,0) leaves residual (4,10); app (6,7) does not fit.
  Fixture f(make_instance({10, 10}, {{1, {6, 0}}, {1, {6, 7}}}));
  const NodeId n = f.state.activate_node();
  f.state.place(0, n, 1);
  EXPECT_EQ(f.state.node(n).residual(), (ResourceVector{4, 10}));
  EXPECT_FALSE(f.state.can_place(1, n));
}

TEST(CanPlaceTest, RejectsConflict) {
  Fixture f(make_instance({10, 10}, {{1, {1, 1}}, {1, {1, 1}}}, {{0, 1, 0}}));
  const NodeId n = f.state.activate_node();
  f.state.place(0, n, 1);
  EXPECT_FALSE(f.state.can_place(1, n));
}

TEST(CanPlaceTest, RejectsBeyondLimit) {
  Fixture f(make_instance({10, 10}, {{1, {1, 1}}, {3, {1, 1}}}, {{0, 1, 2}}));
  const NodeId n = f.state.activate_node();
  f.state.place(0, n, 1);
  f.state.place(1, n, 2);
  EXPECT_FALSE(f.state.can_place(1, n));
}

TEST(CanPlaceTest, OutArcBlocksArrivalOfRestrictingApp) {
  // Node holds 3 of app 1; app 0 restricts app 1 to 2, so app 0 cannot join.
  Fixture f(make_instance({10, 10}, {{1, {1, 1}}, {3, {1, 1}}}, {{0, 1, 2}}));
  const NodeId n = f.state.activate_node();
  f.state.place(1, n, 3);
  EXPECT_FALSE(f.state.can_place(0, n));
  EXPECT_EQ(f.state.max_placeable(0, n), 0);
  EXPECT_FALSE(testing::node_feasible(f.instance, {1, 3}));
}

TEST(CanPlaceTest, NothingLeftToPlace) {
  Fixture f(make_instance({10, 10}, {{1, {1, 1}}}));
  const NodeId n = f.state.activate_node();
  f.state.place(0, n, 1);
  EXPECT_FALSE(f.state.can_place(0, n));
}

TEST(MaxPlaceableTest, CapacityAndRemaining) {
  Fixture f(make_instance({10, 10}, {{4, {3, 2}}}));
  const NodeId n = f.state.activate_node();
  EXPECT_EQ(f.state.max_placeable(0, n), 3);
}

TEST(MaxPlaceableTest, InArcLimit) {
  Fixture f(make_instance({10, 10}, {{4, {3, 2}}, {1, {0, 0}}}, {{1, 0, 2}}));
  const NodeId n = f.state.activate_node();
  f.state.place(1, n, 1);
  EXPECT_EQ(f.state.max_placeable(0, n), 2);
}

TEST(MaxPlaceableTest, SelfArcLimit) {
  Fixture f(make_instance({64, 128}, {{5, {10, 30}}}, {{0, 0, 2}}));
  const NodeId n = f.state.activate_node();
  EXPECT_EQ(f.state.max_placeable(0, n), 2);
  f.state.place(0, n, 1);
  EXPECT_EQ(f.state.max_placeable(0, n), 1);
}

TEST(MaxPlaceableTest, MatchesBruteForceOnRandomStates) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::random_tiny_instance(rng, {});
    Fixture f(inst);
    const NodeId n = f.state.activate_node();
    std::vector<std::int64_t> counts(inst.num_apps(), 0);
    std::uniform_int_distribution<std::size_t> pick(0, inst.num_apps() - 1);
    for (int step = 0; step < 6; ++step) {
      const AppId app = static_cast<AppId>(pick(rng));
      // Brute force: the largest k whose node content stays feasible.
      std::int32_t expected = 0;
      for (std::int32_t k = 1; k <= f.state.remaining(app); ++k) {
        auto trial_counts = counts;
        trial_counts[app] += k;
        if (testing::node_feasible(inst, trial_counts)) expected = k;
      }
      ASSERT_EQ(f.state.max_placeable(app, n), expected) << "trial " << trial;
      EXPECT_EQ(f.state.can_place(app, n), expected >= 1);
      if (expected > 0) {
        std::uniform_int_distribution<std::int32_t> amount(1, expected);
        const std::int32_t k = amount(rng);
        f.state.place(app, n, k);
        counts[app] += k;
      }
    }
  }
}

TEST(PlacementStateTest, IncrementalMatchesRecomputed) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::random_tiny_instance(rng, {});
    Fixture f(inst);
    std::vector<std::vector<std::int64_t>> counts;
    std::uniform_int_distribution<std::size_t> pick(0, inst.num_apps() - 1);
    for (int step = 0; step < 20 && f.state.total_remaining() > 0; ++step) {
      const AppId app = static_cast<AppId>(pick(rng));
      if (f.state.remaining(app) == 0) continue;
      NodeId target = -1;
      for (std::size_t n = 0; n < f.state.node_count(); ++n) {
        if (f.state.can_place(app, static_cast<NodeId>(n))) target = static_cast<NodeId>(n);
      }
      if (target < 0) {
        target = f.state.activate_node();
        counts.emplace_back(inst.num_apps(), 0);
      }
      f.state.place(app, target, 1);
      ++counts[target][app];
    }
    ResourceVector pool(inst.dims(), 0);
    for (std::size_t n = 0; n < counts.size(); ++n) {
      const NodeState& node = f.state.node(static_cast<NodeId>(n));
      for (std::size_t h = 0; h < inst.dims(); ++h) {
        Amount residual = inst.capacity[h];
        for (std::size_t i = 0; i < inst.num_apps(); ++i) {
          residual -= counts[n][i] * inst.apps[i].demand[h];
        }
        EXPECT_EQ(node.residual()[h], residual);
        pool[h] += residual;
      }
      for (std::size_t i = 0; i < inst.num_apps(); ++i) {
        EXPECT_EQ(node.count(static_cast<AppId>(i)), counts[n][i]);
      }
      EXPECT_TRUE(testing::node_feasible(inst, counts[n]));
    }
    EXPECT_EQ(f.state.pool_residual(), pool);
    for (std::size_t i = 0; i < inst.num_apps(); ++i) {
      std::int64_t placed = 0;
      for (const auto& c : counts) placed += c[i];
      EXPECT_EQ(placed + f.state.remaining(static_cast<AppId>(i)), inst.apps[i].replicas);
    }
  }
}

TEST(PlacementStateDeathTest, PlaceBeyondLimitAborts) {
  Fixture f(make_instance({10, 10}, {{4, {6, 1}}}));
  const NodeId n = f.state.activate_node();
  EXPECT_DEATH(f.state.place(0, n, 2), "infeasible place");
}

TEST(ToSolutionTest, DropsEmptyNodes) {
  Fixture f(make_instance({10, 10}, {{2, {6, 1}}}));
  f.state.activate_node();
  const NodeId b = f.state.activate_node();
  const NodeId c = f.state.activate_node();
  f.state.place(0, c, 1);
  f.state.place(0, b, 1);
  const Solution sol = f.state.to_solution("x", false);
  EXPECT_EQ(sol.nodes_used, 2);
  EXPECT_EQ(sol.assignment[0], (std::vector<NodeCount>{{0, 1}, {1, 1}}));
}

Solution ff_trace_solution() {
  Solution sol;
  sol.nodes_used = 3;
  sol.assignment = {{{0, 1}, {1, 1}}, {{2, 1}}, {{2, 1}}};
  return sol;
}

TEST(VerifySolutionTest, AcceptsHandTrace) {
  EXPECT_TRUE(verify_solution(testing::ff_example(), ff_trace_solution()).empty());
}

TEST(VerifySolutionTest, DroppedReplica) {
  Solution sol = ff_trace_solution();
  sol.assignment[0] = {{0, 1}};
  const auto v = verify_solution(testing::ff_example(), sol);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::kUnplaced);
  EXPECT_EQ(v[0].app, 0);
  EXPECT_NE(v[0].message.find("replica assignment violated for app 0"), std::string::npos);
}

TEST(VerifySolutionTest, DroppedReplicaAllowedWhenFailed) {
  Solution sol = ff_trace_solution();
  sol.assignment[0] = {{0, 1}};
  sol.failed = true;
  EXPECT_TRUE(verify_solution(testing::ff_example(), sol).empty());
}

TEST(VerifySolutionTest, CapacityOnNodeZeroDimOne) {
  const Instance inst = make_instance({10, 10}, {{1, {2, 6}}, {1, {2, 6}}});
  Solution sol;
  sol.nodes_used = 1;
  sol.assignment = {{{0, 1}}, {{0, 1}}};
  const auto v = verify_solution(inst, sol);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::kCapacity);
  EXPECT_EQ(v[0].node, 0);
  EXPECT_EQ(v[0].dim, 1);
}

TEST(VerifySolutionTest, AffinityViolation) {
  Solution sol = ff_trace_solution();
  sol.assignment[2] = {{0, 1}};  // C joins A on node 0
  const auto v = verify_solution(testing::ff_example(), sol);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::kAffinity);
  EXPECT_EQ(v[0].app, 0);
  EXPECT_EQ(v[0].other, 2);
  EXPECT_EQ(v[0].node, 0);
}

TEST(VerifySolutionTest, StructuralProblems) {
  const Instance inst = testing::ff_example();
  Solution sol = ff_trace_solution();
  sol.assignment[1] = {{7, 1}};
  EXPECT_EQ(verify_solution(inst, sol).front().kind, ViolationKind::kStructure);
  sol = ff_trace_solution();
  sol.assignment.pop_back();
  EXPECT_EQ(verify_solution(inst, sol).front().kind, ViolationKind::kStructure);
  sol = ff_trace_solution();
  sol.assignment[1] = {{2, 0}};
  EXPECT_EQ(verify_solution(inst, sol).front().kind, ViolationKind::kStructure);
}

}  // namespace
}  // namespace affprov
