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

#include "affprov/bounds.h"

#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "affprov/algorithms.h"
#include "affprov/placement.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing.h"

namespace affprov {
namespace {

using ::affprov::testing::make_instance;
using ::testing::Contains;
using ::testing::StartsWith;

TEST(LowerBoundTest, BindingDimension) {
  // W = (130, 250) against C = (64, 128).
  const Instance inst = make_instance({64, 128}, {{2, {40, 50}}, {1, {50, 150}}});
  const Bound b = lower_bound(inst);
  EXPECT_EQ(b.value, 3);
  EXPECT_EQ(b.binding_dimension, 0);
}

TEST(LowerBoundTest, SingleReplica) {
  EXPECT_EQ(lower_bound(make_instance({64, 128}, {{1, {1, 1}}})).value, 1);
}

TEST(LowerBoundTest, NotTightUnderConflicts) {
  const Instance inst = testing::ff_example();
  EXPECT_EQ(lower_bound(inst).value, 2);
  EXPECT_EQ(brute_force_opt(inst).nodes_used, 3);
  EXPECT_EQ(testing::exhaustive_opt(inst), 3);
}

TEST(LowerBoundTest, EpochMajorDimensions) {
  // Two types, two epochs: epoch 1 carries the peak memory load.
  const Instance inst =
      make_instance({10, 10, 10, 10}, {{3, {2, 2, 2, 9}}, {1, {1, 1, 1, 5}}}, {}, 2);
  const Bound b = lower_bound(inst);
  EXPECT_EQ(b.value, 4);  // ceil(32 / 10)
  EXPECT_EQ(b.binding_dimension, 3);
}

TEST(BruteForceTest, Examples) {
  EXPECT_EQ(brute_force_opt(make_instance({10, 10}, {{5, {5, 3}}})).nodes_used, 3);
  EXPECT_EQ(brute_force_opt(make_instance({10, 10}, {{1, {1, 1}}, {1, {1, 1}}},
                                          {{0, 1, 0}, {1, 0, 0}}))
                .nodes_used,
            2);
}

TEST(BruteForceTest, RejectsLargeInstances) {
  const Instance inst = make_instance({10, 10}, {{11, {1, 1}}});
  EXPECT_THROW(brute_force_opt(inst), LimitExceeded);
  EXPECT_EQ(brute_force_opt(inst, 11).nodes_used, 2);
}

TEST(BruteForceTest, AgreesWithIndependentSearch) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    testing::TinyShape shape;
    shape.max_total_replicas = 10;
    shape.epochs = trial % 4 == 0 ? 2 : 1;
    const Instance inst = testing::random_tiny_instance(rng, shape);
    const Solution opt = brute_force_opt(inst);
    EXPECT_TRUE(verify_solution(inst, opt).empty());
    EXPECT_EQ(opt.nodes_used, testing::exhaustive_opt(inst)) << trial;
    EXPECT_LE(lower_bound(inst).value, opt.nodes_used);
  }
}

int count_lines(const std::string& text, const std::regex& pattern) {
  std::istringstream in(text);
  int count = 0;
  for (std::string line; std::getline(in, line);) {
    if (std::regex_search(line, pattern)) ++count;
  }
  return count;
}

Instance two_app_instance() {
  return make_instance({10, 10}, {{1, {3, 4}}, {1, {5, 0}}}, {{0, 1, 0}});
}

TEST(ExportTest, VariableCounts) {
  const std::string model = export_ilp(two_app_instance(), 2);
  EXPECT_EQ(count_lines(model, std::regex("^ x_\\d+_\\d+_\\d+$")), 4);
  EXPECT_EQ(count_lines(model, std::regex("^ y_\\d+$")), 2);
  EXPECT_EQ(count_lines(model, std::regex("^ z_\\d+_\\d+$")), 4);
}

TEST(ExportTest, RowCounts) {
  const std::string model = export_ilp(two_app_instance(), 2);
  EXPECT_EQ(count_lines(model, std::regex("^ assign_")), 2);
  EXPECT_EQ(count_lines(model, std::regex("^ cap_")), 4);
  EXPECT_EQ(count_lines(model, std::regex("^ link_ub_")), 4);
  EXPECT_EQ(count_lines(model, std::regex("^ link_lb_")), 4);
  EXPECT_EQ(count_lines(model, std::regex("^ aff_")), 2);
  EXPECT_EQ(count_lines(model, std::regex("^ \\w+: .*(<=|=) -?\\d+$")), 16);
}

TEST(ExportTest, SectionsAndDeterminism) {
  const std::string model = export_ilp(testing::ff_example(), 3);
  EXPECT_THAT(model, StartsWith("\\ affprov provisioning model"));
  for (const char* section : {"\nMinimize\n", "\nSubject To\n", "\nBinary\n", "\nEnd\n"}) {
    EXPECT_NE(model.find(section), std::string::npos) << section;
  }
  EXPECT_EQ(model, export_ilp(testing::ff_example(), 3));
}

TEST(ExportTest, SelfArcRow) {
  // nu = 2 from the self-arc, so the row reads x_0_0_0 + x_0_1_0 + x_0_2_0 <= 2
  // once z_0_0 = 1; with nu_j - a_ij = 0 the z term vanishes.
  const std::string model = export_ilp(make_instance({10}, {{3, {1}}}, {{0, 0, 2}}), 1);
  EXPECT_NE(model.find(" aff_0_0_0: x_0_0_0 + x_0_1_0 + x_0_2_0 <= 2\n"), std::string::npos)
      << model;
}

TEST(ModelCheckTest, OptimumSatisfiesEveryRow) {
  const Instance inst = testing::ff_example();
  const Solution opt = brute_force_opt(inst);
  const ModelCheck check = check_assignment_against_model(export_ilp(inst, 3), opt);
  EXPECT_TRUE(check.ok());
}

TEST(ModelCheckTest, DroppedReplicaViolatesAssignRow) {
  const Instance inst = testing::ff_example();
  Solution sol = brute_force_opt(inst);
  sol.assignment[1].clear();
  const ModelCheck check = check_assignment_against_model(export_ilp(inst, 3), sol);
  EXPECT_FALSE(check.structural_error);
  EXPECT_THAT(check.violated_rows, Contains("assign_1_0"));
}

TEST(ModelCheckTest, AffinityViolationHitsAffRow) {
  const Instance inst = testing::ff_example();
  Solution sol;
  sol.nodes_used = 3;
  sol.assignment = {{{0, 1}, {1, 1}}, {{2, 1}}, {{0, 1}}};
  const ModelCheck check = check_assignment_against_model(export_ilp(inst, 3), sol);
  EXPECT_THAT(check.violated_rows, Contains("aff_0_2_0"));
}

TEST(ModelCheckTest, TooManyNodesIsStructural) {
  const Instance inst = testing::ff_example();
  const Solution sol = solve(inst, AlgoConfig::parse("ff"));
  EXPECT_TRUE(check_assignment_against_model(export_ilp(inst, 2), sol).structural_error);
}

// Random assignment of about the right number of replicas to n nodes.
Solution random_solution(const Instance& inst, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> node(0, n - 1);
  std::uniform_int_distribution<int> tweak(0, 9);
  Solution sol;
  sol.nodes_used = n;
  sol.assignment.resize(inst.num_apps());
  for (std::size_t i = 0; i < inst.num_apps(); ++i) {
    int replicas = inst.apps[i].replicas;
    const int t = tweak(rng);
    if (t == 0) replicas = std::max(0, replicas - 1);
    if (t == 1) ++replicas;
    std::vector<std::int32_t> per(n, 0);
    for (int r = 0; r < replicas; ++r) ++per[node(rng)];
    for (int k = 0; k < n; ++k) {
      if (per[k] > 0) sol.assignment[i].push_back({k, per[k]});
    }
  }
  return sol;
}

TEST(ModelCheckTest, AgreesWithVerifier) {
  std::mt19937_64 rng(59);
  int accepted = 0;
  int rejected = 0;
  for (int trial = 0; trial < 600; ++trial) {
    testing::TinyShape shape;
    shape.epochs = trial % 3 == 0 ? 2 : 1;
    const Instance inst = testing::random_tiny_instance(rng, shape);
    std::uniform_int_distribution<int> nodes(1, 4);
    const int n = nodes(rng);
    const std::string model = export_ilp(inst, n);
    const Solution sol =
        trial % 2 ? random_solution(inst, n, rng) : solve(inst, AlgoConfig::parse("ffd:avg"));
    if (sol.nodes_used > n) continue;
    const bool verifier_ok = verify_solution(inst, sol).empty();
    const bool model_ok = check_assignment_against_model(model, sol).ok();
    ASSERT_EQ(verifier_ok, model_ok) << "trial " << trial << '\n' << model;
    (verifier_ok ? accepted : rejected)++;
  }
  EXPECT_GT(accepted, 50);
  EXPECT_GT(rejected, 50);
}

TEST(ModelCheckTest, StreamedBatchMatchesSingleChecks) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::random_tiny_instance(rng, {});
    const int n = 4;
    std::vector<Solution> batch;
    for (int k = 0; k < 70; ++k) batch.push_back(random_solution(inst, n, rng));
    batch.push_back(solve(inst, AlgoConfig::parse("ff")));
    const std::string model = export_ilp(inst, n);
    const std::vector<ModelCheck> streamed = check_against_export(inst, n, batch);
    ASSERT_EQ(streamed.size(), batch.size());
    for (std::size_t k = 0; k < batch.size(); ++k) {
      const ModelCheck single = check_assignment_against_model(model, batch[k]);
      EXPECT_EQ(streamed[k].ok(), single.ok());
      EXPECT_EQ(streamed[k].violated_rows, single.violated_rows);
      if (batch[k].nodes_used <= n) {
        EXPECT_EQ(single.ok(), verify_solution(inst, batch[k]).empty());
      }
    }
  }
}

TEST(ModelCheckTest, MalformedModelIsStructural) {
  const Solution sol = solve(testing::ff_example(), AlgoConfig::parse("ff"));
  EXPECT_TRUE(check_assignment_against_model("Minimize\n obj: y_0\nSubject To\n", sol)
                  .structural_error);
  EXPECT_TRUE(check_assignment_against_model("garbage", sol).structural_error);
  std::string model = export_ilp(testing::ff_example(), 3);
  model.replace(model.rfind(" y_2\n"), 5, " y_7\n");
  EXPECT_TRUE(check_assignment_against_model(model, sol).structural_error);
}

}  // namespace
}  // namespace affprov
