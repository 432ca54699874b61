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

#include "affprov/io.h"

#include <filesystem>
#include <random>
#include <sstream>

#include "affprov/algorithms.h"
#include "gtest/gtest.h"
#include "testing.h"

namespace affprov {
namespace {

TEST(InstanceJsonTest, RoundTripsRandomInstances) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = testing::random_tiny_instance(rng, {});
    inst.name = "r" + std::to_string(trial);
    if (trial % 2) inst.seed = trial * 977u;
    if (trial % 3) inst.density = 0.125 * trial;
    const Instance back = instance_from_json(instance_to_json(inst));
    EXPECT_EQ(back, inst);
    EXPECT_EQ(instance_to_json(back), instance_to_json(inst));
  }
}

TEST(InstanceJsonTest, RoundTripsMultiEpoch) {
  testing::TinyShape shape;
  shape.epochs = 3;
  std::mt19937_64 rng(6);
  const Instance inst = testing::random_tiny_instance(rng, shape);
  EXPECT_EQ(instance_from_json(instance_to_json(inst)), inst);
}

TEST(InstanceJsonTest, ReadsDocumentedSchema) {
  const Instance inst = instance_from_json(
      R"({"name":"x","d":2,"T":1,"capacity":[64,128],"seed":4,
          "apps":[{"id":0,"replicas":3,"demand":[16,32]}],
          "affinities":[{"from":0,"to":0,"limit":2}]})");
  EXPECT_EQ(inst.name, "x");
  EXPECT_EQ(inst.resource_types, 2);
  EXPECT_EQ(inst.seed, 4u);
  ASSERT_EQ(inst.apps.size(), 1u);
  EXPECT_EQ(inst.apps[0].replicas, 3);
  ASSERT_EQ(inst.arcs.size(), 1u);
  EXPECT_EQ(inst.arcs[0].limit, 2);
}

TEST(InstanceJsonTest, RejectsMalformedInput) {
  EXPECT_THROW(instance_from_json("{"), InputError);
  EXPECT_THROW(instance_from_json("[]"), InputError);
  EXPECT_THROW(instance_from_json(R"({"name":"x","d":1,"T":1,"capacity":[4]})"), InputError);
  EXPECT_THROW(instance_from_json(
                   R"({"name":"x","d":"two","T":1,"capacity":[4],"apps":[],"affinities":[]})"),
               InputError);
}

TEST(SolutionJsonTest, RoundTripsSolverOutput) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = testing::random_tiny_instance(rng, {});
    Solution sol = solve(inst, AlgoConfig::parse(trial % 2 ? "ffd:avg" : "match:dotproduct:decr2"));
    sol.wall_time_ms = 0.25 * trial;
    const Solution back = solution_from_json(solution_to_json(sol), inst.num_apps());
    EXPECT_EQ(back, sol);
  }
}

TEST(SolutionJsonTest, RejectsUnknownApp) {
  EXPECT_THROW(solution_from_json(R"({"algorithm":"ff","nodes_used":1,"failed":false,
      "wall_time_ms":0,"assignment":[{"app":3,"node":0,"count":1}]})",
                                  2),
               InputError);
}

TEST(FileTest, WritesAndReadsBack) {
  const auto dir = std::filesystem::temp_directory_path() / "affprov_io_test";
  std::filesystem::create_directories(dir);
  const Instance inst = testing::ff_example();
  write_instance(dir / "inst.json", inst);
  EXPECT_EQ(read_instance(dir / "inst.json"), inst);
  const Solution sol = solve(inst, AlgoConfig::parse("ff"));
  write_solution(dir / "sol.json", sol);
  EXPECT_EQ(read_solution(dir / "sol.json", inst.num_apps()), sol);
  EXPECT_THROW(read_instance(dir / "missing.json"), InputError);
  std::filesystem::remove_all(dir);
}

TEST(CsvImportTest, BuildsInstance) {
  std::istringstream apps("app_id,replicas,dim_0,dim_1\n0,2,6,3\n1,1,5,5\n2,1,3,3\n");
  std::istringstream arcs("from,to,limit\n0,2,0\n");
  CsvImportOptions options;
  options.name = "csv";
  options.resource_types = 2;
  options.type_capacity = {10, 10};
  Instance inst = import_csv(apps, arcs, options);
  Instance expected = testing::ff_example();
  expected.name = "csv";
  EXPECT_EQ(inst, expected);
}

TEST(CsvImportTest, ReplicatesCapacityAcrossEpochs) {
  std::istringstream apps("app_id,replicas,dim_0,dim_1,dim_2,dim_3\n0,1,1,2,3,4\n");
  std::istringstream arcs("from,to,limit\n");
  CsvImportOptions options;
  options.resource_types = 2;
  options.epochs = 2;
  options.type_capacity = {8, 16};
  const Instance inst = import_csv(apps, arcs, options);
  EXPECT_EQ(inst.capacity, (ResourceVector{8, 16, 8, 16}));
}

TEST(CsvImportTest, RejectsUnknownOrMissingColumns) {
  CsvImportOptions options;
  options.resource_types = 2;
  options.type_capacity = {10, 10};
  {
    std::istringstream apps("app_id,replicas,dim_0,dim_1,extra\n0,1,1,1,1\n");
    std::istringstream arcs("from,to,limit\n");
    EXPECT_THROW(import_csv(apps, arcs, options), InputError);
  }
  {
    std::istringstream apps("app_id,replicas,dim_0\n0,1,1\n");
    std::istringstream arcs("from,to,limit\n");
    EXPECT_THROW(import_csv(apps, arcs, options), InputError);
  }
  {
    std::istringstream apps("app_id,replicas,dim_0,dim_1\n0,1,1,1\n");
    std::istringstream arcs("to,from,limit\n");
    EXPECT_THROW(import_csv(apps, arcs, options), InputError);
  }
  {
    std::istringstream apps("app_id,replicas,dim_0,dim_1\n0,1,x,1\n");
    std::istringstream arcs("from,to,limit\n");
    EXPECT_THROW(import_csv(apps, arcs, options), InputError);
  }
}

}  // namespace
}  // namespace affprov
