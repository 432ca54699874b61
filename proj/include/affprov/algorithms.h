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

// Placement heuristics.
//
//   Application-centric   applications in order; each goes to the first
//                         feasible node in the node ordering, as many
//                         replicas at a time as fit (FF/BF/WF and the
//                         decreasing variants).
//   Node-centric          one open node at a time, repeatedly filled with the
//                         best-scoring feasible application.
//   Replica spreading     fixed pool of n nodes; one replica at a time onto
//                         the feasible node with the largest residual measure.
//   Pair matching         fixed pool of n nodes; one replica at a time for
//                         the best-scoring feasible (application, node) pair.
//
// The fixed-pool solvers are wrapped by a binary or decrementing search on n
// that starts from the First Fit solution, so their result never exceeds FF.
//
// Every tie (measure, score, count) breaks toward the lower application id,
// then the lower node index.
//
// Worst-case cost per call, with R replicas, L applications and n nodes:
// application-centric O(R^2 L), node-centric O(R L^2), spreading O(R L n),
// matching O(R L^2 n). Matching is meant for desk-scale instances.
//
// Token grammar:
//   ff | ffd:<m> | bf:<m> | bfd:<m> | wf:<m> | wfd:<m> | ncd:<score>
//   spreadwf:<m>:<search> | spreadwfd:<m>:<search> | match:<score>:<search>
//   medea-tp | medea-nc | lrasched-fitness
// with <m> a measure token, <search> = binsearch | decr<percent>.

#ifndef AFFPROV_ALGORITHMS_H_
#define AFFPROV_ALGORITHMS_H_

#include <functional>
#include <string>
#include <string_view>

#include "affprov/measures.h"
#include "affprov/model.h"
#include "affprov/scores.h"

namespace affprov {

enum class Family {
  kAppCentric,
  kNodeCentric,
  kSpreadWF,
  kSpreadWFD,
  kMatching,
  kMedeaTP,
  kMedeaNC,
  kLraSchedFitness,
};

enum class NodeOrder { kActivation, kIncreasingMeasure, kDecreasingMeasure };
enum class AppOrder { kInput, kDecreasingMeasure };

struct SearchStrategy {
  enum class Kind { kNone, kBinary, kDecrement };
  Kind kind = Kind::kNone;
  double step_percent = 0.0;  // for kDecrement
};

struct AlgoConfig {
  Family family = Family::kAppCentric;
  NodeOrder node_order = NodeOrder::kActivation;
  AppOrder app_order = AppOrder::kInput;
  Measure measure;
  ScoreKind score = ScoreKind::kDotProduct;
  SearchStrategy search;
  // Recorded with results. Every solver here is deterministic, so the seed
  // does not change the outcome.
  std::uint64_t seed = 0;
  std::string token;

  static AlgoConfig parse(std::string_view token);
  bool multi_node() const {
    return family == Family::kSpreadWF || family == Family::kSpreadWFD ||
           family == Family::kMatching;
  }
};

// Shared read-only data for one instance: validated input, adjacency and
// normalized demands.
class Problem {
 public:
  explicit Problem(const Instance& instance);

  const Instance& instance() const { return *instance_; }
  const AffinityGraph& graph() const { return graph_; }
  const NormalizedView& view() const { return view_; }

 private:
  const Instance* instance_;
  AffinityGraph graph_;
  NormalizedView view_;
};

// Runs the configured algorithm end to end (including any node-count search)
// and records its wall time.
Solution solve(const Instance& instance, const AlgoConfig& config);
Solution solve(const Problem& problem, const AlgoConfig& config);

Solution solve_app_centric(const Problem& problem, const AlgoConfig& config);
Solution solve_node_centric(const Problem& problem, const AlgoConfig& config);
Solution solve_spread(const Problem& problem, std::int32_t n_target, const AlgoConfig& config);
Solution solve_matching(const Problem& problem, std::int32_t n_target, const AlgoConfig& config);
Solution solve_medea_tp(const Problem& problem);
Solution solve_medea_nc(const Problem& problem);
Solution solve_first_fit(const Problem& problem);

Solution search_binary(const Problem& problem, const AlgoConfig& config);
Solution search_decrement(const Problem& problem, const AlgoConfig& config);

// Search drivers, separated from the solvers so the bracket logic can be
// exercised with any trial predicate.
using NodeTrial = std::function<Solution(std::int32_t n_target)>;

// Binary search over [lower, upper.nodes_used - 1]; returns the best success
// or `upper` when nothing beats it.
Solution binary_search_nodes(std::int64_t lower, Solution upper, const NodeTrial& trial);

// Tries upper - step, upper - 2*step, ... while trials succeed. Stops below
// `lower`, where no trial can succeed.
Solution decrement_search_nodes(std::int64_t lower, std::int64_t step, Solution upper,
                                const NodeTrial& trial);

// max(1, round(percent / 100 * lower_bound)).
std::int64_t decrement_step(double percent, std::int64_t lower_bound);

}  // namespace affprov

#endif  // AFFPROV_ALGORITHMS_H_
