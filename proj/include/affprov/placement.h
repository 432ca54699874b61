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

// Incremental packing state with exact integer feasibility checks, and an
// independent from-scratch solution verifier.

#ifndef AFFPROV_PLACEMENT_H_
#define AFFPROV_PLACEMENT_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "affprov/model.h"

namespace affprov {

class NodeState {
 public:
  explicit NodeState(const ResourceVector& capacity) : residual_(capacity) {}

  const ResourceVector& residual() const { return residual_; }
  std::int32_t count(AppId app) const;
  // (app, count) pairs with count >= 1, sorted by app id.
  std::span<const std::pair<AppId, std::int32_t>> hosted() const { return hosted_; }
  bool empty() const { return hosted_.empty(); }

 private:
  friend class PlacementState;
  void add(AppId app, std::int32_t k, std::span<const Amount> demand);

  ResourceVector residual_;
  std::vector<std::pair<AppId, std::int32_t>> hosted_;
};

// Mutable packing state over a growing list of identical nodes. The instance
// and graph must outlive the state.
class PlacementState {
 public:
  PlacementState(const Instance& instance, const AffinityGraph& graph);

  NodeId activate_node();
  std::size_t node_count() const { return nodes_.size(); }
  const NodeState& node(NodeId n) const { return nodes_[n]; }
  std::int32_t remaining(AppId app) const { return remaining_[app]; }
  std::int64_t total_remaining() const { return total_remaining_; }

  // Sum of residuals over all activated nodes, in raw units.
  const ResourceVector& pool_residual() const { return pool_residual_; }

  bool can_place(AppId app, NodeId n) const { return max_placeable(app, n, 1) >= 1; }

  // Largest k <= cap such that k more replicas of app fit node n.
  std::int32_t max_placeable(AppId app, NodeId n, std::int32_t cap) const;
  std::int32_t max_placeable(AppId app, NodeId n) const {
    return max_placeable(app, n, remaining_[app]);
  }

  // Aborts when k exceeds max_placeable: callers own that precondition.
  void place(AppId app, NodeId n, std::int32_t k);

  // Emits the assignment with empty nodes dropped and the rest renumbered in
  // activation order.
  Solution to_solution(std::string algorithm, bool failed) const;

  const Instance& instance() const { return *instance_; }
  const AffinityGraph& graph() const { return *graph_; }

 private:
  const Instance* instance_;
  const AffinityGraph* graph_;
  std::vector<NodeState> nodes_;
  std::vector<std::int32_t> remaining_;
  std::int64_t total_remaining_ = 0;
  ResourceVector pool_residual_;
};

enum class ViolationKind {
  kStructure,    // malformed solution (bad node index, non-positive count)
  kUnplaced,     // replica count of an application differs from |R_i|
  kCapacity,     // node capacity exceeded in some dimension
  kAffinity,     // affinity limit exceeded on some node
};

struct Violation {
  ViolationKind kind = ViolationKind::kStructure;
  AppId app = -1;
  AppId other = -1;  // restricted application for affinity violations
  NodeId node = -1;
  std::int32_t dim = -1;
  std::string message;
};

// Rebuilds node contents from the assignment and checks every constraint.
// Failed solutions are checked only for capacity and affinity.
std::vector<Violation> verify_solution(const Instance& instance, const Solution& solution);

}  // namespace affprov

#endif  // AFFPROV_PLACEMENT_H_
