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

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>

namespace affprov {
namespace {

auto hosted_lower_bound(std::span<const std::pair<AppId, std::int32_t>> hosted, AppId app) {
  return std::lower_bound(hosted.begin(), hosted.end(), app,
                          [](const auto& entry, AppId id) { return entry.first < id; });
}

}  // namespace

std::int32_t NodeState::count(AppId app) const {
  std::span<const std::pair<AppId, std::int32_t>> hosted(hosted_);
  auto it = hosted_lower_bound(hosted, app);
  return (it != hosted.end() && it->first == app) ? it->second : 0;
}

void NodeState::add(AppId app, std::int32_t k, std::span<const Amount> demand) {
  for (std::size_t h = 0; h < residual_.size(); ++h) residual_[h] -= k * demand[h];
  auto it = std::lower_bound(hosted_.begin(), hosted_.end(), app,
                             [](const auto& entry, AppId id) { return entry.first < id; });
  if (it != hosted_.end() && it->first == app) {
    it->second += k;
  } else {
    hosted_.insert(it, {app, k});
  }
}

PlacementState::PlacementState(const Instance& instance, const AffinityGraph& graph)
    : instance_(&instance),
      graph_(&graph),
      pool_residual_(instance.dims(), 0) {
  remaining_.reserve(instance.num_apps());
  for (const auto& app : instance.apps) {
    remaining_.push_back(app.replicas);
    total_remaining_ += app.replicas;
  }
}

NodeId PlacementState::activate_node() {
  nodes_.emplace_back(instance_->capacity);
  for (std::size_t h = 0; h < pool_residual_.size(); ++h) {
    pool_residual_[h] += instance_->capacity[h];
  }
  return static_cast<NodeId>(nodes_.size() - 1);
}

std::int32_t PlacementState::max_placeable(AppId app, NodeId n, std::int32_t cap) const {
  std::int64_t k = std::min(cap, remaining_[app]);
  if (k <= 0) return 0;
  const NodeState& node = nodes_[n];
  const ResourceVector& demand = instance_->apps[app].demand;
  for (std::size_t h = 0; h < demand.size(); ++h) {
    if (demand[h] > 0) {
      k = std::min(k, node.residual_[h] / demand[h]);
      if (k <= 0) return 0;
    }
  }

  const std::int32_t present = node.count(app);
  if (auto self = graph_->self_limit(app)) k = std::min<std::int64_t>(k, *self - present);
  if (k <= 0) return 0;

  const auto in_arcs = graph_->in_arcs(app);
  const auto out_arcs = graph_->out_arcs(app);
  const auto hosted = node.hosted();
  // Scan whichever side is shorter: the node's hosted apps or app's arcs.
  if (hosted.size() <= in_arcs.size() + out_arcs.size()) {
    for (const auto& [other, other_count] : hosted) {
      if (other == app) continue;
      if (auto lim = graph_->limit(other, app)) k = std::min<std::int64_t>(k, *lim - present);
      if (present == 0) {
        if (auto lim = graph_->limit(app, other); lim && other_count > *lim) return 0;
      }
      if (k <= 0) return 0;
    }
  } else {
    for (const auto& [other, lim] : in_arcs) {
      if (node.count(other) > 0) k = std::min<std::int64_t>(k, lim - present);
      if (k <= 0) return 0;
    }
    if (present == 0) {
      for (const auto& [other, lim] : out_arcs) {
        if (node.count(other) > lim) return 0;
      }
    }
  }
  return static_cast<std::int32_t>(std::max<std::int64_t>(k, 0));
}

void PlacementState::place(AppId app, NodeId n, std::int32_t k) {
  if (k <= 0 || k > max_placeable(app, n, k)) {
    std::fprintf(stderr, "affprov: infeasible place(app=%d, node=%d, k=%d)\n", app, n, k);
    std::abort();
  }
  const ResourceVector& demand = instance_->apps[app].demand;
  nodes_[n].add(app, k, demand);
  for (std::size_t h = 0; h < demand.size(); ++h) pool_residual_[h] -= k * demand[h];
  remaining_[app] -= k;
  total_remaining_ -= k;
}

Solution PlacementState::to_solution(std::string algorithm, bool failed) const {
  Solution solution;
  solution.algorithm = std::move(algorithm);
  solution.failed = failed;
  solution.assignment.resize(instance_->num_apps());
  NodeId next = 0;
  for (const NodeState& node : nodes_) {
    if (node.empty()) continue;
    for (const auto& [app, count] : node.hosted()) {
      solution.assignment[app].push_back({next, count});
    }
    ++next;
  }
  solution.nodes_used = next;
  return solution;
}

std::vector<Violation> verify_solution(const Instance& instance, const Solution& solution) {
  std::vector<Violation> out;
  const std::size_t num_apps = instance.num_apps();
  const std::size_t dims = instance.dims();
  auto report = [&out](ViolationKind kind, AppId app, AppId other, NodeId node,
                       std::int32_t dim, std::string message) {
    out.push_back({kind, app, other, node, dim, std::move(message)});
  };

  if (solution.assignment.size() != num_apps) {
    report(ViolationKind::kStructure, -1, -1, -1, -1,
           "assignment covers " + std::to_string(solution.assignment.size()) +
               " applications, instance has " + std::to_string(num_apps));
    return out;
  }
  if (solution.nodes_used < 0) {
    report(ViolationKind::kStructure, -1, -1, -1, -1, "negative node count");
    return out;
  }

  // Per-application node -> count, rebuilt from the raw assignment.
  std::vector<std::map<NodeId, std::int64_t>> on_node(num_apps);
  for (std::size_t i = 0; i < num_apps; ++i) {
    const auto app = static_cast<AppId>(i);
    for (const NodeCount& nc : solution.assignment[i]) {
      if (nc.node < 0 || nc.node >= solution.nodes_used) {
        report(ViolationKind::kStructure, app, -1, nc.node, -1,
               "app " + std::to_string(i) + " uses node " + std::to_string(nc.node) +
                   " outside 0.." + std::to_string(solution.nodes_used - 1));
        continue;
      }
      if (nc.count <= 0) {
        report(ViolationKind::kStructure, app, -1, nc.node, -1,
               "app " + std::to_string(i) + " has non-positive count on node " +
                   std::to_string(nc.node));
        continue;
      }
      if (!on_node[i].emplace(nc.node, nc.count).second) {
        report(ViolationKind::kStructure, app, -1, nc.node, -1,
               "app " + std::to_string(i) + " lists node " + std::to_string(nc.node) +
                   " twice");
      }
    }
  }

  if (!solution.failed) {
    for (std::size_t i = 0; i < num_apps; ++i) {
      std::int64_t placed = 0;
      for (const auto& [node, count] : on_node[i]) placed += count;
      if (placed != instance.apps[i].replicas) {
        report(ViolationKind::kUnplaced, static_cast<AppId>(i), -1, -1, -1,
               "replica assignment violated for app " + std::to_string(i) + ": placed " +
                   std::to_string(placed) + " of " +
                   std::to_string(instance.apps[i].replicas));
      }
    }
  }

  std::vector<std::vector<std::int64_t>> load(
      static_cast<std::size_t>(solution.nodes_used), std::vector<std::int64_t>(dims, 0));
  for (std::size_t i = 0; i < num_apps; ++i) {
    for (const auto& [node, count] : on_node[i]) {
      for (std::size_t h = 0; h < dims; ++h) load[node][h] += count * instance.apps[i].demand[h];
    }
  }
  for (std::size_t n = 0; n < load.size(); ++n) {
    for (std::size_t h = 0; h < dims; ++h) {
      if (load[n][h] > instance.capacity[h]) {
        report(ViolationKind::kCapacity, -1, -1, static_cast<NodeId>(n),
               static_cast<std::int32_t>(h),
               "capacity violated in dim " + std::to_string(h) + " on node " +
                   std::to_string(n) + ": load " + std::to_string(load[n][h]) + " > " +
                   std::to_string(instance.capacity[h]));
      }
    }
  }

  for (const Arc& arc : instance.arcs) {
    if (arc.from < 0 || arc.to < 0 || static_cast<std::size_t>(arc.from) >= num_apps ||
        static_cast<std::size_t>(arc.to) >= num_apps) {
      continue;
    }
    for (const auto& [node, count] : on_node[arc.from]) {
      if (count < 1) continue;
      auto it = on_node[arc.to].find(node);
      const std::int64_t restricted = it == on_node[arc.to].end() ? 0 : it->second;
      if (restricted > arc.limit) {
        report(ViolationKind::kAffinity, arc.from, arc.to, node, -1,
               "affinity violated on node " + std::to_string(node) + ": " +
                   std::to_string(restricted) + " replicas of app " +
                   std::to_string(arc.to) + " next to app " + std::to_string(arc.from) +
                   " (limit " + std::to_string(arc.limit) + ")");
      }
    }
  }
  return out;
}

}  // namespace affprov
