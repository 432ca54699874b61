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

// Domain model for affinity-aware provisioning of replicated long-running
// applications onto identical multi-dimensional nodes.
//
// Dimensions are laid out epoch-major: dimension h = t * d + k holds resource
// type k during epoch t, so an instance with d resource types and T epochs
// packs in d' = T * d coordinates.

#ifndef AFFPROV_MODEL_H_
#define AFFPROV_MODEL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affprov {

using AppId = std::int32_t;
using NodeId = std::int32_t;
using Amount = std::int64_t;
using ResourceVector = std::vector<Amount>;

// Raised for malformed input data (files, profiles, out-of-range arguments).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Application {
  AppId id = 0;
  std::int32_t replicas = 1;
  ResourceVector demand;

  bool operator==(const Application&) const = default;
};

// Directed affinity restriction: on any node hosting at least one replica of
// `from`, at most `limit` replicas of `to` may reside. limit == 0 is a hard
// conflict.
struct Arc {
  AppId from = 0;
  AppId to = 0;
  std::int32_t limit = 0;

  bool operator==(const Arc&) const = default;
};

struct Instance {
  std::string name;
  std::int32_t resource_types = 1;  // d
  std::int32_t epochs = 1;          // T
  ResourceVector capacity;          // length d * T
  std::vector<Application> apps;
  std::vector<Arc> arcs;
  std::optional<std::uint64_t> seed;
  std::optional<double> density;

  std::size_t dims() const { return capacity.size(); }
  std::size_t num_apps() const { return apps.size(); }
  std::int64_t total_replicas() const;

  bool operator==(const Instance&) const = default;
};

// Adjacency view of the arcs. Built once per solver run from a valid instance.
// Self-arcs are kept apart from the neighbor lists.
class AffinityGraph {
 public:
  using Neighbor = std::pair<AppId, std::int32_t>;  // (other app, limit)

  AffinityGraph() = default;
  // Requires in-range ids and at most one arc per ordered pair.
  AffinityGraph(std::size_t num_apps, std::span<const Arc> arcs);

  std::size_t num_apps() const { return out_.size(); }
  std::size_t num_arcs() const { return num_arcs_; }

  // Sorted by neighbor id; self-arcs excluded.
  std::span<const Neighbor> out_arcs(AppId i) const { return out_[i]; }
  std::span<const Neighbor> in_arcs(AppId j) const { return in_[j]; }
  std::optional<std::int32_t> self_limit(AppId i) const { return self_[i]; }

  // Limit a_ij of arc (i, j), if present. Handles i == j.
  std::optional<std::int32_t> limit(AppId i, AppId j) const;

  // Number of distinct other applications linked to i in either direction.
  std::int32_t degree(AppId i) const { return degree_[i]; }

 private:
  std::vector<std::vector<Neighbor>> out_;
  std::vector<std::vector<Neighbor>> in_;
  std::vector<std::optional<std::int32_t>> self_;
  std::vector<std::int32_t> degree_;
  std::size_t num_arcs_ = 0;
};

// Demands divided by node capacity, plus aggregate statistics over all
// replicas. Immutable once built.
struct NormalizedView {
  std::size_t dims = 0;
  std::vector<double> demand;  // row-major, num_apps x dims
  std::vector<double> total;   // W_h = sum_i |R_i| s'_ih
  std::vector<double> average; // D_h = W_h / sum_i |R_i|
  std::vector<double> weight;  // lambda_h = W_h / sum_k W_k
  std::vector<std::int32_t> replicas;

  std::span<const double> row(AppId i) const {
    return {demand.data() + static_cast<std::size_t>(i) * dims, dims};
  }
  std::size_t num_apps() const { return replicas.size(); }
};

struct NodeCount {
  NodeId node = 0;
  std::int32_t count = 0;

  bool operator==(const NodeCount&) const = default;
};

struct Solution {
  // assignment[i] lists (node, replica count) pairs for application i,
  // sorted by node index.
  std::vector<std::vector<NodeCount>> assignment;
  std::int32_t nodes_used = 0;
  std::string algorithm;
  double wall_time_ms = 0.0;
  bool failed = false;

  bool operator==(const Solution&) const = default;
};

// Returns human-readable descriptions of every well-formedness violation.
std::vector<std::string> validate(const Instance& instance);

// Throws InputError listing the violations when validate() is non-empty.
void require_valid(const Instance& instance);

NormalizedView normalize(const Instance& instance);

// Replicas of `app` that fit one empty node on their own (nu_i), capped by the
// replica count and by a self-arc limit when present.
std::int32_t max_replicas_per_node(const Instance& instance, AppId app);

}  // namespace affprov

#endif  // AFFPROV_MODEL_H_
