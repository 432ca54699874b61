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

// Test helpers: instance builders and reference implementations that share
// no code with the library's placement logic.

#ifndef AFFPROV_TESTS_TESTING_H_
#define AFFPROV_TESTS_TESTING_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "affprov/model.h"
#include "affprov/scores.h"

namespace affprov::testing {

struct AppSpec {
  std::int32_t replicas;
  ResourceVector demand;
};

inline Instance make_instance(ResourceVector capacity, const std::vector<AppSpec>& apps,
                              std::vector<Arc> arcs = {}, std::int32_t epochs = 1) {
  Instance instance;
  instance.name = "test";
  instance.epochs = epochs;
  instance.resource_types = static_cast<std::int32_t>(capacity.size()) / epochs;
  instance.capacity = std::move(capacity);
  for (std::size_t i = 0; i < apps.size(); ++i) {
    instance.apps.push_back({static_cast<AppId>(i), apps[i].replicas, apps[i].demand});
  }
  instance.arcs = std::move(arcs);
  return instance;
}

// Capacity (10,10); A: 2 replicas of (6,3); B: (5,5); C: (3,3); A conflicts
// with C.
inline Instance ff_example() {
  return make_instance({10, 10}, {{2, {6, 3}}, {1, {5, 5}}, {1, {3, 3}}}, {{0, 2, 0}});
}

struct TinyShape {
  int max_apps = 5;
  int max_total_replicas = 8;
  int resource_types = 2;
  int epochs = 1;
  Amount capacity = 10;
  double arc_probability = 0.3;
  bool self_arcs = true;
};

// Random valid instance within `shape`; every demand fits an empty node.
inline Instance random_tiny_instance(std::mt19937_64& rng, const TinyShape& shape) {
  std::uniform_int_distribution<int> apps_dist(1, shape.max_apps);
  std::uniform_int_distribution<Amount> demand_dist(0, shape.capacity);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> limit_dist(0, 3);
  const int num_apps = apps_dist(rng);
  const int dims = shape.resource_types * shape.epochs;
  int budget = shape.max_total_replicas - num_apps;
  std::vector<AppSpec> apps;
  for (int i = 0; i < num_apps; ++i) {
    std::uniform_int_distribution<int> extra(0, std::min(budget, 3));
    const int add = extra(rng);
    budget -= add;
    ResourceVector demand(dims);
    for (auto& v : demand) v = demand_dist(rng) / (unit(rng) < 0.5 ? 2 : 1);
    apps.push_back({1 + add, demand});
  }
  std::vector<Arc> arcs;
  for (int i = 0; i < num_apps; ++i) {
    for (int j = 0; j < num_apps; ++j) {
      if (i == j && !shape.self_arcs) continue;
      if (unit(rng) >= shape.arc_probability) continue;
      int limit = limit_dist(rng);
      if (i == j) limit = std::max(limit, 1);
      arcs.push_back({i, j, limit});
    }
  }
  return make_instance(ResourceVector(dims, shape.capacity), apps, arcs, shape.epochs);
}

// Checks a node given per-application counts by scanning every arc.
inline bool node_feasible(const Instance& instance, const std::vector<std::int64_t>& counts) {
  for (std::size_t h = 0; h < instance.dims(); ++h) {
    Amount load = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) load += counts[i] * instance.apps[i].demand[h];
    if (load > instance.capacity[h]) return false;
  }
  for (const Arc& arc : instance.arcs) {
    if (counts[arc.from] > 0 && counts[arc.to] > arc.limit) return false;
  }
  return true;
}

// Textbook First Fit Decreasing for one dimension and unit replicas.
inline int textbook_ffd(std::vector<Amount> sizes, Amount capacity) {
  std::stable_sort(sizes.begin(), sizes.end(), std::greater<>());
  std::vector<Amount> bins;
  for (Amount s : sizes) {
    auto it = std::find_if(bins.begin(), bins.end(), [&](Amount used) { return used + s <= capacity; });
    if (it == bins.end()) {
      bins.push_back(s);
    } else {
      *it += s;
    }
  }
  return static_cast<int>(bins.size());
}

// Straightforward application-node matching over a fixed pool: every step
// scores every feasible pair from scratch. Returns per-node counts, or an
// empty vector when some replica cannot be placed.
inline std::vector<std::vector<std::int64_t>> naive_matching(const Instance& instance, int nodes,
                                                             ScoreKind kind) {
  const std::size_t apps = instance.num_apps();
  const std::size_t dims = instance.dims();
  std::vector<std::vector<std::int64_t>> counts(nodes, std::vector<std::int64_t>(apps, 0));
  std::vector<std::int64_t> remaining;
  std::vector<double> totals(dims, 0.0);
  std::vector<std::vector<double>> demand(apps, std::vector<double>(dims));
  for (std::size_t i = 0; i < apps; ++i) {
    remaining.push_back(instance.apps[i].replicas);
    for (std::size_t h = 0; h < dims; ++h) {
      demand[i][h] = static_cast<double>(instance.apps[i].demand[h]) /
                     static_cast<double>(instance.capacity[h]);
      totals[h] += instance.apps[i].replicas * demand[i][h];
    }
  }
  auto residual_of = [&](int n) {
    std::vector<double> r(dims);
    for (std::size_t h = 0; h < dims; ++h) {
      Amount free = instance.capacity[h];
      for (std::size_t i = 0; i < apps; ++i) free -= counts[n][i] * instance.apps[i].demand[h];
      r[h] = static_cast<double>(free) / static_cast<double>(instance.capacity[h]);
    }
    return r;
  };
  std::int64_t left = std::accumulate(remaining.begin(), remaining.end(), std::int64_t{0});
  while (left > 0) {
    // Pool sums are taken in raw units and normalized once, so the values
    // match the library bit for bit and exact score ties resolve alike.
    std::vector<double> pool(dims, 0.0);
    std::vector<std::vector<double>> residual(nodes);
    for (int n = 0; n < nodes; ++n) residual[n] = residual_of(n);
    for (std::size_t h = 0; h < dims; ++h) {
      Amount raw = 0;
      for (int n = 0; n < nodes; ++n) {
        raw += static_cast<Amount>(std::llround(residual[n][h] * instance.capacity[h]));
      }
      pool[h] = static_cast<double>(raw) / static_cast<double>(instance.capacity[h]);
    }
    int best_node = -1;
    AppId best_app = -1;
    double best = 0.0;
    for (int n = 0; n < nodes; ++n) {
      for (std::size_t i = 0; i < apps; ++i) {
        if (remaining[i] == 0) continue;
        auto trial = counts[n];
        ++trial[i];
        if (!node_feasible(instance, trial)) continue;
        const double value = score(kind, demand[i], residual[n], totals, pool);
        const bool better = best_node < 0 || value > best ||
                            (value == best && (static_cast<AppId>(i) < best_app ||
                                               (static_cast<AppId>(i) == best_app && n < best_node)));
        if (better) {
          best = value;
          best_app = static_cast<AppId>(i);
          best_node = n;
        }
      }
    }
    if (best_node < 0) return {};
    ++counts[best_node][best_app];
    --remaining[best_app];
    --left;
  }
  return counts;
}

// Minimum node count by trying n = 1, 2, ... and placing replicas one at a
// time onto any of the first n nodes, pruning with node_feasible.
inline int exhaustive_opt(const Instance& instance) {
  std::vector<AppId> replicas;
  for (const auto& app : instance.apps) {
    for (int r = 0; r < app.replicas; ++r) replicas.push_back(app.id);
  }
  const int total = static_cast<int>(replicas.size());
  for (int n = 1; n <= total; ++n) {
    std::vector<std::vector<std::int64_t>> counts(n, std::vector<std::int64_t>(instance.num_apps(), 0));
    auto place = [&](auto&& self, int k, int used) -> bool {
      if (k == total) return true;
      const int limit = std::min(n, used + 1);
      for (int b = 0; b < limit; ++b) {
        ++counts[b][replicas[k]];
        if (node_feasible(instance, counts[b]) && self(self, k + 1, std::max(used, b + 1))) return true;
        --counts[b][replicas[k]];
      }
      return false;
    };
    if (place(place, 0, 0)) return n;
  }
  return total;
}

// Per-node application counts of a solution, in node order.
inline std::vector<std::vector<std::int64_t>> node_counts(const Instance& instance,
                                                          const Solution& solution) {
  std::vector<std::vector<std::int64_t>> counts(
      solution.nodes_used, std::vector<std::int64_t>(instance.num_apps(), 0));
  for (std::size_t i = 0; i < solution.assignment.size(); ++i) {
    for (const NodeCount& nc : solution.assignment[i]) counts[nc.node][i] += nc.count;
  }
  return counts;
}

}  // namespace affprov::testing

#endif  // AFFPROV_TESTS_TESTING_H_
