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

#include "affprov/model.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace affprov {

std::int64_t Instance::total_replicas() const {
  std::int64_t total = 0;
  for (const auto& app : apps) total += app.replicas;
  return total;
}

AffinityGraph::AffinityGraph(std::size_t num_apps, std::span<const Arc> arcs)
    : out_(num_apps), in_(num_apps), self_(num_apps), degree_(num_apps, 0) {
  for (const Arc& arc : arcs) {
    if (arc.from < 0 || arc.to < 0 || static_cast<std::size_t>(arc.from) >= num_apps ||
        static_cast<std::size_t>(arc.to) >= num_apps) {
      throw InputError("arc endpoint out of range");
    }
    if (arc.from == arc.to) {
      if (self_[arc.from]) throw InputError("duplicate self-arc");
      self_[arc.from] = arc.limit;
    } else {
      out_[arc.from].emplace_back(arc.to, arc.limit);
      in_[arc.to].emplace_back(arc.from, arc.limit);
    }
    ++num_arcs_;
  }
  std::vector<AppId> linked;
  for (std::size_t i = 0; i < num_apps; ++i) {
    std::sort(out_[i].begin(), out_[i].end());
    std::sort(in_[i].begin(), in_[i].end());
    for (std::size_t k = 1; k < out_[i].size(); ++k) {
      if (out_[i][k].first == out_[i][k - 1].first) throw InputError("duplicate arc");
    }
    linked.clear();
    for (const auto& [other, limit] : out_[i]) linked.push_back(other);
    for (const auto& [other, limit] : in_[i]) linked.push_back(other);
    std::sort(linked.begin(), linked.end());
    degree_[i] = static_cast<std::int32_t>(
        std::unique(linked.begin(), linked.end()) - linked.begin());
  }
}

std::optional<std::int32_t> AffinityGraph::limit(AppId i, AppId j) const {
  if (i == j) return self_[i];
  const auto& row = out_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Neighbor& n, AppId id) { return n.first < id; });
  if (it == row.end() || it->first != j) return std::nullopt;
  return it->second;
}

std::vector<std::string> validate(const Instance& instance) {
  std::vector<std::string> violations;
  auto add = [&violations](const std::string& message) { violations.push_back(message); };

  if (instance.resource_types < 1) add("resource type count must be positive");
  if (instance.epochs < 1) add("epoch count must be positive");
  const std::size_t dims =
      static_cast<std::size_t>(std::max(instance.resource_types, 0)) *
      static_cast<std::size_t>(std::max(instance.epochs, 0));
  if (instance.capacity.size() != dims) {
    std::ostringstream msg;
    msg << "capacity has " << instance.capacity.size() << " entries, expected d*T = " << dims;
    add(msg.str());
  }
  for (std::size_t h = 0; h < instance.capacity.size(); ++h) {
    if (instance.capacity[h] <= 0) {
      add("capacity must be positive in dim " + std::to_string(h));
    }
  }

  for (std::size_t i = 0; i < instance.apps.size(); ++i) {
    const Application& app = instance.apps[i];
    const std::string tag = "app " + std::to_string(i) + ": ";
    if (app.id != static_cast<AppId>(i)) {
      add(tag + "id " + std::to_string(app.id) + " breaks the dense 0..|L|-1 numbering");
    }
    if (app.replicas < 1) add(tag + "replica count must be at least 1");
    if (app.demand.size() != instance.capacity.size()) {
      add(tag + "demand length " + std::to_string(app.demand.size()) +
          " does not match capacity length " + std::to_string(instance.capacity.size()));
      continue;
    }
    for (std::size_t h = 0; h < app.demand.size(); ++h) {
      if (app.demand[h] < 0) {
        add(tag + "negative demand in dim " + std::to_string(h));
      } else if (app.demand[h] > instance.capacity[h]) {
        add(tag + "demand exceeds node capacity in dim " + std::to_string(h));
      }
    }
  }

  const auto num_apps = static_cast<AppId>(instance.apps.size());
  std::set<std::pair<AppId, AppId>> seen;
  for (const Arc& arc : instance.arcs) {
    const std::string tag =
        "arc (" + std::to_string(arc.from) + "," + std::to_string(arc.to) + "): ";
    if (arc.from < 0 || arc.from >= num_apps || arc.to < 0 || arc.to >= num_apps) {
      add(tag + "endpoint out of range");
      continue;
    }
    if (arc.limit < 0) add(tag + "negative limit");
    if (!seen.emplace(arc.from, arc.to).second) add(tag + "duplicate arc");
    if (arc.from == arc.to && arc.limit == 0) {
      add(tag + "self-affinity 0 is globally infeasible");
    }
  }
  return violations;
}

void require_valid(const Instance& instance) {
  auto violations = validate(instance);
  if (violations.empty()) return;
  std::string message = "invalid instance '" + instance.name + "':";
  for (const auto& v : violations) message += "\n  " + v;
  throw InputError(message);
}

NormalizedView normalize(const Instance& instance) {
  NormalizedView view;
  const std::size_t dims = instance.dims();
  view.dims = dims;
  view.demand.resize(instance.num_apps() * dims);
  view.total.assign(dims, 0.0);
  view.average.assign(dims, 0.0);
  view.weight.assign(dims, 0.0);
  view.replicas.reserve(instance.num_apps());

  double replica_sum = 0.0;
  for (std::size_t i = 0; i < instance.num_apps(); ++i) {
    const Application& app = instance.apps[i];
    view.replicas.push_back(app.replicas);
    replica_sum += app.replicas;
    for (std::size_t h = 0; h < dims; ++h) {
      const double fraction = static_cast<double>(app.demand[h]) /
                              static_cast<double>(instance.capacity[h]);
      view.demand[i * dims + h] = fraction;
      view.total[h] += app.replicas * fraction;
    }
  }
  double grand_total = 0.0;
  for (std::size_t h = 0; h < dims; ++h) {
    view.average[h] = replica_sum > 0 ? view.total[h] / replica_sum : 0.0;
    grand_total += view.total[h];
  }
  if (grand_total > 0) {
    for (std::size_t h = 0; h < dims; ++h) view.weight[h] = view.total[h] / grand_total;
  }
  return view;
}

std::int32_t max_replicas_per_node(const Instance& instance, AppId app) {
  const Application& a = instance.apps.at(app);
  std::int64_t nu = a.replicas;
  for (std::size_t h = 0; h < instance.dims(); ++h) {
    if (a.demand[h] > 0) nu = std::min(nu, instance.capacity[h] / a.demand[h]);
  }
  for (const Arc& arc : instance.arcs) {
    if (arc.from == app && arc.to == app) nu = std::min<std::int64_t>(nu, arc.limit);
  }
  return static_cast<std::int32_t>(nu);
}

}  // namespace affprov
