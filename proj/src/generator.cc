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

#include "affprov/generator.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace affprov {
namespace {

using nlohmann::json;

constexpr int kMaxDemandRetries = 100;

// Independent streams so that, e.g., changing the graph class keeps the
// sampled applications identical.
enum Stream : std::uint64_t { kAppStream = 1, kGraphStream = 2, kLimitStream = 3 };

std::mt19937_64 make_rng(std::uint64_t seed, Stream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

void check_dist(const DiscreteDist& dist, const std::string& what, std::int64_t min_value) {
  if (dist.entries.empty()) throw ProfileError(what + ": empty distribution");
  double total = 0.0;
  for (const auto& [value, p] : dist.entries) {
    if (value < min_value) {
      throw ProfileError(what + ": value " + std::to_string(value) + " below " +
                         std::to_string(min_value));
    }
    if (!(p >= 0.0)) throw ProfileError(what + ": negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << what << ": probabilities sum to " << total << ", expected 1";
    throw ProfileError(msg.str());
  }
}

DiscreteDist dist_from_json(const json& node, const std::string& what) {
  DiscreteDist dist;
  if (!node.is_array()) throw ProfileError(what + ": expected [[value, probability], ...]");
  for (const auto& entry : node) {
    if (!entry.is_array() || entry.size() != 2) {
      throw ProfileError(what + ": expected [value, probability] pairs");
    }
    dist.entries.emplace_back(entry[0].get<std::int64_t>(), entry[1].get<double>());
  }
  return dist;
}

json dist_to_json(const DiscreteDist& dist) {
  json out = json::array();
  for (const auto& [value, p] : dist.entries) out.push_back({value, p});
  return out;
}

DiscreteDist inverse_sqrt_dist(std::int64_t max_value) {
  DiscreteDist dist;
  double total = 0.0;
  for (std::int64_t v = 1; v <= max_value; ++v) total += 1.0 / std::sqrt(static_cast<double>(v));
  for (std::int64_t v = 1; v <= max_value; ++v) {
    dist.entries.emplace_back(v, 1.0 / std::sqrt(static_cast<double>(v)) / total);
  }
  return dist;
}

// Survival function of the sum of two independent U[0,1] variables.
double uniform_sum_tail(double t) {
  if (t <= 0.0) return 1.0;
  if (t >= 2.0) return 0.0;
  if (t <= 1.0) return 1.0 - t * t / 2.0;
  return (2.0 - t) * (2.0 - t) / 2.0;
}

void arbitrary_graph(std::int32_t n, double density, std::mt19937_64& rng, GraphSample& out) {
  if (density <= 0.0 || n < 2) return;
  const std::int64_t others = n - 1;
  const std::int64_t pairs = static_cast<std::int64_t>(n) * others;
  // Skip ahead by geometric gaps instead of flipping a coin per pair.
  std::geometric_distribution<std::int64_t> gap(density);
  for (std::int64_t k = gap(rng); k < pairs; k += gap(rng) + 1) {
    const auto from = static_cast<AppId>(k / others);
    auto to = static_cast<AppId>(k % others);
    if (to >= from) ++to;
    out.arcs.emplace_back(from, to);
  }
}

void threshold_graph(std::int32_t n, double density, std::mt19937_64& rng, GraphSample& out) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  out.weights.resize(static_cast<std::size_t>(n));
  for (auto& w : out.weights) w = unit(rng);
  if (density <= 0.0 || n < 2) return;
  // Arcs per unordered pair: one when 2*density <= 1, otherwise every pair
  // plus a reverse arc with the leftover probability.
  const double per_pair = 2.0 * density;
  const double t = threshold_for_tail(std::min(per_pair, 1.0));
  const double reverse_p = std::max(per_pair - 1.0, 0.0);
  std::bernoulli_distribution flip(0.5);
  std::bernoulli_distribution reverse(reverse_p);
  for (AppId i = 0; i < n; ++i) {
    for (AppId j = i + 1; j < n; ++j) {
      if (out.weights[i] + out.weights[j] < t) continue;
      if (flip(rng)) {
        out.arcs.emplace_back(i, j);
        if (reverse_p > 0 && reverse(rng)) out.arcs.emplace_back(j, i);
      } else {
        out.arcs.emplace_back(j, i);
        if (reverse_p > 0 && reverse(rng)) out.arcs.emplace_back(i, j);
      }
    }
  }
}

void normal_graph(std::int32_t n, double density, std::mt19937_64& rng, GraphSample& out) {
  if (density <= 0.0 || n < 2) return;
  const double mean = density * n;
  std::normal_distribution<double> draw(mean, mean / 2.0);
  std::unordered_set<std::int64_t> picked;
  std::vector<AppId> targets;
  for (AppId i = 0; i < n; ++i) {
    const double raw = std::clamp(draw(rng), 0.0, static_cast<double>(n - 1));
    const auto p = static_cast<std::int64_t>(std::llround(raw));
    // Floyd's sampling of p distinct values from the n-1 other vertices.
    picked.clear();
    const std::int64_t pool = n - 1;
    for (std::int64_t j = pool - p; j < pool; ++j) {
      std::uniform_int_distribution<std::int64_t> pick(0, j);
      const std::int64_t v = pick(rng);
      if (!picked.insert(v).second) picked.insert(j);
    }
    targets.clear();
    for (std::int64_t v : picked) targets.push_back(static_cast<AppId>(v >= i ? v + 1 : v));
    std::sort(targets.begin(), targets.end());
    for (AppId to : targets) out.arcs.emplace_back(i, to);
  }
}

// Multiplicative demand factors, one per epoch, averaging about 1.
std::vector<double> demand_pattern(const TemporalShape& shape, std::int32_t epochs,
                                   std::mt19937_64& rng) {
  std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> noise(0.0, shape.noise);
  const double phase = phase_dist(rng);
  const double amplitude = shape.peak_to_mean - 1.0;
  std::vector<double> factors(static_cast<std::size_t>(epochs));
  for (std::int32_t t = 0; t < epochs; ++t) {
    const double wave = std::sin(2.0 * std::numbers::pi * t / epochs + phase);
    factors[t] = std::max(0.0, 1.0 + amplitude * wave + (shape.noise > 0 ? noise(rng) : 0.0));
  }
  return factors;
}

}  // namespace

std::int64_t DiscreteDist::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double u = unit(rng);
  for (const auto& [value, p] : entries) {
    if (u < p) return value;
    u -= p;
  }
  // Rounding slack lands on the last entry with positive mass.
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (it->second > 0) return it->first;
  }
  return entries.back().first;
}

double DiscreteDist::mean() const {
  double m = 0.0;
  for (const auto& [value, p] : entries) m += static_cast<double>(value) * p;
  return m;
}

GraphClass parse_graph_class(const std::string& token) {
  if (token == "arbitrary") return GraphClass::kArbitrary;
  if (token == "threshold") return GraphClass::kThreshold;
  if (token == "normal") return GraphClass::kNormal;
  throw ProfileError("unknown graph class '" + token + "'");
}

std::string graph_class_token(GraphClass kind) {
  switch (kind) {
    case GraphClass::kArbitrary: return "arbitrary";
    case GraphClass::kThreshold: return "threshold";
    case GraphClass::kNormal: return "normal";
  }
  return "?";
}

GenProfile GenProfile::reference() {
  GenProfile p;
  p.name = "reference";
  p.num_apps = 9338;
  p.density = 24078.0 / (9338.0 * 9338.0);
  p.graph_class = GraphClass::kArbitrary;
  p.capacity = {64, 128};
  p.replicas.entries = {{1, 0.29}, {2, 0.18}, {3, 0.10},  {4, 0.08},  {6, 0.08},  {8, 0.07},
                        {12, 0.06}, {16, 0.05}, {24, 0.038}, {32, 0.025}, {64, 0.027}};
  // Integer sizes 1..16 cores and 1..32 GB, weighted by 1/sqrt(value).
  p.demand = {inverse_sqrt_dist(16), inverse_sqrt_dist(32)};
  p.affinity_value.entries = {{0, 0.40}, {1, 0.25}, {2, 0.15}, {3, 0.10}, {5, 0.05}, {10, 0.05}};
  p.epochs = 1;
  p.temporal = std::nullopt;
  p.seed = 1;
  return p;
}

void GenProfile::check() const {
  if (num_apps < 0) throw ProfileError("num_apps must be non-negative");
  if (!(density >= 0.0 && density < 1.0)) throw ProfileError("density must lie in [0, 1)");
  if (num_apps > 0 && density * num_apps > num_apps - 1) {
    throw ProfileError("density * |L| exceeds |L| - 1");
  }
  if (capacity.empty()) throw ProfileError("capacity needs at least one resource type");
  for (Amount c : capacity) {
    if (c <= 0) throw ProfileError("capacity entries must be positive");
  }
  if (demand.size() != capacity.size()) {
    throw ProfileError("one demand distribution per resource type is required");
  }
  check_dist(replicas, "replicas", 1);
  for (std::size_t k = 0; k < demand.size(); ++k) {
    check_dist(demand[k], "demand[" + std::to_string(k) + "]", 0);
  }
  check_dist(affinity_value, "affinity_values", 0);
  if (epochs < 1) throw ProfileError("epochs must be positive");
  if (temporal) {
    if (temporal->source_epochs < 1) throw ProfileError("temporal.source_epochs must be positive");
    if (temporal->peak_to_mean < 1.0) throw ProfileError("temporal.peak_to_mean must be >= 1");
    if (temporal->noise < 0.0) throw ProfileError("temporal.noise must be non-negative");
  }
}

GenProfile profile_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ProfileError(std::string("profile JSON parse error: ") + e.what());
  }
  try {
    GenProfile p;
    p.name = doc.value("name", p.name);
    p.num_apps = doc.at("num_apps").get<std::int32_t>();
    p.density = doc.at("density").get<double>();
    p.graph_class = parse_graph_class(doc.value("graph_class", std::string("arbitrary")));
    p.capacity = doc.at("capacity").get<ResourceVector>();
    p.replicas = dist_from_json(doc.at("replicas"), "replicas");
    p.demand.clear();
    for (const auto& d : doc.at("demand")) p.demand.push_back(dist_from_json(d, "demand"));
    p.affinity_value = dist_from_json(doc.at("affinity_values"), "affinity_values");
    p.epochs = doc.value("epochs", 1);
    if (auto it = doc.find("temporal"); it != doc.end() && !it->is_null()) {
      TemporalShape shape;
      shape.source_epochs = it->value("source_epochs", shape.source_epochs);
      shape.peak_to_mean = it->value("peak_to_mean", shape.peak_to_mean);
      shape.noise = it->value("noise", shape.noise);
      p.temporal = shape;
    }
    p.seed = doc.value("seed", std::uint64_t{0});
    p.check();
    return p;
  } catch (const json::exception& e) {
    throw ProfileError(std::string("profile JSON: ") + e.what());
  }
}

std::string profile_to_json(const GenProfile& profile) {
  json demand = json::array();
  for (const auto& d : profile.demand) demand.push_back(dist_to_json(d));
  json doc = {{"name", profile.name},
              {"num_apps", profile.num_apps},
              {"density", profile.density},
              {"graph_class", graph_class_token(profile.graph_class)},
              {"capacity", profile.capacity},
              {"replicas", dist_to_json(profile.replicas)},
              {"demand", std::move(demand)},
              {"affinity_values", dist_to_json(profile.affinity_value)},
              {"epochs", profile.epochs},
              {"seed", profile.seed}};
  if (profile.temporal) {
    doc["temporal"] = {{"source_epochs", profile.temporal->source_epochs},
                       {"peak_to_mean", profile.temporal->peak_to_mean},
                       {"noise", profile.temporal->noise}};
  } else {
    doc["temporal"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

double threshold_for_tail(double target) {
  if (target >= 1.0) return 0.0;
  if (target <= 0.0) return 2.0;
  double lo = 0.0;
  double hi = 2.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (uniform_sum_tail(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

GraphSample gen_graph(std::int32_t num_apps, double density, GraphClass kind,
                      std::mt19937_64& rng) {
  if (!(density >= 0.0 && density < 1.0)) throw ProfileError("density must lie in [0, 1)");
  if (num_apps > 0 && density * num_apps > num_apps - 1) {
    throw ProfileError("density * |L| exceeds |L| - 1");
  }
  GraphSample out;
  switch (kind) {
    case GraphClass::kArbitrary: arbitrary_graph(num_apps, density, rng, out); break;
    case GraphClass::kThreshold: threshold_graph(num_apps, density, rng, out); break;
    case GraphClass::kNormal: normal_graph(num_apps, density, rng, out); break;
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

Instance gen_instance(const GenProfile& profile) {
  profile.check();
  const auto types = static_cast<std::size_t>(profile.capacity.size());
  const std::int32_t epochs = profile.epochs;

  Instance instance;
  {
    std::ostringstream name;
    name << profile.name << '-' << graph_class_token(profile.graph_class) << "-L"
         << profile.num_apps << "-D" << profile.density << "-T" << epochs << "-s"
         << profile.seed;
    instance.name = name.str();
  }
  instance.resource_types = static_cast<std::int32_t>(types);
  instance.epochs = epochs;
  for (std::int32_t t = 0; t < epochs; ++t) {
    instance.capacity.insert(instance.capacity.end(), profile.capacity.begin(),
                             profile.capacity.end());
  }
  instance.seed = profile.seed;
  instance.density = profile.density;

  auto app_rng = make_rng(profile.seed, kAppStream);
  for (AppId i = 0; i < profile.num_apps; ++i) {
    Application app;
    app.id = i;
    app.replicas = static_cast<std::int32_t>(profile.replicas.sample(app_rng));
    std::vector<Amount> base(types);
    int attempt = 0;
    while (true) {
      bool fits = true;
      for (std::size_t k = 0; k < types; ++k) {
        base[k] = profile.demand[k].sample(app_rng);
        fits = fits && base[k] <= profile.capacity[k];
      }
      if (fits) break;
      if (++attempt >= kMaxDemandRetries) {
        throw ProfileError("could not sample a demand that fits an empty node after " +
                           std::to_string(kMaxDemandRetries) + " attempts (app " +
                           std::to_string(i) + ")");
      }
    }

    app.demand.assign(types * epochs, 0);
    if (!profile.temporal) {
      for (std::int32_t t = 0; t < epochs; ++t) {
        std::copy(base.begin(), base.end(), app.demand.begin() + t * types);
      }
    } else {
      const std::int32_t samples = epochs > 1 ? epochs : profile.temporal->source_epochs;
      const auto factors = demand_pattern(*profile.temporal, samples, app_rng);
      for (std::int32_t t = 0; t < samples; ++t) {
        for (std::size_t k = 0; k < types; ++k) {
          const auto scaled = static_cast<Amount>(
              std::ceil(static_cast<double>(base[k]) * factors[t] - 1e-9));
          const Amount clamped = std::clamp<Amount>(scaled, 0, profile.capacity[k]);
          if (epochs > 1) {
            app.demand[t * types + k] = clamped;
          } else {
            app.demand[k] = std::max(app.demand[k], clamped);
          }
        }
      }
    }
    instance.apps.push_back(std::move(app));
  }

  auto graph_rng = make_rng(profile.seed, kGraphStream);
  const GraphSample graph =
      gen_graph(profile.num_apps, profile.density, profile.graph_class, graph_rng);
  auto limit_rng = make_rng(profile.seed, kLimitStream);
  instance.arcs.reserve(graph.arcs.size());
  for (const auto& [from, to] : graph.arcs) {
    instance.arcs.push_back(
        {from, to, static_cast<std::int32_t>(profile.affinity_value.sample(limit_rng))});
  }
  require_valid(instance);
  return instance;
}

}  // namespace affprov
