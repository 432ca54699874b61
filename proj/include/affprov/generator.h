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

// Reproducible instance generation: affinity graphs at a target density,
// replica/demand sampling from discrete distributions, and epoch-varying
// demand profiles.
//
// Density is arcs / |L|^2, i.e. the mean number of restrictions per
// application divided by |L|. Graph classes:
//   arbitrary  every ordered pair (i, j), i != j, is an arc with probability
//              density.
//   threshold  vertex weights w ~ U[0,1]; the unordered pairs with
//              w_i + w_j >= t become arcs with a random direction, t chosen so
//              the expected arc count is density * |L| * (|L| - 1).
//   normal     vertex i draws p_i ~ Normal(density*|L|, density*|L|/2),
//              clamped to [0, |L|-1] and rounded, then arcs to p_i distinct
//              uniformly chosen targets.

#ifndef AFFPROV_GENERATOR_H_
#define AFFPROV_GENERATOR_H_

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "affprov/model.h"

namespace affprov {

class ProfileError : public InputError {
 public:
  using InputError::InputError;
};

struct DiscreteDist {
  std::vector<std::pair<std::int64_t, double>> entries;  // (value, probability)

  std::int64_t sample(std::mt19937_64& rng) const;
  double mean() const;
};

enum class GraphClass { kArbitrary, kThreshold, kNormal };

GraphClass parse_graph_class(const std::string& token);
std::string graph_class_token(GraphClass kind);

// Per-application multiplicative demand pattern: a sinusoid with random phase
// and peak-to-mean ratio `peak_to_mean`, plus Gaussian noise of relative size
// `noise`. When the instance has a single epoch, demands are the per-type
// maximum over `source_epochs` pattern samples, rounded up.
struct TemporalShape {
  std::int32_t source_epochs = 98;
  double peak_to_mean = 1.3;
  double noise = 0.05;
};

struct GenProfile {
  std::string name = "gen";
  std::int32_t num_apps = 100;
  double density = 0.01;
  GraphClass graph_class = GraphClass::kArbitrary;
  ResourceVector capacity = {64, 128};  // per resource type
  DiscreteDist replicas;
  std::vector<DiscreteDist> demand;     // one per resource type
  DiscreteDist affinity_value;
  std::int32_t epochs = 1;
  std::optional<TemporalShape> temporal;
  std::uint64_t seed = 0;

  // Shipped default: sized to 9,338 applications, ~68,224 replicas and
  // ~24,078 restrictions on 64-core / 128 GB nodes.
  static GenProfile reference();

  // Throws ProfileError on an inconsistent profile.
  void check() const;
};

GenProfile profile_from_json(const std::string& text);
std::string profile_to_json(const GenProfile& profile);

struct GraphSample {
  std::vector<std::pair<AppId, AppId>> arcs;  // sorted by (from, to)
  std::vector<double> weights;                // threshold class only
};

GraphSample gen_graph(std::int32_t num_apps, double density, GraphClass kind,
                      std::mt19937_64& rng);

// Threshold t with P(U1 + U2 >= t) = target for independent U[0,1] draws.
double threshold_for_tail(double target);

Instance gen_instance(const GenProfile& profile);

}  // namespace affprov

#endif  // AFFPROV_GENERATOR_H_
