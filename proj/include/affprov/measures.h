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

// Scalar size measures collapsing a d'-dimensional normalized vector into a
// priority index, for applications (demand) and nodes (residual capacity).
//
// For an application with normalized demand s and replica count |R|:
//   avg       (1/d') sum_h s_h
//   max       max_h s_h
//   avgexp    sum_h exp(eps * D_h) * s_h
//   surrogate sum_h lambda_h * s_h
//   extsum    sum_h (|R| / W_h) * s_h          (W_h == 0 contributes 0)
//   hybrid    alpha * s/mean(s) + (1 - alpha) * deg/mean(deg)
//
// The node-side measure applies the same formula to the normalized residual
// with |R| replaced by 1 and W, D, lambda taken over the activated pool.

#ifndef AFFPROV_MEASURES_H_
#define AFFPROV_MEASURES_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affprov/model.h"

namespace affprov {

enum class MeasureBase { kAverage, kMax, kAvgExp, kSurrogate, kExtendedSum };

struct Measure {
  MeasureBase base = MeasureBase::kAverage;
  double epsilon = 1.0;
  // Set for the hybrid demand-affinity measure; value is alpha in [0, 1].
  std::optional<double> hybrid_alpha;

  // Parses avg | max | avgexp | surrogate | extsum | hybrid:<base>:<alpha>.
  static Measure parse(std::string_view token);
  std::string token() const;

  // True when the node-side value depends on pool-wide statistics.
  bool pool_dependent() const {
    return base == MeasureBase::kAvgExp || base == MeasureBase::kSurrogate ||
           base == MeasureBase::kExtendedSum;
  }

  bool operator==(const Measure&) const = default;
};

// Aggregate statistics shared by every row of one measure evaluation.
struct MeasureStats {
  std::span<const double> totals;    // W_h
  std::span<const double> averages;  // D_h
  std::span<const double> weights;   // lambda_h
};

// Evaluates a non-hybrid base measure on one normalized row.
double base_measure(MeasureBase base, double epsilon, std::span<const double> row,
                    const MeasureStats& stats, double multiplicity);

// Size of every application under `measure`, computed once from the full
// instance.
std::vector<double> app_sizes(const NormalizedView& view, const AffinityGraph& graph,
                              const Measure& measure);
double app_size(const NormalizedView& view, const AffinityGraph& graph, AppId app,
                const Measure& measure);

// Residual statistics over the currently activated nodes.
class PoolStats {
 public:
  PoolStats(std::span<const Amount> capacity, std::span<const Amount> pool_residual,
            std::size_t num_nodes);
  // Builds directly from normalized residual rows (one per activated node).
  static PoolStats from_rows(std::span<const std::vector<double>> rows);

  MeasureStats stats() const { return {totals_, averages_, weights_}; }
  std::span<const double> totals() const { return totals_; }

 private:
  PoolStats() = default;
  void finish(std::size_t num_nodes);

  std::vector<double> totals_;
  std::vector<double> averages_;
  std::vector<double> weights_;
};

// Residual-capacity measure bound to one pool snapshot, with per-dimension
// weights precomputed. A hybrid measure ranks nodes by its base, since nodes
// carry no affinity degree.
class NodeMeasure {
 public:
  NodeMeasure(const PoolStats& pool, const Measure& measure);
  double operator()(std::span<const double> residual_normalized) const;

 private:
  MeasureBase base_;
  std::vector<double> weights_;
};

double node_measure(const PoolStats& pool, std::span<const double> residual_normalized,
                    const Measure& measure);

}  // namespace affprov

#endif  // AFFPROV_MEASURES_H_
