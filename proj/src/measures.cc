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

#include "affprov/measures.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace affprov {
namespace {

std::optional<MeasureBase> parse_base(std::string_view token) {
  if (token == "avg") return MeasureBase::kAverage;
  if (token == "max") return MeasureBase::kMax;
  if (token == "avgexp") return MeasureBase::kAvgExp;
  if (token == "surrogate") return MeasureBase::kSurrogate;
  if (token == "extsum") return MeasureBase::kExtendedSum;
  return std::nullopt;
}

const char* base_token(MeasureBase base) {
  switch (base) {
    case MeasureBase::kAverage: return "avg";
    case MeasureBase::kMax: return "max";
    case MeasureBase::kAvgExp: return "avgexp";
    case MeasureBase::kSurrogate: return "surrogate";
    case MeasureBase::kExtendedSum: return "extsum";
  }
  return "?";
}

}  // namespace

Measure Measure::parse(std::string_view token) {
  Measure m;
  if (auto base = parse_base(token)) {
    m.base = *base;
    return m;
  }
  constexpr std::string_view kHybrid = "hybrid:";
  if (token.substr(0, kHybrid.size()) == kHybrid) {
    std::string_view rest = token.substr(kHybrid.size());
    auto colon = rest.find(':');
    if (colon != std::string_view::npos) {
      auto base = parse_base(rest.substr(0, colon));
      std::string alpha_text(rest.substr(colon + 1));
      char* end = nullptr;
      double alpha = std::strtod(alpha_text.c_str(), &end);
      if (base && !alpha_text.empty() && end == alpha_text.c_str() + alpha_text.size() &&
          alpha >= 0.0 && alpha <= 1.0) {
        m.base = *base;
        m.hybrid_alpha = alpha;
        return m;
      }
    }
  }
  throw InputError("unknown measure '" + std::string(token) + "'");
}

std::string Measure::token() const {
  if (!hybrid_alpha) return base_token(base);
  std::ostringstream out;
  out << "hybrid:" << base_token(base) << ':' << *hybrid_alpha;
  return out.str();
}

double base_measure(MeasureBase base, double epsilon, std::span<const double> row,
                    const MeasureStats& stats, double multiplicity) {
  double value = 0.0;
  switch (base) {
    case MeasureBase::kAverage:
      for (double v : row) value += v;
      return row.empty() ? 0.0 : value / static_cast<double>(row.size());
    case MeasureBase::kMax:
      for (double v : row) value = std::max(value, v);
      return value;
    case MeasureBase::kAvgExp:
      for (std::size_t h = 0; h < row.size(); ++h) {
        value += std::exp(epsilon * stats.averages[h]) * row[h];
      }
      return value;
    case MeasureBase::kSurrogate:
      for (std::size_t h = 0; h < row.size(); ++h) value += stats.weights[h] * row[h];
      return value;
    case MeasureBase::kExtendedSum:
      for (std::size_t h = 0; h < row.size(); ++h) {
        if (stats.totals[h] > 0) value += multiplicity / stats.totals[h] * row[h];
      }
      return value;
  }
  return value;
}

std::vector<double> app_sizes(const NormalizedView& view, const AffinityGraph& graph,
                              const Measure& measure) {
  const std::size_t num_apps = view.num_apps();
  const MeasureStats stats{view.total, view.average, view.weight};
  std::vector<double> sizes(num_apps);
  for (std::size_t i = 0; i < num_apps; ++i) {
    sizes[i] = base_measure(measure.base, measure.epsilon, view.row(static_cast<AppId>(i)),
                            stats, view.replicas[i]);
  }
  if (!measure.hybrid_alpha || num_apps == 0) return sizes;

  const double alpha = *measure.hybrid_alpha;
  double size_mean = 0.0;
  double degree_mean = 0.0;
  for (std::size_t i = 0; i < num_apps; ++i) {
    size_mean += sizes[i];
    degree_mean += graph.degree(static_cast<AppId>(i));
  }
  size_mean /= static_cast<double>(num_apps);
  degree_mean /= static_cast<double>(num_apps);
  for (std::size_t i = 0; i < num_apps; ++i) {
    const double demand_term = size_mean > 0 ? sizes[i] / size_mean : 0.0;
    const double affinity_term =
        degree_mean > 0 ? graph.degree(static_cast<AppId>(i)) / degree_mean : 0.0;
    sizes[i] = alpha * demand_term + (1.0 - alpha) * affinity_term;
  }
  return sizes;
}

double app_size(const NormalizedView& view, const AffinityGraph& graph, AppId app,
                const Measure& measure) {
  if (!measure.hybrid_alpha) {
    return base_measure(measure.base, measure.epsilon, view.row(app),
                        {view.total, view.average, view.weight}, view.replicas[app]);
  }
  return app_sizes(view, graph, measure)[app];
}

PoolStats::PoolStats(std::span<const Amount> capacity, std::span<const Amount> pool_residual,
                     std::size_t num_nodes) {
  totals_.resize(capacity.size());
  for (std::size_t h = 0; h < capacity.size(); ++h) {
    totals_[h] = static_cast<double>(pool_residual[h]) / static_cast<double>(capacity[h]);
  }
  finish(num_nodes);
}

PoolStats PoolStats::from_rows(std::span<const std::vector<double>> rows) {
  PoolStats pool;
  if (!rows.empty()) pool.totals_.assign(rows.front().size(), 0.0);
  for (const auto& row : rows) {
    for (std::size_t h = 0; h < row.size(); ++h) pool.totals_[h] += row[h];
  }
  pool.finish(rows.size());
  return pool;
}

void PoolStats::finish(std::size_t num_nodes) {
  averages_.assign(totals_.size(), 0.0);
  weights_.assign(totals_.size(), 0.0);
  double grand = 0.0;
  for (std::size_t h = 0; h < totals_.size(); ++h) {
    if (num_nodes > 0) averages_[h] = totals_[h] / static_cast<double>(num_nodes);
    grand += totals_[h];
  }
  if (grand > 0) {
    for (std::size_t h = 0; h < totals_.size(); ++h) weights_[h] = totals_[h] / grand;
  }
}

NodeMeasure::NodeMeasure(const PoolStats& pool, const Measure& measure) : base_(measure.base) {
  const MeasureStats stats = pool.stats();
  const std::size_t dims = stats.totals.size();
  switch (base_) {
    case MeasureBase::kAverage:
    case MeasureBase::kMax:
      break;
    case MeasureBase::kAvgExp:
      for (std::size_t h = 0; h < dims; ++h) {
        weights_.push_back(std::exp(measure.epsilon * stats.averages[h]));
      }
      break;
    case MeasureBase::kSurrogate:
      weights_.assign(stats.weights.begin(), stats.weights.end());
      break;
    case MeasureBase::kExtendedSum:
      for (std::size_t h = 0; h < dims; ++h) {
        weights_.push_back(stats.totals[h] > 0 ? 1.0 / stats.totals[h] : 0.0);
      }
      break;
  }
}

double NodeMeasure::operator()(std::span<const double> residual_normalized) const {
  if (base_ == MeasureBase::kAverage || base_ == MeasureBase::kMax) {
    return base_measure(base_, 0.0, residual_normalized, {}, 1.0);
  }
  double value = 0.0;
  for (std::size_t h = 0; h < residual_normalized.size(); ++h) {
    value += weights_[h] * residual_normalized[h];
  }
  return value;
}

double node_measure(const PoolStats& pool, std::span<const double> residual_normalized,
                    const Measure& measure) {
  return base_measure(measure.base, measure.epsilon, residual_normalized, pool.stats(), 1.0);
}

}  // namespace affprov
