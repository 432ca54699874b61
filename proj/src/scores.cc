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

#include "affprov/scores.h"

#include "affprov/model.h"

namespace affprov {

ScoreKind parse_score(std::string_view token) {
  if (token == "dotproduct") return ScoreKind::kDotProduct;
  if (token == "l2norm") return ScoreKind::kL2Norm;
  if (token == "fitness") return ScoreKind::kFitness;
  if (token == "tightfill") return ScoreKind::kTightFill;
  throw InputError("unknown score '" + std::string(token) + "'");
}

std::string score_token(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::kDotProduct: return "dotproduct";
    case ScoreKind::kL2Norm: return "l2norm";
    case ScoreKind::kFitness: return "fitness";
    case ScoreKind::kTightFill: return "tightfill";
  }
  return "?";
}

double score(ScoreKind kind, std::span<const double> demand, std::span<const double> residual,
             std::span<const double> totals, std::span<const double> pool_residual) {
  double value = 0.0;
  const std::size_t dims = demand.size();
  switch (kind) {
    case ScoreKind::kDotProduct:
      for (std::size_t h = 0; h < dims; ++h) value += demand[h] * residual[h];
      break;
    case ScoreKind::kL2Norm:
      for (std::size_t h = 0; h < dims; ++h) {
        const double gap = residual[h] - demand[h];
        value -= gap * gap;
      }
      break;
    case ScoreKind::kFitness:
      for (std::size_t h = 0; h < dims; ++h) {
        if (totals[h] > 0 && pool_residual[h] > 0) {
          value += demand[h] / totals[h] * (residual[h] / pool_residual[h]);
        }
      }
      break;
    case ScoreKind::kTightFill:
      for (std::size_t h = 0; h < dims; ++h) {
        if (residual[h] > 0) value += demand[h] / residual[h];
      }
      break;
  }
  return value;
}

}  // namespace affprov
