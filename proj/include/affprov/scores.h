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

// Application-node scores. Higher is better for all kinds. Inputs are
// normalized: s = application demand, r = node residual, W = total normalized
// demand per dimension, P = pool residual sum per dimension.
//
//   dotproduct  sum_h s_h * r_h
//   l2norm      -sum_h (r_h - s_h)^2
//   fitness     sum_h (s_h / W_h) * (r_h / P_h)
//   tightfill   sum_h s_h / r_h
//
// Zero denominators contribute 0 to the sum.

#ifndef AFFPROV_SCORES_H_
#define AFFPROV_SCORES_H_

#include <span>
#include <string>
#include <string_view>

namespace affprov {

enum class ScoreKind { kDotProduct, kL2Norm, kFitness, kTightFill };

ScoreKind parse_score(std::string_view token);
std::string score_token(ScoreKind kind);

// Fitness is the only score that reads pool-wide residuals.
inline bool pool_dependent(ScoreKind kind) { return kind == ScoreKind::kFitness; }

double score(ScoreKind kind, std::span<const double> demand, std::span<const double> residual,
             std::span<const double> totals, std::span<const double> pool_residual);

}  // namespace affprov

#endif  // AFFPROV_SCORES_H_
