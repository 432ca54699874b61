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

// Lower bound, exhaustive optimum for tiny instances, and the 0-1 integer
// model of the provisioning problem in CPLEX LP text form.

#ifndef AFFPROV_BOUNDS_H_
#define AFFPROV_BOUNDS_H_

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affprov/model.h"

namespace affprov {

struct Bound {
  std::int64_t value = 0;
  std::int32_t binding_dimension = 0;
};

// max_h ceil(W_h / C_h) over raw integer demands, W_h = sum_i |R_i| s_ih.
// Ties pick the lowest dimension.
Bound lower_bound(const Instance& instance);

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultOracleLimit = 10;

// Exhaustive minimum-node search. Replicas are enumerated application by
// application; a replica may open node k only when node k-1 is in use, and
// replicas of one application take non-decreasing node indices. Returns the
// lexicographically first optimal assignment under that order. Throws
// LimitExceeded when the instance has more than `limit` replicas.
Solution brute_force_opt(const Instance& instance, std::int64_t limit = kDefaultOracleLimit);

// Model text layout (one row per line, bit-exact for fixed instance and n):
//
//   \ affprov provisioning model: <name>, <n> candidate nodes
//   Minimize
//    obj: y_0 + y_1 + ...
//   Subject To
//    assign_<i>_<r>:  x_i_r_0 + ... = 1                    every replica placed
//    cap_<n>_<h>:     s_ih x_i_r_n + ... - C_h y_n <= 0    node capacity
//    link_ub_<i>_<n>: x_i_0_n + ... - nu_i z_i_n <= 0      z on when hosted
//    link_lb_<i>_<n>: z_i_n - x_i_0_n - ... <= 0           z off when absent
//    aff_<i>_<j>_<n>: x_j_0_n + ... + (nu_j - a_ij) z_i_n <= nu_j
//   Binary
//    <every variable, one per line>
//   End
//
// Zero coefficients are omitted; coefficient 1 is written without a number.
std::string export_ilp(const Instance& instance, std::int32_t n_nodes);
void write_ilp(std::ostream& out, const Instance& instance, std::int32_t n_nodes);

struct ModelCheck {
  bool structural_error = false;
  std::vector<std::string> violated_rows;  // row names
  std::vector<std::string> messages;

  bool ok() const { return !structural_error && violated_rows.empty(); }
};

// Evaluates a model text against up to 64 solutions in one streaming pass.
// Each solution maps onto x/y/z values (replicas of an application fill its
// nodes in node order) and every row is evaluated in exact integer
// arithmetic. Memory stays proportional to the solutions, not the model, so
// multi-gigabyte models can be checked as they are produced.
class ModelChecker {
 public:
  static constexpr std::size_t kMaxSolutions = 64;

  // The solutions must outlive the checker.
  explicit ModelChecker(std::span<const Solution> solutions);
  ~ModelChecker();

  // One line of model text, without its newline.
  void consume(std::string_view line);
  // One result per solution, in input order.
  std::vector<ModelCheck> finish();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

ModelCheck check_assignment_against_model(const std::string& model, const Solution& solution);

// Writes the model for `n_nodes` and checks every solution against it while
// the text is produced, without holding the text in memory.
std::vector<ModelCheck> check_against_export(const Instance& instance, std::int32_t n_nodes,
                                             std::span<const Solution> solutions);

}  // namespace affprov

#endif  // AFFPROV_BOUNDS_H_
