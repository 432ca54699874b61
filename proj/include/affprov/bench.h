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

// Batch runs of (instance, algorithm) pairs with CSV reporting.
//
// Row CSV:     instance,algorithm,nodes,lb,deviation_pct,time_ms,seed,failed
// Summary CSV: algorithm,group,instances,failed,mean_deviation_pct,mean_time_ms
//
// Numbers are written with a dot decimal separator independent of the
// locale. deviation_pct is empty for failed rows, seed is empty when the
// instance carries none, and time_ms is empty when timing is disabled.

#ifndef AFFPROV_BENCH_H_
#define AFFPROV_BENCH_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "affprov/model.h"

namespace affprov {

inline constexpr char kBenchHeader[] =
    "instance,algorithm,nodes,lb,deviation_pct,time_ms,seed,failed";
inline constexpr char kSummaryHeader[] =
    "algorithm,group,instances,failed,mean_deviation_pct,mean_time_ms";

// A solver produced a solution that verify_solution rejects.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchRow {
  std::string instance;
  std::string algorithm;
  std::int32_t nodes = 0;
  std::int64_t lower_bound = 0;
  double deviation_pct = 0.0;
  double time_ms = 0.0;
  std::optional<std::uint64_t> seed;
  bool failed = false;
};

struct SummaryRow {
  std::string algorithm;
  std::string group;
  std::int32_t instances = 0;
  std::int32_t failed = 0;
  double mean_deviation_pct = 0.0;  // over non-failed rows
  double mean_time_ms = 0.0;
};

struct BenchOptions {
  int threads = 1;
  // Wall time varies run to run; disable it for byte-reproducible reports.
  bool record_time = true;
};

struct BenchResult {
  std::vector<BenchRow> rows;  // instance-major, then algorithm order
  std::vector<SummaryRow> summary;
};

// 100 * (nodes - lb) / lb.
double deviation_percent(std::int64_t nodes, std::int64_t lower_bound);

// Instance name without a trailing "-s<digits>" seed suffix.
std::string config_group(const std::string& instance_name);

// Every token is parsed before any work starts; InputError names the first
// bad one. Throws VerificationError when a solution fails verification.
BenchResult run_bench(const std::vector<Instance>& instances,
                      const std::vector<std::string>& tokens, const BenchOptions& options);

std::vector<SummaryRow> summarize(const std::vector<BenchRow>& rows);

// RFC 4180 field quoting.
std::string csv_field(const std::string& value);

void write_rows_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool record_time);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& summary,
                       bool record_time);

}  // namespace affprov

#endif  // AFFPROV_BENCH_H_
