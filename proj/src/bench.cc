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

#include "affprov/bench.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "affprov/algorithms.h"
#include "affprov/bounds.h"
#include "affprov/placement.h"

namespace affprov {
namespace {

std::string format_fixed(double value, int precision) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed,
                                 precision);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

}  // namespace

double deviation_percent(std::int64_t nodes, std::int64_t lower_bound) {
  if (lower_bound <= 0) return 0.0;
  return 100.0 * static_cast<double>(nodes - lower_bound) / static_cast<double>(lower_bound);
}

std::string config_group(const std::string& instance_name) {
  const auto pos = instance_name.rfind("-s");
  if (pos == std::string::npos || pos + 2 == instance_name.size()) return instance_name;
  const bool digits = std::all_of(instance_name.begin() + static_cast<std::ptrdiff_t>(pos) + 2,
                                  instance_name.end(), [](char c) { return c >= '0' && c <= '9'; });
  return digits ? instance_name.substr(0, pos) : instance_name;
}

BenchResult run_bench(const std::vector<Instance>& instances,
                      const std::vector<std::string>& tokens, const BenchOptions& options) {
  std::vector<AlgoConfig> configs;
  configs.reserve(tokens.size());
  for (const auto& token : tokens) configs.push_back(AlgoConfig::parse(token));

  std::vector<std::unique_ptr<Problem>> problems;
  std::vector<Bound> bounds;
  for (const auto& instance : instances) {
    try {
      problems.push_back(std::make_unique<Problem>(instance));
    } catch (const InputError& e) {
      throw InputError("instance '" + instance.name + "': " + e.what());
    }
    bounds.push_back(lower_bound(instance));
  }

  const std::size_t jobs = instances.size() * configs.size();
  std::vector<BenchRow> rows(jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::size_t error_job = jobs;
  std::mutex error_mu;

  auto worker = [&] {
    for (std::size_t job = next.fetch_add(1); job < jobs; job = next.fetch_add(1)) {
      const std::size_t inst = job / configs.size();
      const std::size_t algo = job % configs.size();
      try {
        const Instance& instance = instances[inst];
        const Solution solution = solve(*problems[inst], configs[algo]);
        const auto violations = verify_solution(instance, solution);
        if (!violations.empty()) {
          throw VerificationError("algorithm '" + tokens[algo] + "' on instance '" +
                                  instance.name + "': " + violations.front().message);
        }
        BenchRow& row = rows[job];
        row.instance = instance.name;
        row.algorithm = tokens[algo];
        row.nodes = solution.nodes_used;
        row.lower_bound = bounds[inst].value;
        row.failed = solution.failed;
        row.deviation_pct = deviation_percent(row.nodes, row.lower_bound);
        row.time_ms = options.record_time ? solution.wall_time_ms : 0.0;
        row.seed = instance.seed;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        // Report the lowest failing job so the diagnostic is reproducible.
        if (job < error_job) {
          error_job = job;
          error = std::current_exception();
        }
      }
    }
  };

  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(jobs)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  BenchResult result;
  result.rows = std::move(rows);
  result.summary = summarize(result.rows);
  return result;
}

std::vector<SummaryRow> summarize(const std::vector<BenchRow>& rows) {
  struct Acc {
    std::int32_t instances = 0;
    std::int32_t failed = 0;
    double deviation = 0.0;
    double time = 0.0;
  };
  // Keep first-appearance order of algorithms, then groups.
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::pair<std::string, std::string>, Acc> acc;
  for (const auto& row : rows) {
    auto key = std::make_pair(row.algorithm, config_group(row.instance));
    auto [it, inserted] = acc.try_emplace(key);
    if (inserted) order.push_back(key);
    Acc& a = it->second;
    ++a.instances;
    a.time += row.time_ms;
    if (row.failed) {
      ++a.failed;
    } else {
      a.deviation += row.deviation_pct;
    }
  }
  std::map<std::string, std::size_t> rank;
  for (const auto& row : rows) rank.try_emplace(row.algorithm, rank.size());
  std::stable_sort(order.begin(), order.end(), [&rank](const auto& a, const auto& b) {
    return rank.at(a.first) < rank.at(b.first);
  });

  std::vector<SummaryRow> out;
  for (const auto& key : order) {
    const Acc& a = acc.at(key);
    SummaryRow row;
    row.algorithm = key.first;
    row.group = key.second;
    row.instances = a.instances;
    row.failed = a.failed;
    const std::int32_t ok = a.instances - a.failed;
    row.mean_deviation_pct = ok > 0 ? a.deviation / ok : 0.0;
    row.mean_time_ms = a.instances > 0 ? a.time / a.instances : 0.0;
    out.push_back(std::move(row));
  }
  return out;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_rows_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool record_time) {
  out << kBenchHeader << '\n';
  for (const auto& row : rows) {
    out << csv_field(row.instance) << ',' << csv_field(row.algorithm) << ',' << row.nodes << ','
        << row.lower_bound << ',' << (row.failed ? "" : format_fixed(row.deviation_pct, 4)) << ','
        << (record_time ? format_fixed(row.time_ms, 3) : "") << ','
        << (row.seed ? std::to_string(*row.seed) : "") << ',' << (row.failed ? 1 : 0) << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& summary,
                       bool record_time) {
  out << kSummaryHeader << '\n';
  for (const auto& row : summary) {
    out << csv_field(row.algorithm) << ',' << csv_field(row.group) << ',' << row.instances << ','
        << row.failed << ',' << format_fixed(row.mean_deviation_pct, 4) << ','
        << (record_time ? format_fixed(row.mean_time_ms, 3) : "") << '\n';
  }
}

}  // namespace affprov
