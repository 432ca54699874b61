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

// affprov command-line front end.
//
// Exit codes: 0 success, 2 invalid input or failed verification, 3 usage
// error. Every failure prints one line "error: <message>" on stderr.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "affprov/algorithms.h"
#include "affprov/bench.h"
#include "affprov/bounds.h"
#include "affprov/generator.h"
#include "affprov/io.h"
#include "affprov/placement.h"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitUsage = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

affprov::AlgoConfig parse_token(const std::string& token) {
  try {
    return affprov::AlgoConfig::parse(token);
  } catch (const affprov::InputError& e) {
    throw UsageError(e.what());
  }
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    affprov::write_file(out_path, text);
  }
}

std::string one_line(std::string text) {
  for (char& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affinity-aware replica provisioning: solvers, oracles and benchmarks"};
  app.require_subcommand(1);

  // generate
  std::string gen_profile;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  std::int32_t gen_apps = -1;
  double gen_density = -1.0;
  std::string gen_graph;
  std::int32_t gen_epochs = 0;
  bool gen_print_profile = false;
  auto* generate = app.add_subcommand("generate", "Generate an instance from a profile");
  generate->add_option("--profile", gen_profile, "Profile JSON (default: built-in reference)");
  generate->add_option("--seed", gen_seed, "Random seed")->required();
  generate->add_option("--out", gen_out, "Output instance JSON (default: stdout)");
  generate->add_option("--apps", gen_apps, "Override the number of applications");
  generate->add_option("--density", gen_density, "Override the affinity density");
  generate->add_option("--graph", gen_graph, "Override the graph class")
      ->check(CLI::IsMember({"arbitrary", "threshold", "normal"}));
  generate->add_option("--epochs", gen_epochs, "Override the number of epochs");
  generate->add_flag("--print-profile", gen_print_profile,
                     "Print the effective profile instead of generating");

  // solve
  std::string solve_algo;
  std::string solve_instance;
  std::string solve_out;
  std::int32_t solve_nodes = -1;
  auto* solve = app.add_subcommand("solve", "Run one algorithm on an instance");
  solve->add_option("--algo", solve_algo, "Algorithm token")->required();
  solve->add_option("--nodes", solve_nodes,
                    "Single fixed-pool run with this many nodes (spread/match only)");
  solve->add_option("--out", solve_out, "Output solution JSON (default: stdout)");
  solve->add_option("instance", solve_instance, "Instance JSON")->required();

  // verify
  std::string verify_instance;
  std::string verify_solution_path;
  auto* verify = app.add_subcommand("verify", "Check a solution against an instance");
  verify->add_option("instance", verify_instance, "Instance JSON")->required();
  verify->add_option("solution", verify_solution_path, "Solution JSON")->required();

  // lb
  std::string lb_instance;
  auto* lb = app.add_subcommand("lb", "Print the resource lower bound");
  lb->add_option("instance", lb_instance, "Instance JSON")->required();

  // export-ilp
  std::string ilp_instance;
  std::string ilp_out;
  std::int32_t ilp_nodes = -1;
  auto* export_ilp = app.add_subcommand("export-ilp", "Write the integer model in LP format");
  export_ilp->add_option("instance", ilp_instance, "Instance JSON")->required();
  export_ilp->add_option("--nodes", ilp_nodes, "Candidate nodes (default: First Fit count)");
  export_ilp->add_option("--out", ilp_out, "Output model (default: stdout)");

  // check-model
  std::string cm_model;
  std::string cm_instance;
  std::string cm_solution;
  auto* check_model =
      app.add_subcommand("check-model", "Evaluate a solution against an exported model");
  check_model->add_option("model", cm_model, "Model file from export-ilp")->required();
  check_model->add_option("instance", cm_instance, "Instance JSON")->required();
  check_model->add_option("solution", cm_solution, "Solution JSON")->required();

  // oracle
  std::string oracle_instance;
  std::string oracle_out;
  std::int64_t oracle_limit = affprov::kDefaultOracleLimit;
  auto* oracle = app.add_subcommand("oracle", "Exact minimum by exhaustive search");
  oracle->add_option("instance", oracle_instance, "Instance JSON")->required();
  oracle->add_option("--limit", oracle_limit, "Maximum total replicas accepted");
  oracle->add_option("--out", oracle_out, "Output solution JSON (default: stdout)");

  // import-csv
  std::string csv_apps;
  std::string csv_affinity;
  std::string csv_out;
  affprov::CsvImportOptions csv_options;
  auto* import_csv = app.add_subcommand("import-csv", "Build an instance from CSV tables");
  import_csv->add_option("apps", csv_apps, "apps.csv")->required();
  import_csv->add_option("affinity", csv_affinity, "affinity.csv")->required();
  import_csv->add_option("--name", csv_options.name, "Instance name");
  import_csv->add_option("--types", csv_options.resource_types, "Resource types d");
  import_csv->add_option("--epochs", csv_options.epochs, "Epochs T");
  import_csv->add_option("--capacity", csv_options.type_capacity,
                         "Capacity per resource type")
      ->required();
  import_csv->add_option("--out", csv_out, "Output instance JSON (default: stdout)");

  // bench
  std::vector<std::string> bench_instances;
  std::vector<std::string> bench_algos;
  std::string bench_out;
  std::string bench_summary;
  int bench_threads = 1;
  bool bench_no_time = false;
  auto* bench = app.add_subcommand("bench", "Run algorithms over instances and report CSV");
  bench->add_option("--algos", bench_algos, "Algorithm tokens")->required()->delimiter(',');
  bench->add_option("--threads", bench_threads, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--out", bench_out, "Row CSV (default: stdout)");
  bench->add_option("--summary", bench_summary, "Summary CSV");
  bench->add_flag("--no-time", bench_no_time, "Leave time_ms empty for reproducible output");
  bench->add_option("instances", bench_instances, "Instance JSON files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", one_line(e.what()).c_str());
    return kExitUsage;
  }

  try {
    if (generate->parsed()) {
      affprov::GenProfile profile = gen_profile.empty()
                                        ? affprov::GenProfile::reference()
                                        : affprov::profile_from_json(affprov::read_file(gen_profile));
      profile.seed = gen_seed;
      if (gen_apps >= 0) profile.num_apps = gen_apps;
      if (gen_density >= 0) profile.density = gen_density;
      if (!gen_graph.empty()) profile.graph_class = affprov::parse_graph_class(gen_graph);
      if (gen_epochs > 0) profile.epochs = gen_epochs;
      if (gen_print_profile) {
        profile.check();
        emit(gen_out, affprov::profile_to_json(profile));
      } else {
        emit(gen_out, affprov::instance_to_json(affprov::gen_instance(profile)));
      }
    } else if (solve->parsed()) {
      affprov::AlgoConfig config = parse_token(solve_algo);
      const affprov::Instance instance = affprov::read_instance(solve_instance);
      affprov::Solution solution;
      if (solve_nodes >= 0) {
        if (!config.multi_node()) {
          throw UsageError("--nodes applies to spreadwf, spreadwfd and match tokens only");
        }
        const affprov::Problem problem(instance);
        const auto start = std::chrono::steady_clock::now();
        solution = config.family == affprov::Family::kMatching
                       ? affprov::solve_matching(problem, solve_nodes, config)
                       : affprov::solve_spread(problem, solve_nodes, config);
        solution.wall_time_ms = std::chrono::duration<double, std::milli>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
        solution.algorithm = config.token;
      } else {
        solution = affprov::solve(instance, config);
      }
      emit(solve_out, affprov::solution_to_json(solution));
      if (solution.failed) {
        std::fprintf(stderr, "error: %s left replicas unplaced\n", config.token.c_str());
        return kExitInvalid;
      }
    } else if (verify->parsed()) {
      const affprov::Instance instance = affprov::read_instance(verify_instance);
      const affprov::Solution solution =
          affprov::read_solution(verify_solution_path, instance.num_apps());
      const auto violations = affprov::verify_solution(instance, solution);
      for (const auto& v : violations) {
        std::fprintf(stderr, "error: %s\n", one_line(v.message).c_str());
      }
      if (!violations.empty()) return kExitInvalid;
      if (solution.failed) {
        std::fprintf(stderr, "error: solution is marked failed\n");
        return kExitInvalid;
      }
      std::printf("ok nodes=%d\n", solution.nodes_used);
    } else if (lb->parsed()) {
      const affprov::Instance instance = affprov::read_instance(lb_instance);
      affprov::require_valid(instance);
      const affprov::Bound bound = affprov::lower_bound(instance);
      std::printf("LB=%lld dim=%d\n", static_cast<long long>(bound.value),
                  bound.binding_dimension);
    } else if (export_ilp->parsed()) {
      const affprov::Instance instance = affprov::read_instance(ilp_instance);
      affprov::require_valid(instance);
      std::int32_t n = ilp_nodes;
      if (n < 0) n = affprov::solve_first_fit(affprov::Problem(instance)).nodes_used;
      emit(ilp_out, affprov::export_ilp(instance, n));
    } else if (check_model->parsed()) {
      const affprov::Instance instance = affprov::read_instance(cm_instance);
      const affprov::Solution solution = affprov::read_solution(cm_solution, instance.num_apps());
      const affprov::ModelCheck check =
          affprov::check_assignment_against_model(affprov::read_file(cm_model), solution);
      for (const auto& m : check.messages) std::fprintf(stderr, "error: %s\n", one_line(m).c_str());
      if (!check.ok()) return kExitInvalid;
      std::printf("ok rows satisfied\n");
    } else if (oracle->parsed()) {
      const affprov::Instance instance = affprov::read_instance(oracle_instance);
      affprov::Solution solution;
      try {
        solution = affprov::brute_force_opt(instance, oracle_limit);
      } catch (const affprov::LimitExceeded& e) {
        std::fprintf(stderr, "error: %s\n", one_line(e.what()).c_str());
        return kExitInvalid;
      }
      emit(oracle_out, affprov::solution_to_json(solution));
    } else if (import_csv->parsed()) {
      const affprov::Instance instance =
          affprov::import_csv(std::filesystem::path(csv_apps),
                              std::filesystem::path(csv_affinity), csv_options);
      emit(csv_out, affprov::instance_to_json(instance));
    } else if (bench->parsed()) {
      std::vector<std::string> tokens;
      for (const auto& token : bench_algos) {
        parse_token(token);
        tokens.push_back(token);
      }
      std::vector<affprov::Instance> instances;
      for (const auto& path : bench_instances) {
        try {
          instances.push_back(affprov::read_instance(path));
        } catch (const affprov::InputError& e) {
          throw affprov::InputError(path + ": " + e.what());
        }
      }
      affprov::BenchOptions options;
      options.threads = bench_threads;
      options.record_time = !bench_no_time;
      const affprov::BenchResult result = affprov::run_bench(instances, tokens, options);
      std::ostringstream rows;
      affprov::write_rows_csv(rows, result.rows, options.record_time);
      emit(bench_out, rows.str());
      if (!bench_summary.empty()) {
        std::ostringstream summary;
        affprov::write_summary_csv(summary, result.summary, options.record_time);
        emit(bench_summary, summary.str());
      }
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", one_line(e.what()).c_str());
    return kExitUsage;
  } catch (const affprov::VerificationError& e) {
    std::fprintf(stderr, "error: %s\n", one_line(e.what()).c_str());
    return kExitInvalid;
  } catch (const affprov::InputError& e) {
    std::fprintf(stderr, "error: %s\n", one_line(e.what()).c_str());
    return kExitInvalid;
  }
  return 0;
}
