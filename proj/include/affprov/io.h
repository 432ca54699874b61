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

// Instance and solution file formats.
//
// Instance JSON:
//   { "name", "d", "T", "capacity": [ints], "seed",
//     "apps": [{ "id", "replicas", "demand": [ints, length d*T] }],
//     "affinities": [{ "from", "to", "limit" }] }
// Optional "density" records the generator's target.
//
// Solution JSON:
//   { "algorithm", "nodes_used", "failed", "wall_time_ms",
//     "assignment": [{ "app", "node", "count" }] }
//
// CSV import: apps.csv with header app_id,replicas,dim_0,...,dim_{d'-1} and
// affinity.csv with header from,to,limit. Headers must match exactly.

#ifndef AFFPROV_IO_H_
#define AFFPROV_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "affprov/model.h"

namespace affprov {

std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);

std::string solution_to_json(const Solution& solution);
Solution solution_from_json(const std::string& text, std::size_t num_apps);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const Instance& instance);
Solution read_solution(const std::filesystem::path& path, std::size_t num_apps);
void write_solution(const std::filesystem::path& path, const Solution& solution);

struct CsvImportOptions {
  std::string name = "imported";
  std::int32_t resource_types = 2;
  std::int32_t epochs = 1;
  // Capacity per resource type (length d); replicated across epochs.
  ResourceVector type_capacity;
};

Instance import_csv(std::istream& apps_csv, std::istream& affinity_csv,
                    const CsvImportOptions& options);
Instance import_csv(const std::filesystem::path& apps_csv,
                    const std::filesystem::path& affinity_csv,
                    const CsvImportOptions& options);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace affprov

#endif  // AFFPROV_IO_H_
