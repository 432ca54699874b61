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

#include "affprov/io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace affprov {
namespace {

using nlohmann::json;

template <typename T>
T get_field(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) throw InputError(std::string("missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad field '") + key + "': " + e.what());
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    std::size_t start = cell.find_first_not_of(' ');
    cells.push_back(start == std::string::npos ? std::string() : cell.substr(start));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::int64_t parse_int(const std::string& cell, const std::string& where) {
  std::int64_t value = 0;
  const char* end = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(cell.data(), end, value);
  if (ec != std::errc() || ptr != end || cell.empty()) {
    throw InputError(where + ": not an integer: '" + cell + "'");
  }
  return value;
}

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
  json apps = json::array();
  for (const auto& app : instance.apps) {
    apps.push_back({{"id", app.id}, {"replicas", app.replicas}, {"demand", app.demand}});
  }
  json arcs = json::array();
  for (const auto& arc : instance.arcs) {
    arcs.push_back({{"from", arc.from}, {"to", arc.to}, {"limit", arc.limit}});
  }
  json doc = {{"name", instance.name},
              {"d", instance.resource_types},
              {"T", instance.epochs},
              {"capacity", instance.capacity},
              {"apps", std::move(apps)},
              {"affinities", std::move(arcs)}};
  doc["seed"] = instance.seed ? json(*instance.seed) : json(nullptr);
  if (instance.density) doc["density"] = *instance.density;
  return doc.dump() + "\n";
}

Instance instance_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("instance JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("instance JSON must be an object");
  Instance instance;
  instance.name = doc.value("name", std::string());
  instance.resource_types = get_field<std::int32_t>(doc, "d");
  instance.epochs = get_field<std::int32_t>(doc, "T");
  instance.capacity = get_field<ResourceVector>(doc, "capacity");
  for (const auto& app : get_field<json>(doc, "apps")) {
    instance.apps.push_back({get_field<AppId>(app, "id"),
                             get_field<std::int32_t>(app, "replicas"),
                             get_field<ResourceVector>(app, "demand")});
  }
  if (auto it = doc.find("affinities"); it != doc.end()) {
    for (const auto& arc : *it) {
      instance.arcs.push_back({get_field<AppId>(arc, "from"), get_field<AppId>(arc, "to"),
                               get_field<std::int32_t>(arc, "limit")});
    }
  }
  if (auto it = doc.find("seed"); it != doc.end() && !it->is_null()) {
    instance.seed = it->get<std::uint64_t>();
  }
  if (auto it = doc.find("density"); it != doc.end() && !it->is_null()) {
    instance.density = it->get<double>();
  }
  return instance;
}

std::string solution_to_json(const Solution& solution) {
  json rows = json::array();
  for (std::size_t i = 0; i < solution.assignment.size(); ++i) {
    for (const auto& nc : solution.assignment[i]) {
      rows.push_back({{"app", i}, {"node", nc.node}, {"count", nc.count}});
    }
  }
  json doc = {{"algorithm", solution.algorithm},
              {"nodes_used", solution.nodes_used},
              {"failed", solution.failed},
              {"assignment", std::move(rows)},
              {"wall_time_ms", solution.wall_time_ms}};
  return doc.dump() + "\n";
}

Solution solution_from_json(const std::string& text, std::size_t num_apps) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("solution JSON parse error: ") + e.what());
  }
  Solution solution;
  solution.algorithm = doc.value("algorithm", std::string());
  solution.nodes_used = get_field<std::int32_t>(doc, "nodes_used");
  solution.failed = doc.value("failed", false);
  solution.wall_time_ms = doc.value("wall_time_ms", 0.0);
  solution.assignment.resize(num_apps);
  for (const auto& row : get_field<json>(doc, "assignment")) {
    const auto app = get_field<std::int64_t>(row, "app");
    if (app < 0 || static_cast<std::size_t>(app) >= num_apps) {
      throw InputError("solution references unknown app " + std::to_string(app));
    }
    solution.assignment[app].push_back(
        {get_field<NodeId>(row, "node"), get_field<std::int32_t>(row, "count")});
  }
  return solution;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

Instance read_instance(const std::filesystem::path& path) {
  Instance instance = instance_from_json(read_file(path));
  if (instance.name.empty()) instance.name = path.stem().string();
  return instance;
}

void write_instance(const std::filesystem::path& path, const Instance& instance) {
  write_file(path, instance_to_json(instance));
}

Solution read_solution(const std::filesystem::path& path, std::size_t num_apps) {
  return solution_from_json(read_file(path), num_apps);
}

void write_solution(const std::filesystem::path& path, const Solution& solution) {
  write_file(path, solution_to_json(solution));
}

Instance import_csv(std::istream& apps_csv, std::istream& affinity_csv,
                    const CsvImportOptions& options) {
  if (options.resource_types < 1 || options.epochs < 1) {
    throw InputError("csv import: d and T must be positive");
  }
  if (options.type_capacity.size() != static_cast<std::size_t>(options.resource_types)) {
    throw InputError("csv import: capacity must have one entry per resource type");
  }
  Instance instance;
  instance.name = options.name;
  instance.resource_types = options.resource_types;
  instance.epochs = options.epochs;
  for (std::int32_t t = 0; t < options.epochs; ++t) {
    instance.capacity.insert(instance.capacity.end(), options.type_capacity.begin(),
                             options.type_capacity.end());
  }
  const std::size_t dims = instance.capacity.size();

  std::vector<std::string> expected = {"app_id", "replicas"};
  for (std::size_t h = 0; h < dims; ++h) expected.push_back("dim_" + std::to_string(h));

  std::string line;
  if (!next_data_line(apps_csv, line)) throw InputError("apps.csv: empty file");
  if (split_csv_line(line) != expected) {
    throw InputError("apps.csv: header must be exactly app_id,replicas,dim_0..dim_" +
                     std::to_string(dims - 1));
  }
  std::size_t line_no = 1;
  while (next_data_line(apps_csv, line)) {
    ++line_no;
    const std::string where = "apps.csv line " + std::to_string(line_no);
    auto cells = split_csv_line(line);
    if (cells.size() != expected.size()) throw InputError(where + ": wrong column count");
    Application app;
    app.id = static_cast<AppId>(parse_int(cells[0], where));
    app.replicas = static_cast<std::int32_t>(parse_int(cells[1], where));
    for (std::size_t h = 0; h < dims; ++h) app.demand.push_back(parse_int(cells[2 + h], where));
    instance.apps.push_back(std::move(app));
  }

  const std::vector<std::string> arc_header = {"from", "to", "limit"};
  if (next_data_line(affinity_csv, line)) {
    if (split_csv_line(line) != arc_header) {
      throw InputError("affinity.csv: header must be exactly from,to,limit");
    }
    line_no = 1;
    while (next_data_line(affinity_csv, line)) {
      ++line_no;
      const std::string where = "affinity.csv line " + std::to_string(line_no);
      auto cells = split_csv_line(line);
      if (cells.size() != 3) throw InputError(where + ": wrong column count");
      instance.arcs.push_back({static_cast<AppId>(parse_int(cells[0], where)),
                               static_cast<AppId>(parse_int(cells[1], where)),
                               static_cast<std::int32_t>(parse_int(cells[2], where))});
    }
  }
  return instance;
}

Instance import_csv(const std::filesystem::path& apps_csv,
                    const std::filesystem::path& affinity_csv,
                    const CsvImportOptions& options) {
  std::ifstream apps(apps_csv);
  if (!apps) throw InputError("cannot open '" + apps_csv.string() + "'");
  std::ifstream arcs(affinity_csv);
  if (!arcs) throw InputError("cannot open '" + affinity_csv.string() + "'");
  return import_csv(apps, arcs, options);
}

}  // namespace affprov
