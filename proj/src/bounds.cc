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

#include "affprov/bounds.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <initializer_list>
#include <map>
#include <ostream>
#include <sstream>
#include <streambuf>
#include <string_view>

namespace affprov {

Bound lower_bound(const Instance& instance) {
  Bound bound;
  for (std::size_t h = 0; h < instance.dims(); ++h) {
    std::int64_t total = 0;
    for (const auto& app : instance.apps) total += app.replicas * app.demand[h];
    const std::int64_t cap = instance.capacity[h];
    const std::int64_t nodes = (total + cap - 1) / cap;
    if (nodes > bound.value) {
      bound.value = nodes;
      bound.binding_dimension = static_cast<std::int32_t>(h);
    }
  }
  if (bound.value == 0 && instance.total_replicas() > 0) bound.value = 1;
  return bound;
}

namespace {

// Depth-first search over replica placements with a fixed node budget.
class ExhaustiveSearch {
 public:
  explicit ExhaustiveSearch(const Instance& instance) : instance_(instance) {
    for (const auto& app : instance.apps) {
      for (std::int32_t r = 0; r < app.replicas; ++r) replica_app_.push_back(app.id);
    }
  }

  // Returns per-replica node indices of the first feasible assignment within
  // `budget` nodes, or an empty vector.
  std::vector<std::int32_t> run(std::int32_t budget) {
    budget_ = budget;
    const std::size_t apps = instance_.num_apps();
    counts_.assign(static_cast<std::size_t>(budget), std::vector<std::int64_t>(apps, 0));
    load_.assign(static_cast<std::size_t>(budget),
                 std::vector<std::int64_t>(instance_.dims(), 0));
    choice_.assign(replica_app_.size(), -1);
    if (dfs(0, 0)) return choice_;
    return {};
  }

 private:
  bool fits(AppId app, std::int32_t n) const {
    const auto& demand = instance_.apps[app].demand;
    for (std::size_t h = 0; h < demand.size(); ++h) {
      if (load_[n][h] + demand[h] > instance_.capacity[h]) return false;
    }
    const auto& count = counts_[n];
    for (const Arc& arc : instance_.arcs) {
      // After adding one replica of app, every arc whose source is present
      // must bound its target's count.
      const std::int64_t src = count[arc.from] + (arc.from == app ? 1 : 0);
      const std::int64_t dst = count[arc.to] + (arc.to == app ? 1 : 0);
      if (src >= 1 && dst > arc.limit) return false;
    }
    return true;
  }

  bool dfs(std::size_t pos, std::int32_t used) {
    if (pos == replica_app_.size()) return true;
    const AppId app = replica_app_[pos];
    const std::int32_t first =
        (pos > 0 && replica_app_[pos - 1] == app) ? choice_[pos - 1] : 0;
    const std::int32_t last = std::min(used, budget_ - 1);
    for (std::int32_t n = first; n <= last; ++n) {
      if (!fits(app, n)) continue;
      const auto& demand = instance_.apps[app].demand;
      for (std::size_t h = 0; h < demand.size(); ++h) load_[n][h] += demand[h];
      ++counts_[n][app];
      choice_[pos] = n;
      if (dfs(pos + 1, std::max(used, n + 1))) return true;
      --counts_[n][app];
      for (std::size_t h = 0; h < demand.size(); ++h) load_[n][h] -= demand[h];
    }
    return false;
  }

  const Instance& instance_;
  std::vector<AppId> replica_app_;
  std::vector<std::int32_t> choice_;
  std::vector<std::vector<std::int64_t>> counts_;
  std::vector<std::vector<std::int64_t>> load_;
  std::int32_t budget_ = 0;
};

}  // namespace

Solution brute_force_opt(const Instance& instance, std::int64_t limit) {
  const std::int64_t replicas = instance.total_replicas();
  if (replicas > limit) {
    throw LimitExceeded("oracle limit exceeded: " + std::to_string(replicas) +
                        " replicas > limit " + std::to_string(limit));
  }
  require_valid(instance);
  ExhaustiveSearch search(instance);
  const auto start = static_cast<std::int32_t>(std::max<std::int64_t>(1, lower_bound(instance).value));
  for (std::int32_t budget = start; budget <= std::max<std::int64_t>(replicas, 1); ++budget) {
    auto choice = search.run(budget);
    if (choice.empty() && replicas > 0) continue;
    Solution solution;
    solution.algorithm = "oracle";
    solution.assignment.resize(instance.num_apps());
    std::int32_t used = 0;
    std::size_t pos = 0;
    for (const auto& app : instance.apps) {
      std::map<NodeId, std::int32_t> per_node;
      for (std::int32_t r = 0; r < app.replicas; ++r, ++pos) {
        ++per_node[choice[pos]];
        used = std::max(used, choice[pos] + 1);
      }
      for (const auto& [node, count] : per_node) solution.assignment[app.id].push_back({node, count});
    }
    solution.nodes_used = used;
    return solution;
  }
  throw std::logic_error("exhaustive search found no assignment for a valid instance");
}

namespace {

// Buffered LP text writer. Rows are assembled with std::to_chars so the
// output is locale independent and cheap at large node counts.
class LpWriter {
 public:
  explicit LpWriter(std::ostream& out) : out_(out) { buffer_.reserve(kFlushBytes + 4096); }
  ~LpWriter() { flush(); }

  void raw(std::string_view text) {
    buffer_.append(text);
    maybe_flush();
  }

  void number(std::int64_t value) {
    char digits[24];
    auto [end, ec] = std::to_chars(digits, digits + sizeof(digits), value);
    buffer_.append(digits, end);
  }

  // Variable name: prefix followed by "_<index>" for every index.
  void var(char prefix, std::initializer_list<std::int64_t> indices) {
    buffer_.push_back(prefix);
    for (std::int64_t index : indices) {
      buffer_.push_back('_');
      number(index);
    }
  }

  void begin_row(std::string_view family, std::initializer_list<std::int64_t> indices) {
    buffer_.push_back(' ');
    buffer_.append(family);
    for (std::int64_t index : indices) {
      buffer_.push_back('_');
      number(index);
    }
    buffer_.push_back(':');
    first_ = true;
  }

  // One linear term; zero coefficients are skipped and 1 is implicit.
  void term(std::int64_t coef, char prefix, std::initializer_list<std::int64_t> indices) {
    if (coef == 0) return;
    const bool negative = coef < 0;
    if (first_) {
      if (negative) buffer_.append(" -");
    } else {
      buffer_.append(negative ? " -" : " +");
    }
    const std::int64_t magnitude = negative ? -coef : coef;
    if (magnitude != 1) {
      buffer_.push_back(' ');
      number(magnitude);
    }
    buffer_.push_back(' ');
    var(prefix, indices);
    first_ = false;
  }

  void end_row(std::string_view op, std::int64_t rhs) {
    buffer_.push_back(' ');
    buffer_.append(op);
    buffer_.push_back(' ');
    number(rhs);
    buffer_.push_back('\n');
    maybe_flush();
  }

  void declare(char prefix, std::initializer_list<std::int64_t> indices) {
    buffer_.push_back(' ');
    var(prefix, indices);
    buffer_.push_back('\n');
    maybe_flush();
  }

  void flush() {
    out_.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
    buffer_.clear();
  }

 private:
  static constexpr std::size_t kFlushBytes = 1 << 20;
  void maybe_flush() {
    if (buffer_.size() >= kFlushBytes) flush();
  }

  std::ostream& out_;
  std::string buffer_;
  bool first_ = true;
};

}  // namespace

void write_ilp(std::ostream& out, const Instance& instance, std::int32_t n_nodes) {
  require_valid(instance);
  if (n_nodes < 1) throw InputError("export needs at least one candidate node");
  const std::size_t num_apps = instance.num_apps();
  std::vector<std::int32_t> nu(num_apps);
  for (std::size_t i = 0; i < num_apps; ++i) {
    nu[i] = max_replicas_per_node(instance, static_cast<AppId>(i));
  }
  auto replicas = [&instance](std::size_t i) { return instance.apps[i].replicas; };

  LpWriter w(out);
  w.raw("\\ affprov provisioning model: ");
  w.raw(instance.name);
  w.raw(", ");
  w.number(n_nodes);
  w.raw(" candidate nodes\nMinimize\n obj:");
  for (std::int32_t n = 0; n < n_nodes; ++n) w.term(1, 'y', {n});
  w.raw("\nSubject To\n");

  for (std::size_t i = 0; i < num_apps; ++i) {
    const auto a = static_cast<std::int64_t>(i);
    for (std::int32_t r = 0; r < replicas(i); ++r) {
      w.begin_row("assign", {a, r});
      for (std::int32_t n = 0; n < n_nodes; ++n) w.term(1, 'x', {a, r, n});
      w.end_row("=", 1);
    }
  }
  for (std::int32_t n = 0; n < n_nodes; ++n) {
    for (std::size_t h = 0; h < instance.dims(); ++h) {
      w.begin_row("cap", {n, static_cast<std::int64_t>(h)});
      for (std::size_t i = 0; i < num_apps; ++i) {
        const auto a = static_cast<std::int64_t>(i);
        for (std::int32_t r = 0; r < replicas(i); ++r) w.term(instance.apps[i].demand[h], 'x', {a, r, n});
      }
      w.term(-instance.capacity[h], 'y', {n});
      w.end_row("<=", 0);
    }
  }
  for (std::size_t i = 0; i < num_apps; ++i) {
    const auto a = static_cast<std::int64_t>(i);
    for (std::int32_t n = 0; n < n_nodes; ++n) {
      w.begin_row("link_ub", {a, n});
      for (std::int32_t r = 0; r < replicas(i); ++r) w.term(1, 'x', {a, r, n});
      w.term(-nu[i], 'z', {a, n});
      w.end_row("<=", 0);
    }
  }
  for (std::size_t i = 0; i < num_apps; ++i) {
    const auto a = static_cast<std::int64_t>(i);
    for (std::int32_t n = 0; n < n_nodes; ++n) {
      w.begin_row("link_lb", {a, n});
      w.term(1, 'z', {a, n});
      for (std::int32_t r = 0; r < replicas(i); ++r) w.term(-1, 'x', {a, r, n});
      w.end_row("<=", 0);
    }
  }
  for (const Arc& arc : instance.arcs) {
    for (std::int32_t n = 0; n < n_nodes; ++n) {
      w.begin_row("aff", {arc.from, arc.to, n});
      for (std::int32_t r = 0; r < replicas(arc.to); ++r) w.term(1, 'x', {arc.to, r, n});
      w.term(nu[arc.to] - arc.limit, 'z', {arc.from, n});
      w.end_row("<=", nu[arc.to]);
    }
  }

  w.raw("Binary\n");
  for (std::size_t i = 0; i < num_apps; ++i) {
    const auto a = static_cast<std::int64_t>(i);
    for (std::int32_t r = 0; r < replicas(i); ++r) {
      for (std::int32_t n = 0; n < n_nodes; ++n) w.declare('x', {a, r, n});
    }
  }
  for (std::int32_t n = 0; n < n_nodes; ++n) w.declare('y', {n});
  for (std::size_t i = 0; i < num_apps; ++i) {
    for (std::int32_t n = 0; n < n_nodes; ++n) w.declare('z', {static_cast<std::int64_t>(i), n});
  }
  w.raw("End\n");
}

std::string export_ilp(const Instance& instance, std::int32_t n_nodes) {
  std::ostringstream out;
  write_ilp(out, instance, n_nodes);
  return out.str();
}

namespace {

using Mask = std::uint64_t;

struct NodeMask {
  std::int64_t node;
  Mask mask;
};

// Sorts by node and merges entries for the same node.
void compact(std::vector<NodeMask>& list) {
  std::sort(list.begin(), list.end(),
            [](const NodeMask& a, const NodeMask& b) { return a.node < b.node; });
  std::size_t out = 0;
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (out > 0 && list[out - 1].node == list[k].node) {
      list[out - 1].mask |= list[k].mask;
    } else {
      list[out++] = list[k];
    }
  }
  list.resize(out);
}

Mask lookup(const std::vector<NodeMask>& list, std::int64_t node) {
  auto it = std::lower_bound(list.begin(), list.end(), node,
                             [](const NodeMask& e, std::int64_t n) { return e.node < n; });
  return it != list.end() && it->node == node ? it->mask : 0;
}

bool parse_int(std::string_view text, std::int64_t& value) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end && !text.empty();
}

// Splits "x_1_2_3" into kind 'x' and indices {1, 2, 3}. Returns the number of
// indices, or -1 when the name is malformed.
int parse_var(std::string_view name, char& kind, std::int64_t (&idx)[3]) {
  if (name.size() < 3 || name[1] != '_') return -1;
  kind = name[0];
  int count = 0;
  std::size_t pos = 2;
  while (pos <= name.size()) {
    std::size_t next = name.find('_', pos);
    if (next == std::string_view::npos) next = name.size();
    if (count == 3 || !parse_int(name.substr(pos, next - pos), idx[count])) return -1;
    ++count;
    pos = next + 1;
  }
  return count;
}

int expected_indices(char kind) {
  switch (kind) {
    case 'x': return 3;
    case 'y': return 1;
    case 'z': return 2;
    default: return -1;
  }
}

void grow_max(std::vector<std::int64_t>& v, std::int64_t at, std::int64_t value) {
  if (at < 0) return;
  if (static_cast<std::size_t>(at) >= v.size()) v.resize(static_cast<std::size_t>(at) + 1, 0);
  v[static_cast<std::size_t>(at)] = std::max(v[static_cast<std::size_t>(at)], value);
}

}  // namespace

struct ModelChecker::State {
  enum class Section { kNone, kObjective, kConstraints, kBinary, kEnd };

  std::span<const Solution> solutions;
  std::vector<ModelCheck> results;
  Section section = Section::kNone;
  bool broken = false;  // a malformed line stops evaluation

  // Variable values, as bit masks over the solutions.
  std::vector<std::vector<std::vector<NodeMask>>> x;  // [app][replica]
  std::vector<std::vector<NodeMask>> z;               // [app]
  std::vector<Mask> y;                                // [node]
  std::vector<std::vector<std::int64_t>> placed;      // [solution][app]
  std::vector<std::int64_t> max_node;                 // [solution]

  // Declared variables.
  std::int64_t x_declared = 0;
  std::int64_t y_declared = 0;
  std::int64_t z_declared = 0;
  std::int64_t y_max = -1;
  std::vector<std::int64_t> x_slots;  // replicas per app
  std::int64_t x_node_max = -1;
  std::int64_t z_app_max = -1;
  std::int64_t z_node_max = -1;

  // Variables referenced by rows.
  std::vector<std::int64_t> ref_x_slots;
  std::int64_t ref_node_max = -1;
  std::int64_t ref_z_app_max = -1;

  // Per-row accumulation.
  std::vector<std::int64_t> lhs;
  std::vector<std::size_t> touched;
  Mask touched_mask = 0;

  void structural_all(const std::string& message) {
    for (auto& r : results) {
      r.structural_error = true;
      r.messages.push_back(message);
    }
  }
  void structural(std::size_t k, const std::string& message) {
    results[k].structural_error = true;
    results[k].messages.push_back(message);
  }

  Mask value(char kind, const std::int64_t (&idx)[3]) const {
    switch (kind) {
      case 'x':
        if (idx[0] < 0 || static_cast<std::size_t>(idx[0]) >= x.size()) return 0;
        if (idx[1] < 0 || static_cast<std::size_t>(idx[1]) >= x[idx[0]].size()) return 0;
        return lookup(x[idx[0]][idx[1]], idx[2]);
      case 'y':
        return idx[0] >= 0 && static_cast<std::size_t>(idx[0]) < y.size() ? y[idx[0]] : 0;
      case 'z':
        if (idx[0] < 0 || static_cast<std::size_t>(idx[0]) >= z.size()) return 0;
        return lookup(z[idx[0]], idx[1]);
    }
    return 0;
  }

  void reference(char kind, const std::int64_t (&idx)[3]) {
    if (kind == 'x') {
      grow_max(ref_x_slots, idx[0], idx[1] + 1);
      ref_node_max = std::max(ref_node_max, idx[2]);
    } else if (kind == 'y') {
      ref_node_max = std::max(ref_node_max, idx[0]);
    } else {
      ref_z_app_max = std::max(ref_z_app_max, idx[0]);
      ref_node_max = std::max(ref_node_max, idx[1]);
    }
  }

  void row(std::string_view line);
  void declaration(std::string_view line);
};

ModelChecker::ModelChecker(std::span<const Solution> solutions) : state_(std::make_unique<State>()) {
  if (solutions.size() > kMaxSolutions) {
    throw std::invalid_argument("ModelChecker takes at most 64 solutions per pass");
  }
  State& s = *state_;
  s.solutions = solutions;
  s.results.resize(solutions.size());
  s.lhs.assign(solutions.size(), 0);
  s.placed.resize(solutions.size());
  s.max_node.assign(solutions.size(), -1);
  for (std::size_t k = 0; k < solutions.size(); ++k) {
    const Solution& sol = solutions[k];
    const Mask bit = Mask{1} << k;
    if (sol.assignment.size() > s.x.size()) {
      s.x.resize(sol.assignment.size());
      s.z.resize(sol.assignment.size());
    }
    s.placed[k].assign(sol.assignment.size(), 0);
    for (std::size_t i = 0; i < sol.assignment.size(); ++i) {
      std::int64_t next_replica = 0;
      for (const NodeCount& nc : sol.assignment[i]) {
        if (nc.node < 0 || nc.count <= 0) {
          s.structural(k, "app " + std::to_string(i) + " has entry (node " +
                              std::to_string(nc.node) + ", count " + std::to_string(nc.count) +
                              ") that maps to no variable");
          continue;
        }
        s.max_node[k] = std::max<std::int64_t>(s.max_node[k], nc.node);
        if (static_cast<std::size_t>(nc.node) >= s.y.size()) s.y.resize(nc.node + 1, 0);
        s.y[nc.node] |= bit;
        s.z[i].push_back({nc.node, bit});
        // Replicas of an application fill its nodes in node order.
        for (std::int32_t c = 0; c < nc.count; ++c, ++next_replica) {
          if (static_cast<std::size_t>(next_replica) >= s.x[i].size()) s.x[i].emplace_back();
          s.x[i][next_replica].push_back({nc.node, bit});
        }
      }
      s.placed[k][i] = next_replica;
    }
  }
  for (auto& app : s.x) {
    for (auto& list : app) compact(list);
  }
  for (auto& list : s.z) compact(list);
}

ModelChecker::~ModelChecker() = default;

void ModelChecker::State::row(std::string_view line) {
  // " name: [-] [coef] var [+|-] [coef] var ... op rhs"
  std::size_t pos = line.find_first_not_of(' ');
  const std::size_t colon = line.find(':');
  if (pos == std::string_view::npos || colon == std::string_view::npos || colon < pos) {
    structural_all("row without name: " + std::string(line));
    broken = true;
    return;
  }
  const std::string_view name = line.substr(pos, colon - pos);
  pos = colon + 1;
  std::int64_t sign = 1;
  std::int64_t coef = 1;
  bool have_coef = false;
  std::string_view op;
  std::int64_t rhs = 0;
  bool done = false;
  while (pos < line.size()) {
    if (line[pos] == ' ') {
      ++pos;
      continue;
    }
    std::size_t end = line.find(' ', pos);
    if (end == std::string_view::npos) end = line.size();
    const std::string_view token = line.substr(pos, end - pos);
    pos = end;
    if (!op.empty()) {
      if (done || !parse_int(token, rhs)) {
        structural_all("bad right-hand side in row " + std::string(name));
        broken = true;
        return;
      }
      done = true;
    } else if (token == "+" || token == "-") {
      sign = token == "-" ? -1 : 1;
    } else if (token == "<=" || token == ">=" || token == "=") {
      op = token;
    } else if (std::int64_t number = 0; parse_int(token, number)) {
      coef = number;
      have_coef = true;
    } else {
      char kind = 0;
      std::int64_t idx[3] = {0, 0, 0};
      const int count = parse_var(token, kind, idx);
      if (count < 0 || count != expected_indices(kind)) {
        structural_all("row " + std::string(name) + " references malformed variable " +
                       std::string(token));
        broken = true;
        return;
      }
      reference(kind, idx);
      const std::int64_t c = sign * (have_coef ? coef : 1);
      for (Mask m = value(kind, idx); m != 0; m &= m - 1) {
        const auto k = static_cast<std::size_t>(std::countr_zero(m));
        if (!(touched_mask >> k & 1)) {
          touched_mask |= Mask{1} << k;
          touched.push_back(k);
        }
        lhs[k] += c;
      }
      sign = 1;
      coef = 1;
      have_coef = false;
    }
  }
  if (!done) {
    structural_all("row " + std::string(name) + " has no relation");
    broken = true;
    return;
  }
  auto holds = [op, rhs](std::int64_t v) {
    return op == "<=" ? v <= rhs : op == ">=" ? v >= rhs : v == rhs;
  };
  auto fail = [&](std::size_t k, std::int64_t v) {
    results[k].violated_rows.emplace_back(name);
    results[k].messages.push_back("row " + std::string(name) + ": " + std::to_string(v) + " " +
                                  std::string(op) + " " + std::to_string(rhs) + " fails");
  };
  if (!holds(0)) {
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (!(touched_mask >> k & 1)) fail(k, 0);
    }
  }
  for (std::size_t k : touched) {
    if (!holds(lhs[k])) fail(k, lhs[k]);
    lhs[k] = 0;
  }
  touched.clear();
  touched_mask = 0;
}

void ModelChecker::State::declaration(std::string_view line) {
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ') {
      ++pos;
      continue;
    }
    std::size_t end = line.find(' ', pos);
    if (end == std::string_view::npos) end = line.size();
    const std::string_view token = line.substr(pos, end - pos);
    pos = end;
    char kind = 0;
    std::int64_t idx[3] = {0, 0, 0};
    const int count = parse_var(token, kind, idx);
    if (count < 0 || count != expected_indices(kind)) {
      structural_all("malformed binary declaration " + std::string(token));
      broken = true;
      return;
    }
    if (kind == 'x') {
      ++x_declared;
      grow_max(x_slots, idx[0], idx[1] + 1);
      x_node_max = std::max(x_node_max, idx[2]);
    } else if (kind == 'y') {
      ++y_declared;
      y_max = std::max(y_max, idx[0]);
    } else {
      ++z_declared;
      z_app_max = std::max(z_app_max, idx[0]);
      z_node_max = std::max(z_node_max, idx[1]);
    }
  }
}

void ModelChecker::consume(std::string_view line) {
  State& s = *state_;
  if (s.broken) return;
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty() || line[0] == '\\') return;
  using Section = State::Section;
  if (line == "Minimize") { s.section = Section::kObjective; return; }
  if (line == "Subject To") { s.section = Section::kConstraints; return; }
  if (line == "Binary") { s.section = Section::kBinary; return; }
  if (line == "End") { s.section = Section::kEnd; return; }
  if (s.section == Section::kConstraints) {
    s.row(line);
  } else if (s.section == Section::kBinary) {
    s.declaration(line);
  } else if (s.section != Section::kObjective) {
    s.structural_all("unexpected line outside any section: " + std::string(line.substr(0, 80)));
    s.broken = true;
  }
}

std::vector<ModelCheck> ModelChecker::finish() {
  State& s = *state_;
  if (s.broken) return std::move(s.results);
  if (s.section != State::Section::kEnd) s.structural_all("model is missing its End marker");

  // The declarations must form complete x/y/z grids over the model's nodes,
  // and rows may only reference declared variables.
  const std::int64_t model_nodes = s.y_max + 1;
  std::int64_t x_expected = 0;
  for (std::int64_t slots : s.x_slots) x_expected += slots * model_nodes;
  if (s.y_declared != model_nodes || s.x_declared != x_expected ||
      s.z_declared != (s.z_app_max + 1) * model_nodes || s.x_node_max >= model_nodes ||
      s.z_node_max >= model_nodes) {
    s.structural_all("binary declarations do not form complete variable grids over " +
                     std::to_string(model_nodes) + " nodes");
  }
  bool undeclared = s.ref_node_max >= model_nodes || s.ref_z_app_max > s.z_app_max ||
                    s.ref_x_slots.size() > s.x_slots.size();
  for (std::size_t i = 0; i < s.ref_x_slots.size() && !undeclared; ++i) {
    undeclared = s.ref_x_slots[i] > s.x_slots[i];
  }
  if (undeclared) s.structural_all("rows reference undeclared variables");

  for (std::size_t k = 0; k < s.results.size(); ++k) {
    const Solution& sol = s.solutions[k];
    if (sol.nodes_used > model_nodes || s.max_node[k] >= model_nodes) {
      s.structural(k, "solution uses " +
                          std::to_string(std::max<std::int64_t>(sol.nodes_used, s.max_node[k] + 1)) +
                          " nodes, model has " + std::to_string(model_nodes));
    }
    for (std::size_t i = 0; i < s.placed[k].size(); ++i) {
      const std::int64_t slots = i < s.x_slots.size() ? s.x_slots[i] : 0;
      if (s.placed[k][i] > slots) {
        s.structural(k, "app " + std::to_string(i) + " places " + std::to_string(s.placed[k][i]) +
                            " replicas, model declares " + std::to_string(slots));
      }
    }
  }
  return std::move(s.results);
}

namespace {

// Output sink that hands complete lines to a checker as they are written.
class LineSink : public std::streambuf {
 public:
  explicit LineSink(ModelChecker& checker) : checker_(checker) {}

  void finish() {
    if (!pending_.empty()) checker_.consume(pending_);
    pending_.clear();
  }

 protected:
  std::streamsize xsputn(const char* data, std::streamsize count) override {
    std::string_view text(data, static_cast<std::size_t>(count));
    while (!text.empty()) {
      const std::size_t nl = text.find('\n');
      if (nl == std::string_view::npos) {
        pending_.append(text);
        break;
      }
      if (pending_.empty()) {
        checker_.consume(text.substr(0, nl));
      } else {
        pending_.append(text.substr(0, nl));
        checker_.consume(pending_);
        pending_.clear();
      }
      text.remove_prefix(nl + 1);
    }
    return count;
  }

  int_type overflow(int_type ch) override {
    if (traits_type::eq_int_type(ch, traits_type::eof())) return traits_type::not_eof(ch);
    const char c = traits_type::to_char_type(ch);
    xsputn(&c, 1);
    return ch;
  }

 private:
  ModelChecker& checker_;
  std::string pending_;
};

}  // namespace

ModelCheck check_assignment_against_model(const std::string& model, const Solution& solution) {
  ModelChecker checker(std::span<const Solution>(&solution, 1));
  std::string_view text(model);
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    checker.consume(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return checker.finish().front();
}

std::vector<ModelCheck> check_against_export(const Instance& instance, std::int32_t n_nodes,
                                             std::span<const Solution> solutions) {
  std::vector<ModelCheck> out;
  out.reserve(solutions.size());
  for (std::size_t begin = 0; begin < solutions.size(); begin += ModelChecker::kMaxSolutions) {
    const std::size_t count = std::min(ModelChecker::kMaxSolutions, solutions.size() - begin);
    ModelChecker checker(solutions.subspan(begin, count));
    LineSink sink(checker);
    std::ostream stream(&sink);
    write_ilp(stream, instance, n_nodes);
    stream.flush();
    sink.finish();
    for (ModelCheck& check : checker.finish()) out.push_back(std::move(check));
  }
  return out;
}

}  // namespace affprov
