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

#include "affprov/algorithms.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "affprov/bounds.h"
#include "affprov/placement.h"

namespace affprov {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string join(std::span<const std::string_view> parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

SearchStrategy parse_search(std::string_view token) {
  SearchStrategy search;
  if (token == "binsearch") {
    search.kind = SearchStrategy::Kind::kBinary;
    return search;
  }
  if (token.substr(0, 4) == "decr" && token.size() > 4) {
    std::string number(token.substr(4));
    char* end = nullptr;
    const double percent = std::strtod(number.c_str(), &end);
    if (end == number.c_str() + number.size() && percent > 0 && std::isfinite(percent)) {
      search.kind = SearchStrategy::Kind::kDecrement;
      search.step_percent = percent;
      return search;
    }
  }
  throw InputError("unknown search strategy '" + std::string(token) + "'");
}

void normalized_residual(const Instance& instance, const NodeState& node,
                         std::vector<double>& out) {
  out.resize(instance.dims());
  const auto& residual = node.residual();
  for (std::size_t h = 0; h < out.size(); ++h) {
    out[h] = static_cast<double>(residual[h]) / static_cast<double>(instance.capacity[h]);
  }
}

std::vector<double> normalized_pool(const Instance& instance, const PlacementState& state) {
  std::vector<double> pool(instance.dims());
  for (std::size_t h = 0; h < pool.size(); ++h) {
    pool[h] = static_cast<double>(state.pool_residual()[h]) /
              static_cast<double>(instance.capacity[h]);
  }
  return pool;
}

std::vector<AppId> ordered_apps(const Problem& problem, AppOrder order, const Measure& measure) {
  std::vector<AppId> ids(problem.instance().num_apps());
  std::iota(ids.begin(), ids.end(), 0);
  if (order == AppOrder::kDecreasingMeasure) {
    const auto sizes = app_sizes(problem.view(), problem.graph(), measure);
    std::stable_sort(ids.begin(), ids.end(),
                     [&sizes](AppId a, AppId b) { return sizes[a] > sizes[b]; });
  }
  return ids;
}

NodeId first_feasible(const PlacementState& state, AppId app) {
  for (std::size_t n = 0; n < state.node_count(); ++n) {
    if (state.can_place(app, static_cast<NodeId>(n))) return static_cast<NodeId>(n);
  }
  return -1;
}

// Feasible node with the largest (or smallest) residual measure; ties go to
// the lower index. Feasibility is only checked for nodes that would improve
// the incumbent.
NodeId best_by_measure(const PlacementState& state, AppId app, const Measure& measure,
                       bool largest, std::vector<double>& row) {
  const Instance& instance = state.instance();
  const PoolStats pool(instance.capacity, state.pool_residual(), state.node_count());
  const NodeMeasure evaluate(pool, measure);
  NodeId best = -1;
  double best_value = 0.0;
  for (std::size_t n = 0; n < state.node_count(); ++n) {
    const auto node = static_cast<NodeId>(n);
    normalized_residual(instance, state.node(node), row);
    const double value = evaluate(row);
    const bool improves = best < 0 || (largest ? value > best_value : value < best_value);
    if (improves && state.can_place(app, node)) {
      best = node;
      best_value = value;
    }
  }
  return best;
}

NodeId select_node(const PlacementState& state, AppId app, NodeOrder order,
                   const Measure& measure, std::vector<double>& row) {
  switch (order) {
    case NodeOrder::kActivation:
      return first_feasible(state, app);
    case NodeOrder::kIncreasingMeasure:
      return best_by_measure(state, app, measure, false, row);
    case NodeOrder::kDecreasingMeasure:
      return best_by_measure(state, app, measure, true, row);
  }
  return -1;
}

// Places all replicas of `app`, max_placeable at a time, opening nodes as
// needed. Calls on_touch(n) for every node that receives replicas.
template <typename OnTouch>
void pack_application(PlacementState& state, AppId app, NodeOrder order, const Measure& measure,
                      std::vector<double>& row, OnTouch&& on_touch) {
  while (state.remaining(app) > 0) {
    NodeId node = select_node(state, app, order, measure, row);
    if (node < 0) node = state.activate_node();
    const std::int32_t k = state.max_placeable(app, node);
    if (k < 1) std::abort();  // an empty node always takes one replica of a valid app
    state.place(app, node, k);
    on_touch(node);
  }
}

std::string label_of(const AlgoConfig& config, const char* fallback) {
  return config.token.empty() ? std::string(fallback) : config.token;
}

}  // namespace

AlgoConfig AlgoConfig::parse(std::string_view token) {
  AlgoConfig config;
  config.token = std::string(token);
  const auto parts = split(token, ':');
  const std::string_view head = parts.front();
  const std::span<const std::string_view> tail(parts.data() + 1, parts.size() - 1);
  auto fail = [&token]() -> AlgoConfig {
    throw InputError("unknown algorithm token '" + std::string(token) + "'");
  };

  if (parts.size() == 1) {
    if (head == "ff") return config;
    if (head == "medea-tp") {
      config.family = Family::kMedeaTP;
      return config;
    }
    if (head == "medea-nc") {
      config.family = Family::kMedeaNC;
      return config;
    }
    if (head == "lrasched-fitness") {
      config.family = Family::kLraSchedFitness;
      config.score = ScoreKind::kFitness;
      return config;
    }
    return fail();
  }

  struct Fit {
    std::string_view name;
    AppOrder apps;
    NodeOrder nodes;
  };
  static constexpr Fit kFits[] = {
      {"ffd", AppOrder::kDecreasingMeasure, NodeOrder::kActivation},
      {"bf", AppOrder::kInput, NodeOrder::kIncreasingMeasure},
      {"bfd", AppOrder::kDecreasingMeasure, NodeOrder::kIncreasingMeasure},
      {"wf", AppOrder::kInput, NodeOrder::kDecreasingMeasure},
      {"wfd", AppOrder::kDecreasingMeasure, NodeOrder::kDecreasingMeasure},
  };
  for (const Fit& fit : kFits) {
    if (head == fit.name) {
      config.app_order = fit.apps;
      config.node_order = fit.nodes;
      config.measure = Measure::parse(join(tail, ':'));
      return config;
    }
  }
  if (head == "ncd") {
    if (tail.size() != 1) return fail();
    config.family = Family::kNodeCentric;
    config.score = parse_score(tail[0]);
    return config;
  }
  if (head == "spreadwf" || head == "spreadwfd") {
    if (tail.size() < 2) return fail();
    config.family = head == "spreadwf" ? Family::kSpreadWF : Family::kSpreadWFD;
    config.app_order = head == "spreadwf" ? AppOrder::kInput : AppOrder::kDecreasingMeasure;
    config.node_order = NodeOrder::kDecreasingMeasure;
    config.measure = Measure::parse(join(tail.first(tail.size() - 1), ':'));
    config.search = parse_search(tail.back());
    return config;
  }
  if (head == "match") {
    if (tail.size() != 2) return fail();
    config.family = Family::kMatching;
    config.score = parse_score(tail[0]);
    config.search = parse_search(tail[1]);
    return config;
  }
  return fail();
}

Problem::Problem(const Instance& instance) : instance_(&instance) {
  require_valid(instance);
  graph_ = AffinityGraph(instance.num_apps(), instance.arcs);
  view_ = normalize(instance);
}

Solution solve_app_centric(const Problem& problem, const AlgoConfig& config) {
  PlacementState state(problem.instance(), problem.graph());
  if (problem.instance().num_apps() > 0) state.activate_node();
  std::vector<double> row;
  for (AppId app : ordered_apps(problem, config.app_order, config.measure)) {
    pack_application(state, app, config.node_order, config.measure, row, [](NodeId) {});
  }
  return state.to_solution(label_of(config, "app-centric"), false);
}

Solution solve_first_fit(const Problem& problem) {
  AlgoConfig ff;
  ff.token = "ff";
  return solve_app_centric(problem, ff);
}

Solution solve_medea_tp(const Problem& problem) {
  AlgoConfig config;
  config.token = "medea-tp";
  config.app_order = AppOrder::kDecreasingMeasure;
  config.node_order = NodeOrder::kActivation;
  config.measure.base = MeasureBase::kAverage;
  config.measure.hybrid_alpha = 0.0;
  return solve_app_centric(problem, config);
}

Solution solve_node_centric(const Problem& problem, const AlgoConfig& config) {
  const Instance& instance = problem.instance();
  const NormalizedView& view = problem.view();
  PlacementState state(instance, problem.graph());
  std::vector<AppId> candidates;
  std::vector<double> residual;
  std::vector<double> pool;
  NodeId node = -1;

  while (state.total_remaining() > 0) {
    if (node < 0) {
      node = state.activate_node();
      candidates.clear();
      for (std::size_t i = 0; i < instance.num_apps(); ++i) {
        if (state.remaining(static_cast<AppId>(i)) > 0) candidates.push_back(static_cast<AppId>(i));
      }
    }
    normalized_residual(instance, state.node(node), residual);
    if (pool_dependent(config.score)) pool = normalized_pool(instance, state);

    // A candidate that fails once stays infeasible: the node only fills up.
    AppId best = -1;
    double best_score = 0.0;
    std::size_t kept = 0;
    for (AppId app : candidates) {
      if (!state.can_place(app, node)) continue;
      candidates[kept++] = app;
      const double value = score(config.score, view.row(app), residual, view.total, pool);
      if (best < 0 || value > best_score) {
        best = app;
        best_score = value;
      }
    }
    candidates.resize(kept);
    if (best < 0) {
      node = -1;
      continue;
    }
    state.place(best, node, state.max_placeable(best, node));
  }
  return state.to_solution(label_of(config, "node-centric"), false);
}

Solution solve_spread(const Problem& problem, std::int32_t n_target, const AlgoConfig& config) {
  PlacementState state(problem.instance(), problem.graph());
  for (std::int32_t n = 0; n < n_target; ++n) state.activate_node();
  const AppOrder order =
      config.family == Family::kSpreadWF ? AppOrder::kInput : AppOrder::kDecreasingMeasure;
  std::vector<double> row;
  for (AppId app : ordered_apps(problem, order, config.measure)) {
    while (state.remaining(app) > 0) {
      const NodeId node = best_by_measure(state, app, config.measure, true, row);
      if (node < 0) return state.to_solution(label_of(config, "spread"), true);
      state.place(app, node, 1);
    }
  }
  return state.to_solution(label_of(config, "spread"), false);
}

Solution solve_matching(const Problem& problem, std::int32_t n_target, const AlgoConfig& config) {
  const Instance& instance = problem.instance();
  const NormalizedView& view = problem.view();
  PlacementState state(instance, problem.graph());
  for (std::int32_t n = 0; n < n_target; ++n) state.activate_node();
  const auto nodes = static_cast<std::size_t>(std::max(n_target, 0));
  const std::size_t dims = instance.dims();
  const bool fitness = config.score == ScoreKind::kFitness;

  // Per node: feasible applications ranked by the score they had when the
  // node last changed (descending, then by id). A node's scores only move
  // when it receives a replica, except Fitness, whose pool weights 1/P_h grow
  // as the pool fills. Fitness terms are non-negative, so a stale score times
  // the largest weight ratio bounds the current one and the scan can stop
  // once that bound drops below the incumbent.
  struct Ranked {
    std::vector<std::pair<double, AppId>> entries;
    std::vector<double> weights;  // Fitness pool weights at ranking time
    std::size_t cursor = 0;       // entries before it are exhausted
  };
  struct Best {
    AppId app = -1;
    double score = 0.0;
  };

  std::vector<double> residual;
  std::vector<double> pool;
  std::vector<double> weights(dims, 0.0);
  auto refresh_pool = [&] {
    pool = normalized_pool(instance, state);
    for (std::size_t h = 0; h < dims; ++h) weights[h] = pool[h] > 0 ? 1.0 / pool[h] : 0.0;
  };

  // Marks the placed application and its graph neighbors; any other
  // application that was feasible on the node stays feasible unless it no
  // longer fits the residual capacity.
  std::vector<char> touched(instance.num_apps(), 0);
  auto mark = [&](AppId app, char value) {
    touched[app] = value;
    for (const auto& [other, lim] : problem.graph().out_arcs(app)) touched[other] = value;
    for (const auto& [other, lim] : problem.graph().in_arcs(app)) touched[other] = value;
  };
  auto fits = [&](AppId app, const NodeState& node) {
    const auto& demand = instance.apps[app].demand;
    const auto& free = node.residual();
    for (std::size_t h = 0; h < dims; ++h) {
      if (demand[h] > free[h]) return false;
    }
    return true;
  };

  // `previous` must hold only applications feasible on the node before its
  // latest placement.
  auto rank = [&](NodeId node, std::span<const std::pair<double, AppId>> previous,
                  Ranked& out) {
    normalized_residual(instance, state.node(node), residual);
    out.entries.clear();
    out.cursor = 0;
    for (const auto& [stale, app] : previous) {
      if (state.remaining(app) == 0) continue;
      if (touched[app] ? !state.can_place(app, node) : !fits(app, state.node(node))) continue;
      out.entries.emplace_back(score(config.score, view.row(app), residual, view.total, pool),
                               app);
    }
    std::sort(out.entries.begin(), out.entries.end(), [](const auto& a, const auto& b) {
      return a.first > b.first || (a.first == b.first && a.second < b.second);
    });
    out.weights = weights;
  };

  // Largest growth of a pool weight since `list` was ranked, padded for
  // rounding.
  auto drift = [&](const Ranked& list) {
    double ratio = 0.0;
    for (std::size_t h = 0; h < dims; ++h) {
      if (list.weights[h] > 0) ratio = std::max(ratio, weights[h] / list.weights[h]);
    }
    return ratio * (1.0 + 1e-9);
  };

  auto skip_exhausted = [&](Ranked& list) {
    while (list.cursor < list.entries.size() &&
           state.remaining(list.entries[list.cursor].second) == 0) {
      ++list.cursor;
    }
  };

  auto best_of = [&](NodeId node, Ranked& list) {
    Best b;
    auto& entries = list.entries;
    skip_exhausted(list);
    if (!fitness) {
      for (std::size_t k = list.cursor; k < entries.size(); ++k) {
        if (state.remaining(entries[k].second) > 0) return Best{entries[k].second, entries[k].first};
      }
      return b;
    }
    const double ratio = drift(list);
    normalized_residual(instance, state.node(node), residual);
    for (std::size_t k = list.cursor; k < entries.size(); ++k) {
      const auto& [stale, app] = entries[k];
      if (b.app >= 0 && stale * ratio < b.score) break;
      if (state.remaining(app) == 0) continue;
      const double value = score(config.score, view.row(app), residual, view.total, pool);
      if (b.app < 0 || value > b.score || (value == b.score && app < b.app)) b = {app, value};
    }
    return b;
  };

  if (fitness) refresh_pool();
  std::vector<std::pair<double, AppId>> all;
  for (AppId app = 0; app < static_cast<AppId>(instance.num_apps()); ++app) all.emplace_back(0.0, app);

  // Empty nodes are interchangeable: only the lowest-index one can win a tie,
  // so they share one list and nodes [first_empty, nodes) are never scored.
  std::vector<Ranked> lists(nodes);
  std::vector<Best> cached(nodes);
  std::vector<char> stale(nodes, 1);
  Ranked empty;
  std::size_t first_empty = 0;
  if (nodes > 0) {
    std::fill(touched.begin(), touched.end(), 1);
    rank(0, all, empty);
    std::fill(touched.begin(), touched.end(), 0);
  }
  Best empty_best;
  bool empty_stale = true;

  // Node order for the Fitness scan, by upper bound on the node's best score.
  std::vector<std::pair<double, std::size_t>> bounds;

  while (state.total_remaining() > 0) {
    if (fitness) refresh_pool();
    std::size_t chosen = nodes;
    Best chosen_best;
    // Higher score, then lower application, then lower node index.
    auto consider = [&](std::size_t n, const Best& b) {
      if (b.app < 0) return;
      if (chosen == nodes || b.score > chosen_best.score ||
          (b.score == chosen_best.score &&
           (b.app < chosen_best.app || (b.app == chosen_best.app && n < chosen)))) {
        chosen = n;
        chosen_best = b;
      }
    };
    auto list_of = [&](std::size_t n) -> Ranked& { return n == first_empty ? empty : lists[n]; };
    const std::size_t scanned = std::min(first_empty + 1, nodes);
    if (fitness) {
      bounds.clear();
      for (std::size_t n = 0; n < scanned; ++n) {
        Ranked& list = list_of(n);
        skip_exhausted(list);
        if (list.cursor == list.entries.size()) continue;
        bounds.emplace_back(list.entries[list.cursor].first * drift(list), n);
      }
      std::sort(bounds.begin(), bounds.end(), [](const auto& a, const auto& b) {
        return a.first > b.first || (a.first == b.first && a.second < b.second);
      });
      for (const auto& [bound, n] : bounds) {
        if (chosen != nodes && bound < chosen_best.score) break;
        consider(n, best_of(static_cast<NodeId>(n), list_of(n)));
      }
    } else {
      for (std::size_t n = 0; n < first_empty; ++n) {
        if (stale[n]) {
          cached[n] = best_of(static_cast<NodeId>(n), lists[n]);
          stale[n] = 0;
        }
        consider(n, cached[n]);
      }
      if (first_empty < nodes) {
        if (empty_stale) {
          empty_best = best_of(static_cast<NodeId>(first_empty), empty);
          empty_stale = false;
        }
        consider(first_empty, empty_best);
      }
    }
    if (chosen == nodes) return state.to_solution(label_of(config, "match"), true);

    const AppId app = chosen_best.app;
    const auto node = static_cast<NodeId>(chosen);
    state.place(app, node, 1);
    if (chosen == first_empty) {
      lists[chosen].entries = empty.entries;
      lists[chosen].cursor = empty.cursor;
      ++first_empty;
    }
    Ranked& list = lists[chosen];
    const std::vector<std::pair<double, AppId>> previous(list.entries.begin() + list.cursor,
                                                         list.entries.end());
    if (fitness) refresh_pool();
    mark(app, 1);
    rank(node, previous, list);
    mark(app, 0);
    stale[chosen] = 1;
    if (state.remaining(app) == 0) {
      for (std::size_t n = 0; n < first_empty; ++n) {
        if (cached[n].app == app) stale[n] = 1;
      }
      if (empty_best.app == app) empty_stale = true;
    }
  }
  return state.to_solution(label_of(config, "match"), false);
}

Solution solve_medea_nc(const Problem& problem) {
  const Instance& instance = problem.instance();
  const std::size_t num_apps = instance.num_apps();
  PlacementState state(instance, problem.graph());
  std::vector<char> done(num_apps, 0);
  std::vector<std::int64_t> count(num_apps, 0);
  std::vector<std::vector<char>> feasible;  // feasible[node][app], pending apps only

  auto activate = [&]() {
    const NodeId node = state.activate_node();
    feasible.emplace_back(num_apps, 0);
    for (std::size_t i = 0; i < num_apps; ++i) {
      if (!done[i] && state.can_place(static_cast<AppId>(i), node)) {
        feasible[node][i] = 1;
        ++count[i];
      }
    }
    return node;
  };
  if (num_apps > 0) activate();

  std::vector<NodeId> touched;
  for (std::size_t step = 0; step < num_apps; ++step) {
    AppId pick = -1;
    for (std::size_t i = 0; i < num_apps; ++i) {
      if (!done[i] && (pick < 0 || count[i] < count[pick])) pick = static_cast<AppId>(i);
    }
    touched.clear();
    while (state.remaining(pick) > 0) {
      NodeId node = first_feasible(state, pick);
      if (node < 0) node = activate();
      state.place(pick, node, state.max_placeable(pick, node));
      touched.push_back(node);
    }
    done[pick] = 1;
    for (NodeId node : touched) {
      for (std::size_t i = 0; i < num_apps; ++i) {
        if (!done[i] && feasible[node][i] && !state.can_place(static_cast<AppId>(i), node)) {
          feasible[node][i] = 0;
          --count[i];
        }
      }
    }
  }
  return state.to_solution("medea-nc", false);
}

std::int64_t decrement_step(double percent, std::int64_t lower_bound) {
  return std::max<std::int64_t>(
      1, std::llround(percent / 100.0 * static_cast<double>(lower_bound)));
}

Solution binary_search_nodes(std::int64_t lower, Solution upper, const NodeTrial& trial) {
  Solution best = std::move(upper);
  std::int64_t lo = std::max<std::int64_t>(lower, 1);
  std::int64_t hi = static_cast<std::int64_t>(best.nodes_used) - 1;
  while (lo <= hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    Solution attempt = trial(static_cast<std::int32_t>(mid));
    if (attempt.failed) {
      lo = mid + 1;
    } else {
      if (attempt.nodes_used < best.nodes_used) best = std::move(attempt);
      hi = mid - 1;
    }
  }
  return best;
}

Solution decrement_search_nodes(std::int64_t lower, std::int64_t step, Solution upper,
                                const NodeTrial& trial) {
  Solution best = std::move(upper);
  const std::int64_t floor = std::max<std::int64_t>(lower, 1);
  std::int64_t n = static_cast<std::int64_t>(best.nodes_used) - step;
  while (n >= floor) {
    Solution attempt = trial(static_cast<std::int32_t>(n));
    if (attempt.failed) break;
    const std::int64_t reached = std::min<std::int64_t>(n, attempt.nodes_used);
    if (attempt.nodes_used < best.nodes_used) best = std::move(attempt);
    n = reached - step;
  }
  return best;
}

namespace {

Solution run_search(const Problem& problem, const AlgoConfig& config, bool binary) {
  const std::int64_t lower = lower_bound(problem.instance()).value;
  Solution first_fit = solve_first_fit(problem);
  NodeTrial trial = [&problem, &config](std::int32_t n) {
    return config.family == Family::kMatching ? solve_matching(problem, n, config)
                                              : solve_spread(problem, n, config);
  };
  Solution result =
      binary ? binary_search_nodes(lower, std::move(first_fit), trial)
             : decrement_search_nodes(lower, decrement_step(config.search.step_percent, lower),
                                      std::move(first_fit), trial);
  result.algorithm = label_of(config, "search");
  return result;
}

}  // namespace

Solution search_binary(const Problem& problem, const AlgoConfig& config) {
  return run_search(problem, config, true);
}

Solution search_decrement(const Problem& problem, const AlgoConfig& config) {
  return run_search(problem, config, false);
}

Solution solve(const Problem& problem, const AlgoConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Solution solution;
  switch (config.family) {
    case Family::kAppCentric:
      solution = solve_app_centric(problem, config);
      break;
    case Family::kNodeCentric:
      solution = solve_node_centric(problem, config);
      break;
    case Family::kLraSchedFitness: {
      AlgoConfig fitness = config;
      fitness.score = ScoreKind::kFitness;
      if (fitness.token.empty()) fitness.token = "lrasched-fitness";
      solution = solve_node_centric(problem, fitness);
      break;
    }
    case Family::kMedeaTP:
      solution = solve_medea_tp(problem);
      break;
    case Family::kMedeaNC:
      solution = solve_medea_nc(problem);
      break;
    case Family::kSpreadWF:
    case Family::kSpreadWFD:
    case Family::kMatching:
      switch (config.search.kind) {
        case SearchStrategy::Kind::kBinary:
          solution = search_binary(problem, config);
          break;
        case SearchStrategy::Kind::kDecrement:
          solution = search_decrement(problem, config);
          break;
        case SearchStrategy::Kind::kNone:
          throw InputError("multi-node algorithms need a search strategy");
      }
      break;
  }
  if (!config.token.empty()) solution.algorithm = config.token;
  solution.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return solution;
}

Solution solve(const Instance& instance, const AlgoConfig& config) {
  const Problem problem(instance);
  return solve(problem, config);
}

}  // namespace affprov
