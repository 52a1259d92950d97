#include "ncgsim.h"

#include <new>
#include <stdexcept>
#include <string>

#include "ncg/analysis.hpp"
#include "ncg/cost.hpp"
#include "ncg/engine.hpp"
#include "ncg/graph.hpp"
#include "ncg/oracle.hpp"
#include "ncg/sweep.hpp"

struct ncg_graph {
  ncg::OwnedGraph graph;
};

struct ncg_sweep_plan {
  ncg::SweepPlan plan;
  bool scenarios_replaced = false;
};

namespace {

thread_local std::string t_last_error;

void set_error(const char* message) { t_last_error = message; }

template <typename Fn>
ncg_status guarded(Fn&& fn) {
  try {
    t_last_error.clear();
    return fn();
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return NCG_ERROR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return NCG_ERROR_NO_MEMORY;
  } catch (const std::runtime_error& e) {
    set_error(e.what());
    return NCG_ERROR_IO;
  } catch (const std::exception& e) {
    set_error(e.what());
    return NCG_ERROR_INTERNAL;
  }
}

ncg_status require(bool ok, const char* message) {
  if (ok) return NCG_OK;
  set_error(message);
  return NCG_ERROR_INVALID_ARGUMENT;
}

ncg::Behaviour to_behaviour(int value) {
  if (value == NCG_SELFISH) return ncg::Behaviour::Selfish;
  if (value == NCG_UNSELFISH) return ncg::Behaviour::Unselfish;
  throw std::invalid_argument("behaviour must be NCG_SELFISH or NCG_UNSELFISH");
}

ncg::StartCondition to_start(int value) {
  if (value == NCG_FROM_SCRATCH) return ncg::StartCondition::FromScratch;
  if (value == NCG_FROM_COMPLETE) return ncg::StartCondition::FromComplete;
  throw std::invalid_argument("start must be NCG_FROM_SCRATCH or NCG_FROM_COMPLETE");
}

ncg::MoveSet to_move_set(int value) {
  if (value == NCG_MOVES_BUY_SELL) return ncg::MoveSet::BuySellOnly;
  if (value == NCG_MOVES_BUY_SELL_SWITCH) return ncg::MoveSet::BuySellPlusSwitch;
  throw std::invalid_argument("move_set must be NCG_MOVES_BUY_SELL or NCG_MOVES_BUY_SELL_SWITCH");
}

}  // namespace

extern "C" {

const char* ncg_version(void) { return "1.0.0"; }

const char* ncg_status_name(ncg_status status) {
  switch (status) {
    case NCG_OK:
      return "ok";
    case NCG_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case NCG_ERROR_IO:
      return "io error";
    case NCG_ERROR_NO_MEMORY:
      return "out of memory";
    default:
      return "internal error";
  }
}

const char* ncg_last_error_message(void) { return t_last_error.c_str(); }

ncg_status ncg_graph_new_empty(int n, ncg_graph** out) {
  if (ncg_status s = require(out != nullptr, "out must not be null")) return s;
  return guarded([&] {
    *out = new ncg_graph{ncg::OwnedGraph::new_empty(n)};
    return NCG_OK;
  });
}

ncg_status ncg_graph_new_complete(int n, uint64_t seed, ncg_graph** out) {
  if (ncg_status s = require(out != nullptr, "out must not be null")) return s;
  return guarded([&] {
    ncg::Rng rng(seed);
    *out = new ncg_graph{ncg::OwnedGraph::new_complete(n, rng)};
    return NCG_OK;
  });
}

void ncg_graph_free(ncg_graph* g) { delete g; }

int ncg_graph_node_count(const ncg_graph* g) { return g ? g->graph.node_count() : -1; }

long long ncg_graph_edge_count(const ncg_graph* g) { return g ? g->graph.edge_count() : -1; }

int ncg_graph_has_edge(const ncg_graph* g, int i, int j) {
  if (!g) return -1;
  try {
    return g->graph.has_edge(i, j) ? 1 : 0;
  } catch (const std::exception&) {
    return -1;
  }
}

ncg_status ncg_graph_edge_owner(const ncg_graph* g, int i, int j, int* owner) {
  if (ncg_status s = require(g && owner, "graph and owner must not be null")) return s;
  return guarded([&] {
    *owner = g->graph.edge_owner(i, j);
    return NCG_OK;
  });
}

int ncg_graph_is_connected(const ncg_graph* g) {
  if (!g) return -1;
  return g->graph.is_connected() ? 1 : 0;
}

ncg_status ncg_graph_add_edge(ncg_graph* g, int buyer, int other) {
  if (ncg_status s = require(g != nullptr, "graph must not be null")) return s;
  return guarded([&] {
    g->graph.add_edge(buyer, other);
    return NCG_OK;
  });
}

ncg_status ncg_graph_remove_edge(ncg_graph* g, int requester, int other) {
  if (ncg_status s = require(g != nullptr, "graph must not be null")) return s;
  return guarded([&] {
    g->graph.remove_edge(requester, other);
    return NCG_OK;
  });
}

ncg_status ncg_graph_distance(const ncg_graph* g, int i, int j, int* hops) {
  if (ncg_status s = require(g && hops, "graph and hops must not be null")) return s;
  return guarded([&] {
    const std::vector<int> row = g->graph.bfs_distances(i);
    if (j < 0 || j >= g->graph.node_count()) throw std::invalid_argument("node id out of range");
    *hops = row[static_cast<std::size_t>(j)];
    return NCG_OK;
  });
}

ncg_status ncg_graph_save(const ncg_graph* g, const char* path) {
  if (ncg_status s = require(g && path, "graph and path must not be null")) return s;
  return guarded([&] {
    ncg::save_edge_list(g->graph, path);
    return NCG_OK;
  });
}

ncg_status ncg_graph_load(const char* path, ncg_graph** out) {
  if (ncg_status s = require(path && out, "path and out must not be null")) return s;
  return guarded([&] {
    *out = new ncg_graph{ncg::load_edge_list(path)};
    return NCG_OK;
  });
}

double ncg_sentinel(double alpha, int n) { return ncg::sentinel(alpha, n); }

ncg_status ncg_agent_cost(const ncg_graph* g, int agent, double alpha, int behaviour,
                          double* cost) {
  if (ncg_status s = require(g && cost, "graph and cost must not be null")) return s;
  return guarded([&] {
    const ncg::CostView view{to_behaviour(behaviour), alpha, g->graph.node_count()};
    const ncg::DistanceTable dist = g->graph.all_pairs_distances();
    *cost = ncg::agent_cost(g->graph, dist, agent, view);
    return NCG_OK;
  });
}

ncg_status ncg_total_cost(const ncg_graph* g, double alpha, double* cost) {
  if (ncg_status s = require(g && cost, "graph and cost must not be null")) return s;
  return guarded([&] {
    *cost = ncg::total_cost(g->graph, alpha);
    return NCG_OK;
  });
}

void ncg_scenario_init(ncg_scenario* scenario, int n, double alpha) {
  if (!scenario) return;
  scenario->n = n;
  scenario->alpha = alpha;
  scenario->behaviour = NCG_SELFISH;
  scenario->start = NCG_FROM_SCRATCH;
  scenario->move_set = NCG_MOVES_BUY_SELL;
  scenario->max_steps = 10000;
  scenario->tries_per_step = 100;
  scenario->seed = 0;
  scenario->accept_equal_cost_switch = 1;
  scenario->single_acceptance_per_step = 0;
}

ncg_status ncg_run(const ncg_scenario* scenario, ncg_run_summary* summary,
                   ncg_graph** final_graph) {
  if (ncg_status s = require(scenario && summary, "scenario and summary must not be null")) {
    return s;
  }
  return guarded([&] {
    ncg::ScenarioConfig config;
    config.n = scenario->n;
    config.alpha = scenario->alpha;
    config.behaviour = to_behaviour(scenario->behaviour);
    config.start = to_start(scenario->start);
    config.move_set = to_move_set(scenario->move_set);
    config.max_steps = scenario->max_steps;
    config.tries_per_step = scenario->tries_per_step;
    config.seed = scenario->seed;
    config.accept_equal_cost_switch = scenario->accept_equal_cost_switch != 0;
    config.single_acceptance_per_step = scenario->single_acceptance_per_step != 0;
    ncg::RunOutcome outcome = ncg::run(config);
    summary->steps = outcome.steps;
    summary->termination = outcome.termination == ncg::Termination::LocalMinimum
                               ? NCG_TERMINATED_LOCAL_MINIMUM
                               : NCG_TERMINATED_STEP_CAP;
    summary->accepted_moves = outcome.accepted_moves;
    summary->final_total_cost = outcome.final_total_cost;
    if (final_graph) *final_graph = new ncg_graph{std::move(outcome.final_graph)};
    return NCG_OK;
  });
}

ncg_status ncg_analyze(const ncg_graph* g, double alpha, ncg_metrics* metrics) {
  if (ncg_status s = require(g && metrics, "graph and metrics must not be null")) return s;
  return guarded([&] {
    const ncg::RunMetrics m = ncg::run_metrics(g->graph, 0, alpha);
    metrics->connected = m.connected ? 1 : 0;
    metrics->edges = m.edges;
    metrics->avg_distance = m.avg_distance;
    metrics->diameter = m.diameter;
    metrics->is_tree = m.is_tree ? 1 : 0;
    metrics->is_star = m.is_star ? 1 : 0;
    metrics->is_complete = m.is_complete ? 1 : 0;
    metrics->total_cost = m.total_cost;
    return NCG_OK;
  });
}

ncg_status ncg_three_centre_structure(const ncg_graph* g, int* matches) {
  if (ncg_status s = require(g && matches, "graph and matches must not be null")) return s;
  return guarded([&] {
    *matches = ncg::three_centre_structure_check(g->graph) ? 1 : 0;
    return NCG_OK;
  });
}

ncg_status ncg_social_optimum(int n, double alpha, ncg_optimum* report,
                              ncg_graph** representative) {
  if (ncg_status s = require(report != nullptr, "report must not be null")) return s;
  return guarded([&] {
    ncg::OptimumReport r = ncg::brute_force_social_optimum(n, alpha);
    report->optimal_total_cost = r.optimal_total_cost;
    report->optimizer_count = r.optimizer_count;
    if (representative) *representative = new ncg_graph{std::move(r.one_optimizer)};
    return NCG_OK;
  });
}

ncg_status ncg_verify_nash(const ncg_graph* g, double alpha, int behaviour, int move_set,
                           int* is_nash) {
  if (ncg_status s = require(g && is_nash, "graph and is_nash must not be null")) return s;
  return guarded([&] {
    *is_nash =
        ncg::verify_nash(g->graph, alpha, to_behaviour(behaviour), to_move_set(move_set)) ? 1 : 0;
    return NCG_OK;
  });
}

ncg_status ncg_is_local_minimum(const ncg_graph* g, double alpha, int behaviour, int move_set,
                                int* is_minimum) {
  if (ncg_status s = require(g && is_minimum, "graph and is_minimum must not be null")) return s;
  return guarded([&] {
    const ncg::CostView view{to_behaviour(behaviour), alpha, g->graph.node_count()};
    *is_minimum = ncg::is_local_minimum(g->graph, view, to_move_set(move_set)) ? 1 : 0;
    return NCG_OK;
  });
}

ncg_status ncg_degeneracy_scan(const ncg_graph* g, double alpha, int behaviour, int move_set,
                               long long* zero_delta_moves) {
  if (ncg_status s =
          require(g && zero_delta_moves, "graph and zero_delta_moves must not be null")) {
    return s;
  }
  return guarded([&] {
    *zero_delta_moves =
        ncg::degeneracy_scan(g->graph, alpha, to_behaviour(behaviour), to_move_set(move_set));
    return NCG_OK;
  });
}

ncg_status ncg_sweep_plan_new(int n, ncg_sweep_plan** out) {
  if (ncg_status s = require(out != nullptr, "out must not be null")) return s;
  return guarded([&] {
    if (n < 2) throw std::invalid_argument("sweep plan needs n >= 2");
    auto* plan = new ncg_sweep_plan;
    plan->plan.n = n;
    *out = plan;
    return NCG_OK;
  });
}

void ncg_sweep_plan_free(ncg_sweep_plan* plan) { delete plan; }

ncg_status ncg_sweep_plan_set_runs(ncg_sweep_plan* plan, int runs_per_cell) {
  if (ncg_status s = require(plan != nullptr, "plan must not be null")) return s;
  return guarded([&] {
    if (runs_per_cell < 1) throw std::invalid_argument("runs_per_cell must be at least 1");
    plan->plan.runs_per_cell = runs_per_cell;
    return NCG_OK;
  });
}

ncg_status ncg_sweep_plan_set_base_seed(ncg_sweep_plan* plan, uint64_t base_seed) {
  if (ncg_status s = require(plan != nullptr, "plan must not be null")) return s;
  plan->plan.base_seed = base_seed;
  return NCG_OK;
}

ncg_status ncg_sweep_plan_set_output_dir(ncg_sweep_plan* plan, const char* dir) {
  if (ncg_status s = require(plan && dir, "plan and dir must not be null")) return s;
  plan->plan.output_dir = dir;
  return NCG_OK;
}

ncg_status ncg_sweep_plan_set_alpha_grid(ncg_sweep_plan* plan, const double* alphas, int count) {
  if (ncg_status s = require(plan && alphas, "plan and alphas must not be null")) return s;
  return guarded([&] {
    if (count < 1) throw std::invalid_argument("alpha grid must not be empty");
    plan->plan.alpha_grid.assign(alphas, alphas + count);
    return NCG_OK;
  });
}

ncg_status ncg_sweep_plan_set_max_steps(ncg_sweep_plan* plan, int max_steps) {
  if (ncg_status s = require(plan != nullptr, "plan must not be null")) return s;
  return guarded([&] {
    if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
    plan->plan.max_steps = max_steps;
    return NCG_OK;
  });
}

ncg_status ncg_sweep_plan_set_tries_per_step(ncg_sweep_plan* plan, int tries_per_step) {
  if (ncg_status s = require(plan != nullptr, "plan must not be null")) return s;
  return guarded([&] {
    if (tries_per_step < 1) throw std::invalid_argument("tries_per_step must be at least 1");
    plan->plan.tries_per_step = tries_per_step;
    return NCG_OK;
  });
}

ncg_status ncg_sweep_plan_set_persist_graphs(ncg_sweep_plan* plan, int enable) {
  if (ncg_status s = require(plan != nullptr, "plan must not be null")) return s;
  plan->plan.persist_graphs = enable != 0;
  return NCG_OK;
}

ncg_status ncg_sweep_plan_select_scenario(ncg_sweep_plan* plan, int behaviour, int start,
                                          int move_set) {
  if (ncg_status s = require(plan != nullptr, "plan must not be null")) return s;
  return guarded([&] {
    const ncg::SweepScenario scenario{to_behaviour(behaviour), to_start(start),
                                      to_move_set(move_set)};
    if (!plan->scenarios_replaced) {
      plan->plan.scenarios.clear();
      plan->scenarios_replaced = true;
    }
    plan->plan.scenarios.push_back(scenario);
    return NCG_OK;
  });
}

ncg_status ncg_sweep_plan_set_scenario_n(ncg_sweep_plan* plan, int behaviour, int start,
                                         int move_set, int n) {
  if (ncg_status s = require(plan != nullptr, "plan must not be null")) return s;
  return guarded([&] {
    if (n != 0 && n < 2) throw std::invalid_argument("scenario n override must be 0 or >= 2");
    const ncg::SweepScenario scenario{to_behaviour(behaviour), to_start(start),
                                      to_move_set(move_set)};
    plan->plan.n_override[static_cast<std::size_t>(ncg::scenario_id(scenario))] = n;
    return NCG_OK;
  });
}

ncg_status ncg_sweep_execute(const ncg_sweep_plan* plan, int workers) {
  if (ncg_status s = require(plan != nullptr, "plan must not be null")) return s;
  return guarded([&] {
    ncg::execute(plan->plan, workers);
    return NCG_OK;
  });
}

ncg_status ncg_emit_figure_tables(const char* sweep_dir, const char* tables_dir) {
  if (ncg_status s =
          require(sweep_dir && tables_dir, "sweep_dir and tables_dir must not be null")) {
    return s;
  }
  return guarded([&] {
    const ncg::SweepReport report = ncg::load_report(sweep_dir);
    ncg::emit_figure_tables(report, tables_dir);
    return NCG_OK;
  });
}

}  // extern "C"
