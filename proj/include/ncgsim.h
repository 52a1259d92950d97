/* ncgsim — network creation game simulator, C API.
 *
 * N agents, one per graph node, build a network between them. Buying an
 * edge costs a fixed amount alpha; using the network costs one unit per
 * hop. An edge belongs to the endpoint that bought it (only the owner may
 * delete it) but carries traffic for everyone. Agents improve the graph by
 * local moves — buy/sell an edge, or switch one of their edges to a new
 * endpoint — accepting any move that does not worsen their own cost.
 * Selfish agents price only their own edges and distances; unselfish agents
 * price their own edges plus the distance sum of the whole system.
 *
 * All functions returning ncg_status report NCG_OK (0) on success. On
 * failure, ncg_last_error_message() describes the problem for the calling
 * thread. Handles created by ncg_* constructors must be released with the
 * matching free function.
 */
#ifndef NCGSIM_H
#define NCGSIM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int ncg_status;

#define NCG_OK 0
#define NCG_ERROR_INVALID_ARGUMENT 1
#define NCG_ERROR_IO 2
#define NCG_ERROR_NO_MEMORY 3
#define NCG_ERROR_INTERNAL 4

#define NCG_SELFISH 0
#define NCG_UNSELFISH 1

#define NCG_FROM_SCRATCH 0
#define NCG_FROM_COMPLETE 1

#define NCG_MOVES_BUY_SELL 0
#define NCG_MOVES_BUY_SELL_SWITCH 1

#define NCG_TERMINATED_LOCAL_MINIMUM 0
#define NCG_TERMINATED_STEP_CAP 1

/* Hop count reported for pairs with no connecting path. */
#define NCG_UNREACHABLE (-1)

const char* ncg_version(void);
const char* ncg_status_name(ncg_status status);
/* Message for the most recent failure on this thread; empty if none. */
const char* ncg_last_error_message(void);

/* ---- graphs ---------------------------------------------------------- */

typedef struct ncg_graph ncg_graph;

ncg_status ncg_graph_new_empty(int n, ncg_graph** out);
/* Complete graph; each edge owner drawn from the given seed. */
ncg_status ncg_graph_new_complete(int n, uint64_t seed, ncg_graph** out);
void ncg_graph_free(ncg_graph* g);

int ncg_graph_node_count(const ncg_graph* g);
long long ncg_graph_edge_count(const ncg_graph* g);
/* 1, 0, or -1 on invalid arguments. */
int ncg_graph_has_edge(const ncg_graph* g, int i, int j);
ncg_status ncg_graph_edge_owner(const ncg_graph* g, int i, int j, int* owner);
/* 1, 0, or -1 on invalid arguments. */
int ncg_graph_is_connected(const ncg_graph* g);

ncg_status ncg_graph_add_edge(ncg_graph* g, int buyer, int other);
ncg_status ncg_graph_remove_edge(ncg_graph* g, int requester, int other);

/* Hop count between i and j; NCG_UNREACHABLE when no path exists. */
ncg_status ncg_graph_distance(const ncg_graph* g, int i, int j, int* hops);

/* Edge-list text format: first line "N <n>", then "<i> <j> <owner>" per
 * edge, sorted by (min endpoint, max endpoint). */
ncg_status ncg_graph_save(const ncg_graph* g, const char* path);
ncg_status ncg_graph_load(const char* path, ncg_graph** out);

/* ---- costs ----------------------------------------------------------- */

/* Substitute distance for unreachable pairs: alpha + n. */
double ncg_sentinel(double alpha, int n);
ncg_status ncg_agent_cost(const ncg_graph* g, int agent, double alpha, int behaviour,
                          double* cost);
ncg_status ncg_total_cost(const ncg_graph* g, double alpha, double* cost);

/* ---- single runs ------------------------------------------------------ */

typedef struct ncg_scenario {
  int n;
  double alpha;
  int behaviour;      /* NCG_SELFISH / NCG_UNSELFISH */
  int start;          /* NCG_FROM_SCRATCH / NCG_FROM_COMPLETE */
  int move_set;       /* NCG_MOVES_BUY_SELL / NCG_MOVES_BUY_SELL_SWITCH */
  int max_steps;      /* default 10000 */
  int tries_per_step; /* default 100 */
  uint64_t seed;
  /* Policy knobs for sensitivity runs; defaults give the reference
   * protocol. */
  int accept_equal_cost_switch;   /* default 1 */
  int single_acceptance_per_step; /* default 0 */
} ncg_scenario;

/* Fills defaults: from-scratch selfish buy/sell, 10000 steps of 100 tries,
 * seed 0. */
void ncg_scenario_init(ncg_scenario* scenario, int n, double alpha);

typedef struct ncg_run_summary {
  long long steps;
  int termination; /* NCG_TERMINATED_* */
  long long accepted_moves;
  double final_total_cost;
} ncg_run_summary;

/* Runs one simulation. final_graph may be NULL when only the summary is
 * wanted. Identical scenarios (including seed) produce identical results. */
ncg_status ncg_run(const ncg_scenario* scenario, ncg_run_summary* summary,
                   ncg_graph** final_graph);

/* ---- analysis --------------------------------------------------------- */

typedef struct ncg_metrics {
  int connected;
  long long edges;
  double avg_distance; /* -1 when disconnected */
  int diameter;        /* -1 when disconnected */
  int is_tree;
  int is_star;
  int is_complete;
  double total_cost;
} ncg_metrics;

ncg_status ncg_analyze(const ncg_graph* g, double alpha, ncg_metrics* metrics);

/* The 2(n-3)+2-edge shape with three centre nodes. */
ncg_status ncg_three_centre_structure(const ncg_graph* g, int* matches);

/* ---- exact checks (small n) ------------------------------------------- */

typedef struct ncg_optimum {
  double optimal_total_cost;
  long long optimizer_count;
} ncg_optimum;

/* Exhaustive scan over all labeled graphs, n <= 7. representative may be
 * NULL. */
ncg_status ncg_social_optimum(int n, double alpha, ncg_optimum* report,
                              ncg_graph** representative);

/* No agent has a strictly improving move. */
ncg_status ncg_verify_nash(const ncg_graph* g, double alpha, int behaviour, int move_set,
                           int* is_nash);
/* No agent has a non-worsening move. */
ncg_status ncg_is_local_minimum(const ncg_graph* g, double alpha, int behaviour, int move_set,
                                int* is_minimum);
/* Number of valid moves with exactly zero cost change. */
ncg_status ncg_degeneracy_scan(const ncg_graph* g, double alpha, int behaviour, int move_set,
                               long long* zero_delta_moves);

/* ---- sweeps ------------------------------------------------------------ */

typedef struct ncg_sweep_plan ncg_sweep_plan;

/* A new plan covers all 8 scenarios over the standard 52-value alpha grid,
 * 100 runs per cell, base seed 0. */
ncg_status ncg_sweep_plan_new(int n, ncg_sweep_plan** out);
void ncg_sweep_plan_free(ncg_sweep_plan* plan);

ncg_status ncg_sweep_plan_set_runs(ncg_sweep_plan* plan, int runs_per_cell);
ncg_status ncg_sweep_plan_set_base_seed(ncg_sweep_plan* plan, uint64_t base_seed);
ncg_status ncg_sweep_plan_set_output_dir(ncg_sweep_plan* plan, const char* dir);
ncg_status ncg_sweep_plan_set_alpha_grid(ncg_sweep_plan* plan, const double* alphas, int count);
ncg_status ncg_sweep_plan_set_max_steps(ncg_sweep_plan* plan, int max_steps);
ncg_status ncg_sweep_plan_set_tries_per_step(ncg_sweep_plan* plan, int tries_per_step);
ncg_status ncg_sweep_plan_set_persist_graphs(ncg_sweep_plan* plan, int enable);
/* Restricts the plan to one scenario; call repeatedly to select several.
 * The first call replaces the default all-8 selection. */
ncg_status ncg_sweep_plan_select_scenario(ncg_sweep_plan* plan, int behaviour, int start,
                                          int move_set);
/* Runs one scenario at a different node count (0 restores the plan n). */
ncg_status ncg_sweep_plan_set_scenario_n(ncg_sweep_plan* plan, int behaviour, int start,
                                         int move_set, int n);

/* Executes every (scenario, alpha, run) cell. Per-run CSVs land under
 * <dir>/runs (one file per cell; complete files are skipped so interrupted
 * sweeps resume), aggregates in <dir>/summary.csv. Output bytes depend only
 * on the plan, not on the worker count. */
ncg_status ncg_sweep_execute(const ncg_sweep_plan* plan, int workers);

/* Reads per-run CSVs under <sweep_dir>/runs and writes one plot-ready table
 * per (scenario, metric) into tables_dir. */
ncg_status ncg_emit_figure_tables(const char* sweep_dir, const char* tables_dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NCGSIM_H */
