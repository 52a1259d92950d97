#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "ncgsim.h"

namespace fs = std::filesystem;

namespace {

fs::path scratch_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ncgsim_capi";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(ncg_version()) > 0);
  CHECK(std::string(ncg_status_name(NCG_OK)) == "ok");
  CHECK(std::string(ncg_status_name(NCG_ERROR_INVALID_ARGUMENT)) == "invalid argument");
}

TEST_CASE("graph lifecycle and errors") {
  ncg_graph* g = nullptr;
  CHECK(ncg_graph_new_empty(1, &g) == NCG_ERROR_INVALID_ARGUMENT);
  CHECK(std::strlen(ncg_last_error_message()) > 0);
  CHECK(ncg_graph_new_empty(6, &g) == NCG_OK);
  REQUIRE(g != nullptr);
  CHECK(ncg_graph_node_count(g) == 6);
  CHECK(ncg_graph_edge_count(g) == 0);
  CHECK(ncg_graph_is_connected(g) == 0);

  CHECK(ncg_graph_add_edge(g, 0, 1) == NCG_OK);
  CHECK(ncg_graph_add_edge(g, 0, 1) == NCG_ERROR_INVALID_ARGUMENT);
  CHECK(ncg_graph_add_edge(g, 2, 2) == NCG_ERROR_INVALID_ARGUMENT);
  CHECK(ncg_graph_has_edge(g, 1, 0) == 1);
  int owner = -1;
  CHECK(ncg_graph_edge_owner(g, 0, 1, &owner) == NCG_OK);
  CHECK(owner == 0);
  CHECK(ncg_graph_remove_edge(g, 1, 0) == NCG_ERROR_INVALID_ARGUMENT);  // not the owner
  CHECK(ncg_graph_remove_edge(g, 0, 1) == NCG_OK);
  CHECK(ncg_graph_edge_count(g) == 0);
  ncg_graph_free(g);

  ncg_graph* k5 = nullptr;
  CHECK(ncg_graph_new_complete(5, 7, &k5) == NCG_OK);
  CHECK(ncg_graph_edge_count(k5) == 10);
  int hops = -2;
  CHECK(ncg_graph_distance(k5, 0, 4, &hops) == NCG_OK);
  CHECK(hops == 1);
  ncg_graph_free(k5);
}

TEST_CASE("save and load round trip") {
  const std::string path = scratch_file("roundtrip.edges").string();
  ncg_graph* g = nullptr;
  REQUIRE(ncg_graph_new_complete(6, 99, &g) == NCG_OK);
  CHECK(ncg_graph_save(g, path.c_str()) == NCG_OK);
  ncg_graph* back = nullptr;
  CHECK(ncg_graph_load(path.c_str(), &back) == NCG_OK);
  CHECK(ncg_graph_node_count(back) == 6);
  CHECK(ncg_graph_edge_count(back) == 15);
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      int a = -1;
      int b = -1;
      CHECK(ncg_graph_edge_owner(g, i, j, &a) == NCG_OK);
      CHECK(ncg_graph_edge_owner(back, i, j, &b) == NCG_OK);
      CHECK(a == b);
    }
  }
  ncg_graph_free(g);
  ncg_graph_free(back);
  ncg_graph* missing = nullptr;
  CHECK(ncg_graph_load("/nonexistent/ncgsim.edges", &missing) == NCG_ERROR_IO);
}

TEST_CASE("costs through the C API") {
  CHECK(ncg_sentinel(20.0, 100) == 120.0);
  ncg_graph* pair = nullptr;
  REQUIRE(ncg_graph_new_empty(2, &pair) == NCG_OK);
  double cost = 0.0;
  CHECK(ncg_agent_cost(pair, 0, 3.0, NCG_SELFISH, &cost) == NCG_OK);
  CHECK(cost == 5.0);
  CHECK(ncg_agent_cost(pair, 0, 3.0, NCG_UNSELFISH, &cost) == NCG_OK);
  CHECK(cost == 10.0);
  CHECK(ncg_total_cost(pair, 3.0, &cost) == NCG_OK);
  CHECK(cost == 10.0);
  CHECK(ncg_agent_cost(pair, 0, 3.0, 42, &cost) == NCG_ERROR_INVALID_ARGUMENT);
  ncg_graph_free(pair);
}

TEST_CASE("runs are deterministic and complete starts stop at once") {
  ncg_scenario scenario;
  ncg_scenario_init(&scenario, 20, 0.5);
  CHECK(scenario.max_steps == 10000);
  CHECK(scenario.tries_per_step == 100);
  CHECK(scenario.accept_equal_cost_switch == 1);
  scenario.start = NCG_FROM_COMPLETE;
  scenario.seed = 5;

  ncg_run_summary summary;
  ncg_graph* final_graph = nullptr;
  REQUIRE(ncg_run(&scenario, &summary, &final_graph) == NCG_OK);
  CHECK(summary.steps == 1);
  CHECK(summary.termination == NCG_TERMINATED_LOCAL_MINIMUM);
  CHECK(ncg_graph_edge_count(final_graph) == 190);

  ncg_metrics metrics;
  CHECK(ncg_analyze(final_graph, 0.5, &metrics) == NCG_OK);
  CHECK(metrics.connected == 1);
  CHECK(metrics.is_complete == 1);
  CHECK(metrics.avg_distance == 1.0);
  CHECK(metrics.diameter == 1);
  ncg_graph_free(final_graph);

  ncg_run_summary again;
  REQUIRE(ncg_run(&scenario, &again, nullptr) == NCG_OK);
  CHECK(again.steps == summary.steps);
  CHECK(again.final_total_cost == summary.final_total_cost);

  scenario.n = 1;
  CHECK(ncg_run(&scenario, &summary, nullptr) == NCG_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("oracle functions through the C API") {
  ncg_optimum report;
  ncg_graph* best = nullptr;
  REQUIRE(ncg_social_optimum(4, 10.0, &report, &best) == NCG_OK);
  CHECK(report.optimal_total_cost == 48.0);
  CHECK(report.optimizer_count == 4);
  ncg_metrics metrics;
  CHECK(ncg_analyze(best, 10.0, &metrics) == NCG_OK);
  CHECK(metrics.is_star == 1);
  CHECK(ncg_social_optimum(9, 1.0, &report, nullptr) == NCG_ERROR_INVALID_ARGUMENT);

  int is_nash = -1;
  CHECK(ncg_verify_nash(best, 10.0, NCG_SELFISH, NCG_MOVES_BUY_SELL, &is_nash) == NCG_OK);
  CHECK(is_nash == 1);
  int is_min = -1;
  CHECK(ncg_is_local_minimum(best, 10.0, NCG_SELFISH, NCG_MOVES_BUY_SELL, &is_min) == NCG_OK);
  long long degenerate = -1;
  CHECK(ncg_degeneracy_scan(best, 10.0, NCG_UNSELFISH, NCG_MOVES_BUY_SELL, &degenerate) ==
        NCG_OK);
  CHECK(degenerate >= 0);
  int three = -1;
  CHECK(ncg_three_centre_structure(best, &three) == NCG_OK);
  CHECK(three == 0);
  ncg_graph_free(best);
}

TEST_CASE("sweeps through the C API") {
  const fs::path dir = fs::temp_directory_path() / "ncgsim_capi" / "sweep";
  fs::remove_all(dir);
  ncg_sweep_plan* plan = nullptr;
  REQUIRE(ncg_sweep_plan_new(8, &plan) == NCG_OK);
  CHECK(ncg_sweep_plan_set_runs(plan, 2) == NCG_OK);
  CHECK(ncg_sweep_plan_set_base_seed(plan, 77) == NCG_OK);
  CHECK(ncg_sweep_plan_set_output_dir(plan, dir.string().c_str()) == NCG_OK);
  const double grid[] = {0.5, 2.0};
  CHECK(ncg_sweep_plan_set_alpha_grid(plan, grid, 2) == NCG_OK);
  CHECK(ncg_sweep_plan_set_max_steps(plan, 60) == NCG_OK);
  CHECK(ncg_sweep_plan_select_scenario(plan, NCG_SELFISH, NCG_FROM_SCRATCH, NCG_MOVES_BUY_SELL) ==
        NCG_OK);
  CHECK(ncg_sweep_plan_select_scenario(plan, NCG_UNSELFISH, NCG_FROM_COMPLETE,
                                       NCG_MOVES_BUY_SELL_SWITCH) == NCG_OK);
  CHECK(ncg_sweep_plan_set_scenario_n(plan, NCG_UNSELFISH, NCG_FROM_COMPLETE,
                                      NCG_MOVES_BUY_SELL_SWITCH, 4) == NCG_OK);
  CHECK(ncg_sweep_execute(plan, 2) == NCG_OK);
  ncg_sweep_plan_free(plan);
  CHECK(fs::exists(dir / "summary.csv"));
  CHECK(fs::exists(dir / "runs" / "selfish_scratch_bs__a0.5.csv"));
  CHECK(fs::exists(dir / "runs" / "unselfish_complete_bssw__a2.csv"));

  const fs::path tables = dir / "tables";
  CHECK(ncg_emit_figure_tables(dir.string().c_str(), tables.string().c_str()) == NCG_OK);
  CHECK(fs::exists(tables / "selfish_scratch_bs__edges.csv"));
  CHECK(ncg_emit_figure_tables("/nonexistent/ncgsim", tables.string().c_str()) == NCG_ERROR_IO);
}
