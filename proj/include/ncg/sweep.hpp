#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ncg/analysis.hpp"
#include "ncg/engine.hpp"

namespace ncg {

struct SweepScenario {
  Behaviour behaviour = Behaviour::Selfish;
  StartCondition start = StartCondition::FromScratch;
  MoveSet move_set = MoveSet::BuySellOnly;
};

// Stable scenario numbering: behaviour*4 + start*2 + moves.
int scenario_id(const SweepScenario& s);
std::string scenario_name(const SweepScenario& s);
std::vector<SweepScenario> all_scenarios();

std::string behaviour_label(Behaviour b);
std::string start_label(StartCondition s);
std::string moves_label(MoveSet m);

// The default 52-value alpha grid: 0.5 to 4 in fine steps, 5..20 by 1,
// 30..200 by 10, then 300, 400, 500.
std::vector<double> default_alpha_grid();

struct SweepPlan {
  int n = 100;
  std::vector<double> alpha_grid = default_alpha_grid();
  std::vector<SweepScenario> scenarios = all_scenarios();
  int runs_per_cell = 100;
  std::uint64_t base_seed = 0;
  std::string output_dir;
  int max_steps = 10000;
  int tries_per_step = 100;
  // Per-scenario node-count override (0 = use n); lets expensive cells run
  // at reduced size.
  std::array<int, 8> n_override{};
  bool persist_graphs = false;
};

// One persisted per-run record; mirrors the per-run CSV schema.
struct RunRecord {
  std::string scenario;
  Behaviour behaviour = Behaviour::Selfish;
  StartCondition start = StartCondition::FromScratch;
  MoveSet move_set = MoveSet::BuySellOnly;
  double alpha = 0.0;
  int run = 0;
  std::uint64_t seed = 0;
  int steps = 0;
  Termination terminated = Termination::LocalMinimum;
  long long edges = 0;
  double avg_distance = -1.0;
  int diameter = -1;
  bool is_tree = false;
  bool is_star = false;
  double total_cost = 0.0;
};

std::string run_csv_header();
std::string run_csv_row(const RunRecord& r);
RunRecord parse_run_csv_row(const std::string& line);

// "%.6g" formatting used for every real in persisted output.
std::string format_real(double value);

struct CellResult {
  SweepScenario scenario;
  double alpha = 0.0;
  std::vector<RunRecord> records;
  AggregateStats stats;
  int invalid_runs = 0;       // disconnected finals, kept out of stats
  double step_cap_fraction = 0.0;
};

struct SweepReport {
  std::vector<CellResult> cells;
};

// Executes every (scenario, alpha, run) cell of the plan. Per-run records
// land in <output_dir>/runs/<scenario>__a<alpha>.csv (one file per cell,
// written atomically); cells whose file is already complete are skipped, so
// interrupted sweeps resume. Aggregates are recomputed from the persisted
// records, summarised in <output_dir>/summary.csv, and returned. Run seeds
// derive from (base_seed, scenario id, alpha index, run index) only, so
// outputs are identical for any worker count.
SweepReport execute(const SweepPlan& plan, int workers);

// Rebuilds a report by parsing every per-run CSV under <dir>/runs.
SweepReport load_report(const std::string& dir);

// One plot-ready table per (scenario, metric): alpha,min,mean,max for
// steps/edges/avg_distance and alpha,probability for tree/star.
void emit_figure_tables(const SweepReport& report, const std::string& out_dir);

}  // namespace ncg
