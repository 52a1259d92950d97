// Command-line front end for the ncgsim shared library. Talks to the
// simulator exclusively through the C API in ncgsim.h.
//
// Exit status: 0 success, 1 usage error, 2 runtime error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncgsim.h"

namespace {

std::string real6(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

int behaviour_code(const std::string& label) {
  return label == "unselfish" ? NCG_UNSELFISH : NCG_SELFISH;
}

int start_code(const std::string& label) {
  return label == "complete" ? NCG_FROM_COMPLETE : NCG_FROM_SCRATCH;
}

int moves_code(const std::string& label) {
  return label == "bs+sw" ? NCG_MOVES_BUY_SELL_SWITCH : NCG_MOVES_BUY_SELL;
}

int runtime_failure() {
  std::cerr << "error: " << ncg_last_error_message() << '\n';
  return 2;
}

int usage_failure(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return 1;
}

bool parse_alpha_grid(const std::string& text, std::vector<double>& grid,
                      std::string& error) {
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const double value = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      if (!(value > 0.0)) {
        error = "alpha values must be positive: " + item;
        return false;
      }
      grid.push_back(value);
    } catch (const std::exception&) {
      error = "cannot parse alpha value: " + item;
      return false;
    }
  }
  if (grid.empty()) {
    error = "alpha grid is empty";
    return false;
  }
  return true;
}

void print_metrics(const ncg_metrics& m) {
  std::cout << "edges: " << m.edges << '\n'
            << "connected: " << m.connected << '\n'
            << "avg_distance: " << real6(m.avg_distance) << '\n'
            << "diameter: " << m.diameter << '\n'
            << "is_tree: " << m.is_tree << '\n'
            << "is_star: " << m.is_star << '\n'
            << "is_complete: " << m.is_complete << '\n'
            << "total_cost: " << real6(m.total_cost) << '\n';
}

const auto kNodeCountCheck = CLI::Validator(
    [](std::string& value) -> std::string {
      try {
        if (std::stoll(value) < 2) return "a simulation needs at least 2 nodes";
      } catch (const std::exception&) {
        return "not a number: " + value;
      }
      return {};
    },
    "N>=2");

struct RunArgs {
  int n = 0;
  double alpha = 0.0;
  std::string behaviour = "selfish";
  std::string start = "scratch";
  std::string moves = "bs";
  std::uint64_t seed = 0;
  int max_steps = 10000;
  int tries_per_step = 100;
  std::string out;
};

int do_run(const RunArgs& args) {
  ncg_scenario scenario;
  ncg_scenario_init(&scenario, args.n, args.alpha);
  scenario.behaviour = behaviour_code(args.behaviour);
  scenario.start = start_code(args.start);
  scenario.move_set = moves_code(args.moves);
  scenario.max_steps = args.max_steps;
  scenario.tries_per_step = args.tries_per_step;
  scenario.seed = args.seed;

  ncg_run_summary summary;
  ncg_graph* final_graph = nullptr;
  if (ncg_run(&scenario, &summary, &final_graph) != NCG_OK) return runtime_failure();

  std::cout << "n: " << args.n << '\n'
            << "alpha: " << real6(args.alpha) << '\n'
            << "behaviour: " << args.behaviour << '\n'
            << "start: " << args.start << '\n'
            << "moves: " << args.moves << '\n'
            << "seed: " << args.seed << '\n'
            << "max_steps: " << args.max_steps << '\n'
            << "tries_per_step: " << args.tries_per_step << '\n'
            << "steps: " << summary.steps << '\n'
            << "terminated: "
            << (summary.termination == NCG_TERMINATED_LOCAL_MINIMUM ? "local_min" : "step_cap")
            << '\n'
            << "accepted_moves: " << summary.accepted_moves << '\n';
  ncg_metrics metrics;
  if (ncg_analyze(final_graph, args.alpha, &metrics) != NCG_OK) {
    ncg_graph_free(final_graph);
    return runtime_failure();
  }
  print_metrics(metrics);
  if (!args.out.empty()) {
    if (ncg_graph_save(final_graph, args.out.c_str()) != NCG_OK) {
      ncg_graph_free(final_graph);
      return runtime_failure();
    }
    std::cout << "graph_file: " << args.out << '\n';
  }
  ncg_graph_free(final_graph);
  return 0;
}

struct SweepArgs {
  int n = 100;
  int runs = 100;
  std::uint64_t seed = 0;
  std::string alpha_grid = "paper";
  std::string out;
  int workers = 1;
  int max_steps = 10000;
  int tries_per_step = 100;
  std::string behaviour;
  std::string start;
  std::string moves;
};

int do_sweep(const SweepArgs& args) {
  ncg_sweep_plan* plan = nullptr;
  if (ncg_sweep_plan_new(args.n, &plan) != NCG_OK) return runtime_failure();
  struct PlanGuard {
    ncg_sweep_plan* plan;
    ~PlanGuard() { ncg_sweep_plan_free(plan); }
  } guard{plan};

  if (ncg_sweep_plan_set_runs(plan, args.runs) != NCG_OK) return runtime_failure();
  if (ncg_sweep_plan_set_base_seed(plan, args.seed) != NCG_OK) return runtime_failure();
  if (ncg_sweep_plan_set_output_dir(plan, args.out.c_str()) != NCG_OK) return runtime_failure();
  if (ncg_sweep_plan_set_max_steps(plan, args.max_steps) != NCG_OK) return runtime_failure();
  if (ncg_sweep_plan_set_tries_per_step(plan, args.tries_per_step) != NCG_OK) {
    return runtime_failure();
  }
  if (args.alpha_grid != "paper") {
    std::vector<double> grid;
    std::string error;
    if (!parse_alpha_grid(args.alpha_grid, grid, error)) return usage_failure(error);
    if (ncg_sweep_plan_set_alpha_grid(plan, grid.data(), static_cast<int>(grid.size())) !=
        NCG_OK) {
      return runtime_failure();
    }
  }

  int scenario_count = 0;
  const std::vector<std::string> behaviours =
      args.behaviour.empty() ? std::vector<std::string>{"selfish", "unselfish"}
                             : std::vector<std::string>{args.behaviour};
  const std::vector<std::string> starts =
      args.start.empty() ? std::vector<std::string>{"scratch", "complete"}
                         : std::vector<std::string>{args.start};
  const std::vector<std::string> move_sets =
      args.moves.empty() ? std::vector<std::string>{"bs", "bs+sw"}
                         : std::vector<std::string>{args.moves};
  for (const std::string& b : behaviours) {
    for (const std::string& s : starts) {
      for (const std::string& m : move_sets) {
        if (ncg_sweep_plan_select_scenario(plan, behaviour_code(b), start_code(s),
                                           moves_code(m)) != NCG_OK) {
          return runtime_failure();
        }
        ++scenario_count;
      }
    }
  }

  std::cout << "n: " << args.n << '\n'
            << "runs_per_cell: " << args.runs << '\n'
            << "seed: " << args.seed << '\n'
            << "alpha_grid: " << args.alpha_grid << '\n'
            << "scenarios: " << scenario_count << '\n'
            << "workers: " << args.workers << '\n';
  if (ncg_sweep_execute(plan, args.workers) != NCG_OK) return runtime_failure();
  std::cout << "output_dir: " << args.out << '\n'
            << "summary: " << args.out << "/summary.csv" << '\n';
  return 0;
}

int do_analyze(const std::string& file, double alpha) {
  ncg_graph* g = nullptr;
  if (ncg_graph_load(file.c_str(), &g) != NCG_OK) return runtime_failure();
  std::cout << "graph_file: " << file << '\n'
            << "n: " << ncg_graph_node_count(g) << '\n'
            << "alpha: " << real6(alpha) << '\n';
  ncg_metrics metrics;
  if (ncg_analyze(g, alpha, &metrics) != NCG_OK) {
    ncg_graph_free(g);
    return runtime_failure();
  }
  print_metrics(metrics);
  int three_centre = 0;
  if (ncg_three_centre_structure(g, &three_centre) != NCG_OK) {
    ncg_graph_free(g);
    return runtime_failure();
  }
  std::cout << "three_centre_structure: " << three_centre << '\n';
  ncg_graph_free(g);
  return 0;
}

struct OracleArgs {
  int n = 0;
  double alpha = 0.0;
  std::string file;
  std::string behaviour = "selfish";
  std::string moves = "bs";
  std::string out;
};

int do_oracle(const OracleArgs& args) {
  if (!args.file.empty()) {
    ncg_graph* g = nullptr;
    if (ncg_graph_load(args.file.c_str(), &g) != NCG_OK) return runtime_failure();
    int is_nash = 0;
    int is_min = 0;
    long long zero_moves = 0;
    const int behaviour = behaviour_code(args.behaviour);
    const int moves = moves_code(args.moves);
    if (ncg_verify_nash(g, args.alpha, behaviour, moves, &is_nash) != NCG_OK ||
        ncg_is_local_minimum(g, args.alpha, behaviour, moves, &is_min) != NCG_OK ||
        ncg_degeneracy_scan(g, args.alpha, behaviour, moves, &zero_moves) != NCG_OK) {
      ncg_graph_free(g);
      return runtime_failure();
    }
    std::cout << "graph_file: " << args.file << '\n'
              << "alpha: " << real6(args.alpha) << '\n'
              << "behaviour: " << args.behaviour << '\n'
              << "moves: " << args.moves << '\n'
              << "is_nash: " << is_nash << '\n'
              << "is_local_minimum: " << is_min << '\n'
              << "zero_delta_moves: " << zero_moves << '\n';
    ncg_graph_free(g);
    return 0;
  }
  ncg_optimum report;
  ncg_graph* representative = nullptr;
  if (ncg_social_optimum(args.n, args.alpha, &report, &representative) != NCG_OK) {
    return runtime_failure();
  }
  ncg_metrics metrics;
  if (ncg_analyze(representative, args.alpha, &metrics) != NCG_OK) {
    ncg_graph_free(representative);
    return runtime_failure();
  }
  std::cout << "n: " << args.n << '\n'
            << "alpha: " << real6(args.alpha) << '\n'
            << "optimal_total_cost: " << real6(report.optimal_total_cost) << '\n'
            << "optimizer_count: " << report.optimizer_count << '\n'
            << "representative_edges: " << metrics.edges << '\n'
            << "representative_is_tree: " << metrics.is_tree << '\n'
            << "representative_is_star: " << metrics.is_star << '\n'
            << "representative_is_complete: " << metrics.is_complete << '\n';
  if (!args.out.empty()) {
    if (ncg_graph_save(representative, args.out.c_str()) != NCG_OK) {
      ncg_graph_free(representative);
      return runtime_failure();
    }
    std::cout << "graph_file: " << args.out << '\n';
  }
  ncg_graph_free(representative);
  return 0;
}

int do_tables(const std::string& sweep_dir, const std::string& out_dir) {
  if (ncg_emit_figure_tables(sweep_dir.c_str(), out_dir.c_str()) != NCG_OK) {
    return runtime_failure();
  }
  std::cout << "tables_dir: " << out_dir << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ncgsim — network creation game simulator"};
  app.require_subcommand(1);

  const auto behaviour_values = CLI::IsMember({"selfish", "unselfish"});
  const auto start_values = CLI::IsMember({"scratch", "complete"});
  const auto moves_values = CLI::IsMember({"bs", "bs+sw"});

  RunArgs run_args;
  CLI::App* run_cmd = app.add_subcommand("run", "Execute one simulation run");
  run_cmd->add_option("--n", run_args.n, "Number of agents")
      ->required()
      ->check(kNodeCountCheck);
  run_cmd->add_option("--alpha", run_args.alpha, "Cost of one edge")
      ->required()
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--behaviour", run_args.behaviour, "Agent behaviour")
      ->check(behaviour_values);
  run_cmd->add_option("--start", run_args.start, "Start condition")->check(start_values);
  run_cmd->add_option("--moves", run_args.moves, "Move set")->check(moves_values);
  run_cmd->add_option("--seed", run_args.seed, "Random seed (default 0)");
  run_cmd->add_option("--max-steps", run_args.max_steps, "Step cap")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--tries-per-step", run_args.tries_per_step, "Random tries per step")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--out", run_args.out, "Write the final graph to this file");

  SweepArgs sweep_args;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Execute an experiment matrix");
  sweep_cmd->add_option("--n", sweep_args.n, "Number of agents")->check(kNodeCountCheck);
  sweep_cmd->add_option("--runs", sweep_args.runs, "Runs per (scenario, alpha) cell")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", sweep_args.seed, "Base seed (default 0)");
  sweep_cmd->add_option("--alpha-grid", sweep_args.alpha_grid,
                        "Comma-separated alpha values, or 'paper' for the standard 52-value grid");
  sweep_cmd->add_option("--out", sweep_args.out, "Output directory")->required();
  sweep_cmd->add_option("--workers", sweep_args.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--max-steps", sweep_args.max_steps, "Step cap")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--tries-per-step", sweep_args.tries_per_step, "Random tries per step")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--behaviour", sweep_args.behaviour, "Restrict to one behaviour")
      ->check(behaviour_values);
  sweep_cmd->add_option("--start", sweep_args.start, "Restrict to one start condition")
      ->check(start_values);
  sweep_cmd->add_option("--moves", sweep_args.moves, "Restrict to one move set")
      ->check(moves_values);

  std::string analyze_file;
  double analyze_alpha = 0.0;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Metrics for a persisted graph file");
  analyze_cmd->add_option("graph", analyze_file, "Edge-list file")->required();
  analyze_cmd->add_option("--alpha", analyze_alpha, "Cost of one edge")
      ->required()
      ->check(CLI::PositiveNumber);

  OracleArgs oracle_args;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Exhaustive social optimum (--n) or equilibrium check for a graph file");
  oracle_cmd->add_option("graph", oracle_args.file, "Edge-list file to check");
  oracle_cmd->add_option("--n", oracle_args.n, "Scan all graphs on this many nodes (2..7)");
  oracle_cmd->add_option("--alpha", oracle_args.alpha, "Cost of one edge")
      ->required()
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--behaviour", oracle_args.behaviour, "Agent behaviour for the check")
      ->check(behaviour_values);
  oracle_cmd->add_option("--moves", oracle_args.moves, "Move set for the check")
      ->check(moves_values);
  oracle_cmd->add_option("--out", oracle_args.out, "Write the optimal graph to this file");

  std::string tables_dir;
  std::string tables_out;
  CLI::App* tables_cmd =
      app.add_subcommand("tables", "Emit plot-ready figure tables from a sweep directory");
  tables_cmd->add_option("sweep_dir", tables_dir, "Directory produced by 'sweep'")->required();
  tables_cmd->add_option("--out", tables_out, "Destination directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (run_cmd->parsed()) return do_run(run_args);
  if (sweep_cmd->parsed()) return do_sweep(sweep_args);
  if (analyze_cmd->parsed()) return do_analyze(analyze_file, analyze_alpha);
  if (oracle_cmd->parsed()) {
    const bool has_file = !oracle_args.file.empty();
    const bool has_n = oracle_cmd->count("--n") > 0;
    if (has_file == has_n) {
      return usage_failure("oracle needs either a graph file or --n, not both");
    }
    return do_oracle(oracle_args);
  }
  if (tables_cmd->parsed()) return do_tables(tables_dir, tables_out);
  return usage_failure("no subcommand given");
}
