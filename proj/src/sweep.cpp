#include "ncg/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fs = std::filesystem;

namespace ncg {

int scenario_id(const SweepScenario& s) {
  return static_cast<int>(s.behaviour) * 4 + static_cast<int>(s.start) * 2 +
         static_cast<int>(s.move_set);
}

std::string behaviour_label(Behaviour b) {
  return b == Behaviour::Selfish ? "selfish" : "unselfish";
}

std::string start_label(StartCondition s) {
  return s == StartCondition::FromScratch ? "scratch" : "complete";
}

std::string moves_label(MoveSet m) { return m == MoveSet::BuySellOnly ? "bs" : "bs+sw"; }

namespace {

// File-name-safe move-set tag ("bs+sw" carries a '+').
std::string moves_file_label(MoveSet m) { return m == MoveSet::BuySellOnly ? "bs" : "bssw"; }

Behaviour parse_behaviour(const std::string& s) {
  if (s == "selfish") return Behaviour::Selfish;
  if (s == "unselfish") return Behaviour::Unselfish;
  throw std::runtime_error("unknown behaviour label: " + s);
}

StartCondition parse_start(const std::string& s) {
  if (s == "scratch") return StartCondition::FromScratch;
  if (s == "complete") return StartCondition::FromComplete;
  throw std::runtime_error("unknown start label: " + s);
}

MoveSet parse_moves(const std::string& s) {
  if (s == "bs") return MoveSet::BuySellOnly;
  if (s == "bs+sw") return MoveSet::BuySellPlusSwitch;
  throw std::runtime_error("unknown move-set label: " + s);
}

Termination parse_termination(const std::string& s) {
  if (s == "local_min") return Termination::LocalMinimum;
  if (s == "step_cap") return Termination::StepCapReached;
  throw std::runtime_error("unknown termination label: " + s);
}

std::string termination_label(Termination t) {
  return t == Termination::LocalMinimum ? "local_min" : "step_cap";
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

std::string scenario_name(const SweepScenario& s) {
  return behaviour_label(s.behaviour) + "_" + start_label(s.start) + "_" +
         moves_file_label(s.move_set);
}

std::vector<SweepScenario> all_scenarios() {
  std::vector<SweepScenario> out;
  for (Behaviour b : {Behaviour::Selfish, Behaviour::Unselfish}) {
    for (StartCondition st : {StartCondition::FromScratch, StartCondition::FromComplete}) {
      for (MoveSet m : {MoveSet::BuySellOnly, MoveSet::BuySellPlusSwitch}) {
        out.push_back(SweepScenario{b, st, m});
      }
    }
  }
  return out;
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid = {0.5, 0.7, 1.0, 1.3, 1.5, 1.7, 2.0, 2.3,
                              2.5, 2.7, 3.0, 3.3, 3.5, 3.7, 4.0};
  for (int a = 5; a <= 20; ++a) grid.push_back(a);
  for (int a = 30; a <= 200; a += 10) grid.push_back(a);
  grid.push_back(300);
  grid.push_back(400);
  grid.push_back(500);
  return grid;
}

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

std::string run_csv_header() {
  return "scenario,behaviour,start,moves,alpha,run,seed,steps,terminated,edges,"
         "avg_distance,diameter,is_tree,is_star,total_cost";
}

std::string run_csv_row(const RunRecord& r) {
  std::ostringstream out;
  out << r.scenario << ',' << behaviour_label(r.behaviour) << ',' << start_label(r.start) << ','
      << moves_label(r.move_set) << ',' << format_real(r.alpha) << ',' << r.run << ',' << r.seed
      << ',' << r.steps << ',' << termination_label(r.terminated) << ',' << r.edges << ','
      << format_real(r.avg_distance) << ',' << r.diameter << ',' << (r.is_tree ? 1 : 0) << ','
      << (r.is_star ? 1 : 0) << ',' << format_real(r.total_cost);
  return out.str();
}

RunRecord parse_run_csv_row(const std::string& line) {
  const std::vector<std::string> f = split_csv(line);
  if (f.size() != 15) throw std::runtime_error("per-run CSV row must have 15 fields");
  RunRecord r;
  r.scenario = f[0];
  r.behaviour = parse_behaviour(f[1]);
  r.start = parse_start(f[2]);
  r.move_set = parse_moves(f[3]);
  r.alpha = std::stod(f[4]);
  r.run = std::stoi(f[5]);
  r.seed = std::stoull(f[6]);
  r.steps = std::stoi(f[7]);
  r.terminated = parse_termination(f[8]);
  r.edges = std::stoll(f[9]);
  r.avg_distance = std::stod(f[10]);
  r.diameter = std::stoi(f[11]);
  r.is_tree = f[12] == "1";
  r.is_star = f[13] == "1";
  r.total_cost = std::stod(f[14]);
  return r;
}

namespace {

struct CellPlan {
  SweepScenario scenario;
  double alpha = 0.0;
  int alpha_index = 0;
  int n = 0;
  fs::path file;
  bool complete = false;
};

bool cell_file_complete(const fs::path& path, int expected_runs) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line;
  if (!std::getline(in, line) || line != run_csv_header()) return false;
  int rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  return rows == expected_runs;
}

void validate_plan(const SweepPlan& plan) {
  if (plan.n < 2) throw std::invalid_argument("sweep plan needs n >= 2");
  if (plan.runs_per_cell < 1) throw std::invalid_argument("runs_per_cell must be at least 1");
  if (plan.alpha_grid.empty()) throw std::invalid_argument("alpha grid is empty");
  if (plan.scenarios.empty()) throw std::invalid_argument("scenario list is empty");
  if (plan.output_dir.empty()) throw std::invalid_argument("output directory is not set");
  std::set<double> alphas;
  for (double a : plan.alpha_grid) {
    if (!(a > 0.0)) throw std::invalid_argument("alpha grid values must be positive");
    if (!alphas.insert(a).second) throw std::invalid_argument("alpha grid has duplicates");
  }
  std::set<int> ids;
  for (const SweepScenario& s : plan.scenarios) {
    if (!ids.insert(scenario_id(s)).second) {
      throw std::invalid_argument("scenario list has duplicates");
    }
  }
  for (int o : plan.n_override) {
    if (o != 0 && o < 2) throw std::invalid_argument("scenario n override must be >= 2");
  }
}

void atomic_write(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  fs::rename(tmp, path);
}

RunMetrics metrics_from_record(const RunRecord& r) {
  RunMetrics m;
  m.edges = r.edges;
  m.connected = r.avg_distance >= 0.0;
  m.avg_distance = r.avg_distance;
  m.diameter = r.diameter;
  m.is_tree = r.is_tree;
  m.is_star = r.is_star;
  m.steps = r.steps;
  m.total_cost = r.total_cost;
  return m;
}

CellResult summarise_cell(std::vector<RunRecord> records) {
  CellResult cell;
  cell.scenario = SweepScenario{records.front().behaviour, records.front().start,
                                records.front().move_set};
  cell.alpha = records.front().alpha;
  std::vector<RunMetrics> valid;
  int step_capped = 0;
  for (const RunRecord& r : records) {
    if (r.terminated == Termination::StepCapReached) ++step_capped;
    const RunMetrics m = metrics_from_record(r);
    if (m.connected) {
      valid.push_back(m);
    } else {
      ++cell.invalid_runs;
    }
  }
  if (!valid.empty()) cell.stats = aggregate(valid);
  cell.step_cap_fraction =
      static_cast<double>(step_capped) / static_cast<double>(records.size());
  cell.records = std::move(records);
  return cell;
}

std::string summary_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "scenario,behaviour,start,moves,alpha,runs,invalid_runs,"
         "steps_min,steps_mean,steps_max,edges_min,edges_mean,edges_max,"
         "avg_distance_min,avg_distance_mean,avg_distance_max,"
         "tree_probability,star_probability,step_cap_fraction\n";
  for (const CellResult& c : report.cells) {
    out << scenario_name(c.scenario) << ',' << behaviour_label(c.scenario.behaviour) << ','
        << start_label(c.scenario.start) << ',' << moves_label(c.scenario.move_set) << ','
        << format_real(c.alpha) << ',' << c.records.size() << ',' << c.invalid_runs << ','
        << format_real(c.stats.steps.min) << ',' << format_real(c.stats.steps.mean) << ','
        << format_real(c.stats.steps.max) << ',' << format_real(c.stats.edges.min) << ','
        << format_real(c.stats.edges.mean) << ',' << format_real(c.stats.edges.max) << ','
        << format_real(c.stats.avg_distance.min) << ',' << format_real(c.stats.avg_distance.mean)
        << ',' << format_real(c.stats.avg_distance.max) << ','
        << format_real(c.stats.tree_probability) << ',' << format_real(c.stats.star_probability)
        << ',' << format_real(c.step_cap_fraction) << '\n';
  }
  return out.str();
}

}  // namespace

SweepReport execute(const SweepPlan& plan, int workers) {
  validate_plan(plan);
  const fs::path dir(plan.output_dir);
  const fs::path runs_dir = dir / "runs";
  fs::create_directories(runs_dir);
  if (plan.persist_graphs) fs::create_directories(dir / "graphs");

  std::vector<CellPlan> cells;
  for (const SweepScenario& scenario : plan.scenarios) {
    for (std::size_t ai = 0; ai < plan.alpha_grid.size(); ++ai) {
      CellPlan cell;
      cell.scenario = scenario;
      cell.alpha = plan.alpha_grid[ai];
      cell.alpha_index = static_cast<int>(ai);
      const int override_n = plan.n_override[static_cast<std::size_t>(scenario_id(scenario))];
      cell.n = override_n != 0 ? override_n : plan.n;
      cell.file = runs_dir / (scenario_name(scenario) + "__a" + format_real(cell.alpha) + ".csv");
      cell.complete = cell_file_complete(cell.file, plan.runs_per_cell);
      cells.push_back(cell);
    }
  }

  struct Task {
    std::size_t cell = 0;
    int run = 0;
  };
  std::vector<Task> tasks;
  std::vector<std::vector<RunRecord>> produced(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].complete) continue;
    produced[c].resize(static_cast<std::size_t>(plan.runs_per_cell));
    for (int r = 0; r < plan.runs_per_cell; ++r) tasks.push_back(Task{c, r});
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  const auto work = [&]() {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (first_error) return;
      }
      try {
        const Task task = tasks[t];
        const CellPlan& cell = cells[task.cell];
        ScenarioConfig config;
        config.n = cell.n;
        config.alpha = cell.alpha;
        config.behaviour = cell.scenario.behaviour;
        config.start = cell.scenario.start;
        config.move_set = cell.scenario.move_set;
        config.max_steps = plan.max_steps;
        config.tries_per_step = plan.tries_per_step;
        config.seed = derive_seed(plan.base_seed,
                                  static_cast<std::uint64_t>(scenario_id(cell.scenario)),
                                  static_cast<std::uint64_t>(cell.alpha_index),
                                  static_cast<std::uint64_t>(task.run));
        const RunOutcome outcome = run(config);
        const RunMetrics m = run_metrics(outcome.final_graph, outcome.steps, cell.alpha);
        RunRecord record;
        record.scenario = scenario_name(cell.scenario);
        record.behaviour = cell.scenario.behaviour;
        record.start = cell.scenario.start;
        record.move_set = cell.scenario.move_set;
        record.alpha = cell.alpha;
        record.run = task.run;
        record.seed = config.seed;
        record.steps = outcome.steps;
        record.terminated = outcome.termination;
        record.edges = m.edges;
        record.avg_distance = m.avg_distance;
        record.diameter = m.diameter;
        record.is_tree = m.is_tree;
        record.is_star = m.is_star;
        record.total_cost = m.total_cost;
        produced[task.cell][static_cast<std::size_t>(task.run)] = record;
        if (plan.persist_graphs) {
          const fs::path graph_file =
              dir / "graphs" /
              (record.scenario + "__a" + format_real(cell.alpha) + "__r" +
               std::to_string(task.run) + ".edges");
          save_edge_list(outcome.final_graph, graph_file.string());
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const int thread_count = std::max(1, workers);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(thread_count));
  for (int w = 0; w < thread_count; ++w) pool.emplace_back(work);
  for (std::thread& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);

  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].complete) continue;
    std::ostringstream content;
    content << run_csv_header() << '\n';
    for (const RunRecord& r : produced[c]) content << run_csv_row(r) << '\n';
    atomic_write(cells[c].file, content.str());
  }

  SweepReport report = load_report(plan.output_dir);
  atomic_write(dir / "summary.csv", summary_csv(report));
  return report;
}

SweepReport load_report(const std::string& dir) {
  const fs::path runs_dir = fs::path(dir) / "runs";
  if (!fs::is_directory(runs_dir)) {
    throw std::runtime_error("no runs directory under " + dir);
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(runs_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  SweepReport report;
  for (const fs::path& file : files) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::string line;
    if (!std::getline(in, line) || line != run_csv_header()) {
      throw std::runtime_error("bad per-run CSV header in " + file.string());
    }
    std::vector<RunRecord> records;
    while (std::getline(in, line)) {
      if (!line.empty()) records.push_back(parse_run_csv_row(line));
    }
    if (records.empty()) throw std::runtime_error("empty per-run CSV: " + file.string());
    report.cells.push_back(summarise_cell(std::move(records)));
  }
  std::sort(report.cells.begin(), report.cells.end(), [](const CellResult& a, const CellResult& b) {
    const int ida = scenario_id(a.scenario);
    const int idb = scenario_id(b.scenario);
    return ida != idb ? ida < idb : a.alpha < b.alpha;
  });
  return report;
}

void emit_figure_tables(const SweepReport& report, const std::string& out_dir) {
  if (report.cells.empty()) throw std::invalid_argument("report has no cells");
  fs::create_directories(out_dir);
  std::vector<const CellResult*> order;
  order.reserve(report.cells.size());
  for (const CellResult& c : report.cells) order.push_back(&c);
  std::sort(order.begin(), order.end(), [](const CellResult* a, const CellResult* b) {
    const int ida = scenario_id(a->scenario);
    const int idb = scenario_id(b->scenario);
    return ida != idb ? ida < idb : a->alpha < b->alpha;
  });

  const auto summaries = [](const CellResult& c, const std::string& metric) -> MetricSummary {
    if (metric == "steps") return c.stats.steps;
    if (metric == "edges") return c.stats.edges;
    return c.stats.avg_distance;
  };

  std::string current;
  std::vector<const CellResult*> group;
  const auto flush_group = [&]() {
    if (group.empty()) return;
    for (const std::string& metric : {std::string("steps"), std::string("edges"),
                                      std::string("avg_distance")}) {
      std::ostringstream out;
      out << "alpha,min,mean,max\n";
      for (const CellResult* c : group) {
        const MetricSummary s = summaries(*c, metric);
        out << format_real(c->alpha) << ',' << format_real(s.min) << ',' << format_real(s.mean)
            << ',' << format_real(s.max) << '\n';
      }
      atomic_write(fs::path(out_dir) / (current + "__" + metric + ".csv"), out.str());
    }
    for (const std::string& metric : {std::string("tree_probability"),
                                      std::string("star_probability")}) {
      std::ostringstream out;
      out << "alpha,probability\n";
      for (const CellResult* c : group) {
        const double p = metric == "tree_probability" ? c->stats.tree_probability
                                                      : c->stats.star_probability;
        out << format_real(c->alpha) << ',' << format_real(p) << '\n';
      }
      atomic_write(fs::path(out_dir) / (current + "__" + metric + ".csv"), out.str());
    }
    group.clear();
  };
  for (const CellResult* c : order) {
    const std::string name = scenario_name(c->scenario);
    if (name != current) {
      flush_group();
      current = name;
    }
    group.push_back(c);
  }
  flush_group();
}

}  // namespace ncg
