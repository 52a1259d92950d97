#pragma once

#include <cstdint>

#include "ncg/moves.hpp"

namespace ncg {

enum class StartCondition { FromScratch, FromComplete };
enum class Termination { LocalMinimum, StepCapReached };

// One cell of the experiment matrix. Defaults match the reference protocol:
// 10000 steps of 100 random tries each.
struct ScenarioConfig {
  int n = 0;
  double alpha = 0.0;
  Behaviour behaviour = Behaviour::Selfish;
  StartCondition start = StartCondition::FromScratch;
  MoveSet move_set = MoveSet::BuySellOnly;
  int max_steps = 10000;
  int tries_per_step = 100;
  std::uint64_t seed = 0;
  // Policy knobs for sensitivity runs; leave at defaults for the reference
  // behaviour.
  bool accept_equal_cost_switch = true;
  bool single_acceptance_per_step = false;
};

void validate(const ScenarioConfig& config);

struct RunOutcome {
  OwnedGraph final_graph;
  int steps;
  Termination termination;
  long long accepted_moves;
  double final_total_cost;
};

// Empty graph for FromScratch, randomly-owned complete graph for
// FromComplete.
OwnedGraph initial_graph(const ScenarioConfig& config, Rng& rng);

// Executes one run. Each step draws tries_per_step random proposals (move
// kind by fair coin when both kinds are enabled) and applies every accepted
// one immediately, so later tries within the step see the mutated graph.
// When a whole step passes without an acceptance, every possible move is
// checked once in a random order and the first acceptable one is applied;
// if that scan also comes up empty the run stops in its local minimum, with
// the current step counted (a run that starts in one reports steps = 1).
// Runs that never stall end at the step cap.
//
// All randomness comes from one mt19937_64 stream seeded with config.seed,
// consumed in a fixed order: ownership coins for a complete start (pairs in
// (i<j) lexicographic order), then per try the move-kind coin (only when
// both kinds are enabled) followed by the proposal draw, and one shuffle
// per exhaustive scan. Identical configs replay identical runs.
RunOutcome run(const ScenarioConfig& config);

// True iff no move in the full move space is acceptable (non-worsening for
// its deciding agent under view).
bool is_local_minimum(const OwnedGraph& g, const CostView& view, MoveSet move_set,
                      const AcceptancePolicy& policy = {});

}  // namespace ncg
