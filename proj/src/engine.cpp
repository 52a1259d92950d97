#include "ncg/engine.hpp"

#include <stdexcept>
#include <utility>

namespace ncg {

void validate(const ScenarioConfig& config) {
  if (config.n < 2) throw std::invalid_argument("scenario needs at least 2 nodes");
  if (!(config.alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (config.max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  if (config.tries_per_step < 1) throw std::invalid_argument("tries_per_step must be at least 1");
}

OwnedGraph initial_graph(const ScenarioConfig& config, Rng& rng) {
  validate(config);
  return config.start == StartCondition::FromScratch ? OwnedGraph::new_empty(config.n)
                                                     : OwnedGraph::new_complete(config.n, rng);
}

RunOutcome run(const ScenarioConfig& config) {
  validate(config);
  Rng rng(config.seed);
  OwnedGraph g = initial_graph(config, rng);
  const CostView view{config.behaviour, config.alpha, config.n};
  const AcceptancePolicy policy{config.accept_equal_cost_switch};
  const bool unselfish = config.behaviour == Behaviour::Unselfish;
  // The ordered distance sum only changes when a move is applied; caching it
  // saves one all-pairs pass per unselfish evaluation.
  double ordered_sum = unselfish ? ordered_effective_sum(g, config.alpha) : 0.0;
  long long accepted = 0;

  const auto try_move = [&](const MoveProposal& p) {
    double after_sum = 0.0;
    const double delta = evaluate_in_place(g, p, view, unselfish ? &ordered_sum : nullptr,
                                           unselfish ? &after_sum : nullptr);
    if (!accept(delta, p.kind, policy)) return false;
    apply(g, p);
    if (unselfish) ordered_sum = after_sum;
    ++accepted;
    return true;
  };

  for (int step = 1; step <= config.max_steps; ++step) {
    bool accepted_this_step = false;
    for (int t = 0; t < config.tries_per_step; ++t) {
      std::optional<MoveProposal> proposal;
      if (config.move_set == MoveSet::BuySellPlusSwitch && rng.coin()) {
        proposal = propose_random_switch(g, rng);
      } else {
        proposal = propose_random_buysell(g, rng);
      }
      if (!proposal) continue;
      if (try_move(*proposal)) {
        accepted_this_step = true;
        if (config.single_acceptance_per_step) break;
      }
    }
    if (!accepted_this_step) {
      bool found = false;
      for (const MoveProposal& p : enumerate_all_moves(g, config.move_set, rng)) {
        if (try_move(p)) {
          found = true;
          break;
        }
      }
      if (!found) {
        const double final_cost = total_cost(g, config.alpha);
        return RunOutcome{std::move(g), step, Termination::LocalMinimum, accepted, final_cost};
      }
    }
  }
  const double final_cost = total_cost(g, config.alpha);
  return RunOutcome{std::move(g), config.max_steps, Termination::StepCapReached, accepted,
                    final_cost};
}

bool is_local_minimum(const OwnedGraph& g, const CostView& view, MoveSet move_set,
                      const AcceptancePolicy& policy) {
  OwnedGraph scratch = g;
  return !scan_moves(scratch, move_set, [&](const MoveProposal& p) {
    return accept(evaluate_in_place(scratch, p, view), p.kind, policy);
  });
}

}  // namespace ncg
