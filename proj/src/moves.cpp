#include "ncg/moves.hpp"

#include <stdexcept>

namespace ncg {

namespace {

// Cost of the deciding agent on the current graph, distances computed fresh.
double decider_cost(const OwnedGraph& g, int agent, const CostView& view,
                    double* ordered_sum_out) {
  if (view.behaviour == Behaviour::Selfish) {
    thread_local BfsScratch scratch;
    thread_local std::vector<int> row;
    row.resize(g.node_count());
    g.bfs_distances_into(agent, scratch, row);
    return view.alpha * g.owned_count(agent) +
           effective_row_sum(row, agent, view.alpha, view.n);
  }
  const double sum = ordered_effective_sum(g, view.alpha);
  if (ordered_sum_out) *ordered_sum_out = sum;
  return view.alpha * g.owned_count(agent) + sum;
}

void check_view(const OwnedGraph& g, const CostView& view) {
  if (!(view.alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (view.n != g.node_count()) throw std::invalid_argument("view.n does not match the graph");
}

}  // namespace

MoveProposal propose_random_buysell(const OwnedGraph& g, Rng& rng) {
  const int n = g.node_count();
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1);
  const std::uint64_t draw = rng.below(pairs);
  const int i = static_cast<int>(draw / (n - 1));
  const int rest = static_cast<int>(draw % (n - 1));
  const int j = rest < i ? rest : rest + 1;
  if (g.has_edge(i, j)) {
    return MoveProposal{MoveKind::Sell, i, j, -1, g.edge_owner(i, j)};
  }
  return MoveProposal{MoveKind::Buy, i, j, -1, i};
}

long long count_switch_triples(const OwnedGraph& g) {
  const int n = g.node_count();
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    total += static_cast<long long>(g.owned_count(i)) * (n - 1 - g.degree(i));
  }
  return total;
}

std::optional<MoveProposal> propose_random_switch(const OwnedGraph& g, Rng& rng) {
  const int n = g.node_count();
  const long long total = count_switch_triples(g);
  if (total == 0) return std::nullopt;
  std::uint64_t r = rng.below(static_cast<std::uint64_t>(total));
  int i = 0;
  std::uint64_t free_slots = 0;
  for (;; ++i) {
    free_slots = static_cast<std::uint64_t>(n - 1 - g.degree(i));
    const std::uint64_t here = static_cast<std::uint64_t>(g.owned_count(i)) * free_slots;
    if (r < here) break;
    r -= here;
  }
  int j_rank = static_cast<int>(r / free_slots);
  int k_rank = static_cast<int>(r % free_slots);
  int j = -1;
  for (int v = 0; v < n; ++v) {
    if (v != i && g.has_edge(i, v) && g.edge_owner(i, v) == i && j_rank-- == 0) {
      j = v;
      break;
    }
  }
  int k = -1;
  for (int v = 0; v < n; ++v) {
    if (v != i && !g.has_edge(i, v) && k_rank-- == 0) {
      k = v;
      break;
    }
  }
  return MoveProposal{MoveKind::Switch, i, j, k, i};
}

double evaluate(const OwnedGraph& g, const DistanceTable& dist, const MoveProposal& p,
                const CostView& view) {
  check_view(g, view);
  if (dist.n() != g.node_count()) throw std::invalid_argument("distance table does not match the graph");
  const int agent = p.deciding_agent;
  if (agent < 0 || agent >= g.node_count()) throw std::invalid_argument("deciding agent out of range");
  double before;
  if (view.behaviour == Behaviour::Selfish) {
    before = view.alpha * g.owned_count(agent) +
             effective_row_sum(dist.row(agent), agent, view.alpha, view.n);
  } else {
    before = view.alpha * g.owned_count(agent) + ordered_effective_sum(dist, view.alpha);
  }
  OwnedGraph changed = g;
  apply(changed, p);
  return decider_cost(changed, agent, view, nullptr) - before;
}

double evaluate_in_place(OwnedGraph& g, const MoveProposal& p, const CostView& view,
                         const double* ordered_sum_before, double* ordered_sum_after) {
  check_view(g, view);
  const int agent = p.deciding_agent;
  if (agent < 0 || agent >= g.node_count()) throw std::invalid_argument("deciding agent out of range");
  double before;
  if (view.behaviour == Behaviour::Selfish) {
    before = decider_cost(g, agent, view, nullptr);
  } else if (ordered_sum_before) {
    before = view.alpha * g.owned_count(agent) + *ordered_sum_before;
  } else {
    before = decider_cost(g, agent, view, nullptr);
  }
  apply(g, p);
  const double after = decider_cost(g, agent, view, ordered_sum_after);
  apply(g, inverse(p));
  return after - before;
}

bool accept(double delta) { return non_worsening(delta); }

bool accept(double delta, MoveKind kind, const AcceptancePolicy& policy) {
  if (kind == MoveKind::Switch && !policy.equal_cost_switch) return strictly_improving(delta);
  return non_worsening(delta);
}

void apply(OwnedGraph& g, const MoveProposal& p) {
  switch (p.kind) {
    case MoveKind::Buy:
      if (p.deciding_agent != p.node_a) {
        throw std::invalid_argument("a buy is decided by its buyer");
      }
      g.add_edge(p.node_a, p.node_b);
      return;
    case MoveKind::Sell: {
      if (p.deciding_agent != p.node_a && p.deciding_agent != p.node_b) {
        throw std::invalid_argument("a sell is decided by an endpoint");
      }
      const int other = p.deciding_agent == p.node_a ? p.node_b : p.node_a;
      g.remove_edge(p.deciding_agent, other);
      return;
    }
    case MoveKind::Switch:
      if (p.deciding_agent != p.node_a) {
        throw std::invalid_argument("a switch is decided by the owning endpoint");
      }
      if (p.node_c == p.node_a || g.has_edge(p.node_a, p.node_c)) {
        throw std::invalid_argument("switch target edge is not available");
      }
      g.remove_edge(p.node_a, p.node_b);
      g.add_edge(p.node_a, p.node_c);
      return;
  }
  throw std::invalid_argument("unknown move kind");
}

MoveProposal inverse(const MoveProposal& p) {
  switch (p.kind) {
    case MoveKind::Buy:
      return MoveProposal{MoveKind::Sell, p.node_a, p.node_b, -1, p.node_a};
    case MoveKind::Sell: {
      const int other = p.deciding_agent == p.node_a ? p.node_b : p.node_a;
      return MoveProposal{MoveKind::Buy, p.deciding_agent, other, -1, p.deciding_agent};
    }
    case MoveKind::Switch:
      return MoveProposal{MoveKind::Switch, p.node_a, p.node_c, p.node_b, p.node_a};
  }
  throw std::invalid_argument("unknown move kind");
}

std::vector<MoveProposal> enumerate_all_moves(const OwnedGraph& g, MoveSet move_set, Rng& rng) {
  std::vector<MoveProposal> moves;
  const long long pairs = static_cast<long long>(g.node_count()) * (g.node_count() - 1);
  moves.reserve(static_cast<std::size_t>(
      pairs + (move_set == MoveSet::BuySellPlusSwitch ? count_switch_triples(g) : 0)));
  scan_moves(g, move_set, [&moves](const MoveProposal& p) {
    moves.push_back(p);
    return false;
  });
  rng.shuffle(moves);
  return moves;
}

}  // namespace ncg
