#include "coopnet/engine.hpp"

#include <cmath>
#include <stdexcept>

#include "coopnet/strategy.hpp"

namespace coopnet {

namespace {

// Memoized direct and reduced powers for every ordered pair. Entries are
// exactly the values the channel functions return for the cached
// distances, so lookups are bit-identical to computing on the fly.
// Diagonal entries stay zero and are never read.
struct PowerTable {
  int m = 0;
  std::vector<double> direct;
  std::vector<double> reduced;

  PowerTable(const Topology& topology, const ChannelParams& params)
      : m(topology.node_count()),
        direct(static_cast<std::size_t>(m) * m, 0.0),
        reduced(static_cast<std::size_t>(m) * m, 0.0) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        const double d = topology.distance(i, j);
        direct[static_cast<std::size_t>(i) * m + j] = direct_power(d, params);
        reduced[static_cast<std::size_t>(i) * m + j] = reduced_power(d, params);
      }
  }

  double direct_at(int i, int j) const {
    return direct[static_cast<std::size_t>(i) * m + j];
  }
  double reduced_at(int i, int j) const {
    return reduced[static_cast<std::size_t>(i) * m + j];
  }
};

// Scans for the relay in one pass: the lowest-indexed cooperator closest
// to the receiver among those with d_AC <= nu*d_AB and d_CB < d_AB.
// Equivalent to select_relay over eligible_cooperators.
int scan_relay(const Topology& topology, int a, int b,
               const std::vector<NodeState>& states, double nu) {
  const double d_ab = topology.distance(a, b);
  const double range = nu * d_ab;
  int best = -1;
  double best_d = 0.0;
  for (int c = 0; c < topology.node_count(); ++c) {
    if (c == a || c == b || !states[static_cast<std::size_t>(c)].is_cooperator)
      continue;
    const double d_cb = topology.distance(c, b);
    if (topology.distance(a, c) <= range && d_cb < d_ab) {
      if (best < 0 || d_cb < best_d) {
        best = c;
        best_d = d_cb;
      }
    }
  }
  return best;
}

// One slot; `table` may be null, in which case powers are computed from
// the channel functions directly (same values either way). Fitness deltas
// are additionally accumulated into `iter_delta` when provided.
SlotOutcome slot_step(const Topology& topology, const PowerTable* table,
                      std::vector<NodeState>& states,
                      const ChannelParams& params, Rng& rng,
                      double* iter_delta) {
  const auto [a, b] = pick_pair(topology.node_count(), rng);
  const double d_ab = topology.distance(a, b);
  const int relay = scan_relay(topology, a, b, states, params.nu);

  const double p_d = table ? table->direct_at(a, b) : direct_power(d_ab, params);
  const double p_i = table ? table->reduced_at(a, b) : reduced_power(d_ab, params);

  SlotOutcome out;
  out.transmitter = a;
  out.receiver = b;
  NodeState& tx = states[static_cast<std::size_t>(a)];
  if (relay >= 0) {
    const double p_c = table ? table->direct_at(relay, b)
                             : relay_cost(topology.distance(relay, b), params);
    out.relay = relay;
    out.transmitter_power = p_i;
    out.relay_power = p_c;
    out.benefit = p_d - p_i;
    tx.total_energy += p_i;
    NodeState& rs = states[static_cast<std::size_t>(relay)];
    rs.total_energy += p_c;
    rs.fitness += -p_c;
    if (iter_delta) iter_delta[relay] += -p_c;
  } else {
    out.transmitter_power = p_d;
    tx.total_energy += p_d;
    const double d_f = p_i - p_d;  // missed saving, always negative
    tx.fitness += d_f;
    if (iter_delta) iter_delta[a] += d_f;
  }
  return out;
}

void check_slot_count(int slots) {
  if (slots < 1)
    throw std::invalid_argument("run_iteration: need at least one slot");
}

std::vector<double> iteration_core(const Topology& topology,
                                   const PowerTable* table,
                                   std::vector<NodeState>& states, int slots,
                                   const ChannelParams& params, Rng& rng,
                                   const SlotTraceFn& trace,
                                   int iteration_index) {
  std::vector<double> delta(states.size(), 0.0);
  for (int t = 0; t < slots; ++t) {
    const SlotOutcome out =
        slot_step(topology, table, states, params, rng, delta.data());
    if (trace) {
      trace(TraceRow{iteration_index, t, out.transmitter, out.receiver,
                     out.relay.value_or(-1), out.transmitter_power,
                     out.relay_power});
    }
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    states[i].prev_iter_fitness_change = states[i].iter_fitness_change;
    states[i].iter_fitness_change = delta[i];
    states[i].iterations_completed += 1;
  }
  return delta;
}

}  // namespace

std::pair<int, int> pick_pair(int node_count, Rng& rng) {
  if (node_count < 2)
    throw std::invalid_argument("pick_pair: need at least 2 nodes");
  const int a = static_cast<int>(rng.uniform_below(node_count));
  int b = static_cast<int>(rng.uniform_below(node_count - 1));
  if (b >= a) ++b;
  return {a, b};
}

SlotOutcome run_slot(const Topology& topology, std::vector<NodeState>& states,
                     const ChannelParams& params, Rng& rng) {
  if (states.size() != static_cast<std::size_t>(topology.node_count()))
    throw std::invalid_argument("run_slot: states/topology size mismatch");
  return slot_step(topology, nullptr, states, params, rng, nullptr);
}

double delta_fitness(NodeRole role, const SlotOutcome& slot,
                     const Topology& topology, const ChannelParams& params) {
  switch (role) {
    case NodeRole::Transmitter: {
      if (slot.relay) return 0.0;
      const double d_ab = topology.distance(slot.transmitter, slot.receiver);
      return reduced_power(d_ab, params) - slot.transmitter_power;
    }
    case NodeRole::SelectedRelay:
      return -slot.relay_power;
    case NodeRole::BystanderCooperator:
    case NodeRole::Idle:
      return 0.0;
  }
  throw std::logic_error("delta_fitness: unknown role");
}

SlotContext slot_context(const Topology& topology, const SlotOutcome& slot,
                         int node, std::span<const std::uint8_t> coop_flags,
                         const ChannelParams& params) {
  SlotContext ctx;
  ctx.has_packet = (node == slot.transmitter);
  ctx.has_cooperator = ctx.has_packet && slot.relay.has_value();
  if (node != slot.transmitter) {
    const double d_ab = topology.distance(slot.transmitter, slot.receiver);
    const double range = slot.relay ? params.nu * d_ab : d_ab;
    ctx.connected_to_active = topology.distance(slot.transmitter, node) <= range;
  }
  ctx.active_incoming = ctx.connected_to_active ? 1 : 0;
  (void)coop_flags;
  return ctx;
}

std::vector<double> run_iteration(const Topology& topology,
                                  std::vector<NodeState>& states, int slots,
                                  const ChannelParams& params, Rng& rng,
                                  const SlotTraceFn& trace,
                                  int iteration_index) {
  check_slot_count(slots);
  const PowerTable table(topology, params);
  return iteration_core(topology, &table, states, slots, params, rng, trace,
                        iteration_index);
}

RunResult run_simulation(const SimConfig& config, const Topology& topology,
                         Rng& traffic_rng, Rng& init_rng,
                         const SlotTraceFn& trace) {
  const ChannelParams params = config.channel();
  validate(params);
  check_slot_count(config.slots_per_iteration);
  if (config.iterations < 1)
    throw std::invalid_argument("run_simulation: iterations must be >= 1");

  const int m = topology.node_count();
  const StrategyKind kind = config.strategy;
  const bool adaptive = kind.variant == StrategyVariant::Tft ||
                        kind.variant == StrategyVariant::Wsls;

  std::vector<NodeState> states(static_cast<std::size_t>(m));
  for (NodeState& s : states) {
    s.is_cooperator = (kind.variant == StrategyVariant::Coop);
    s.fitness = config.initial_fitness;
  }

  const PowerTable table(topology, params);
  RunResult result;
  result.iterations = config.iterations;
  if (config.record_trajectory)
    result.energy_trajectory.reserve(static_cast<std::size_t>(config.iterations));

  std::vector<std::uint8_t> next_flags(static_cast<std::size_t>(m), 0);
  for (int n = 0; n < config.iterations; ++n) {
    iteration_core(topology, &table, states, config.slots_per_iteration,
                   params, traffic_rng, trace, n);

    for (NodeState& s : states)
      if (s.is_cooperator) s.coop_iterations += 1;

    if (config.record_trajectory) {
      std::vector<double> row(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i)
        row[static_cast<std::size_t>(i)] = states[static_cast<std::size_t>(i)].total_energy;
      result.energy_trajectory.push_back(std::move(row));
    }

    if (!adaptive) continue;
    if (n == 0) {
      // Scenario start: promote one user, drawn from the dedicated stream.
      const int seed_node = static_cast<int>(init_rng.uniform_below(m));
      states[static_cast<std::size_t>(seed_node)].is_cooperator = true;
    } else {
      // Simultaneous decisions from the finished iteration's registers.
      for (int i = 0; i < m; ++i) {
        const std::optional<bool> next = decide(states[static_cast<std::size_t>(i)], kind);
        if (!next)
          throw std::logic_error("run_simulation: decision before history ready");
        next_flags[static_cast<std::size_t>(i)] = *next ? 1 : 0;
      }
      for (int i = 0; i < m; ++i)
        states[static_cast<std::size_t>(i)].is_cooperator =
            next_flags[static_cast<std::size_t>(i)] != 0;
    }
  }

  result.final_states = std::move(states);
  return result;
}

}  // namespace coopnet
