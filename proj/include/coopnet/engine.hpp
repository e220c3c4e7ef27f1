#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "coopnet/channel.hpp"
#include "coopnet/config.hpp"
#include "coopnet/geometry.hpp"
#include "coopnet/rng.hpp"

namespace coopnet {

// Per-node bookkeeping across the two time scales. fitness follows the
// slot recursion and carries across iteration boundaries; the two change
// registers hold the last finished iteration's fitness change and the one
// before it, which is all the history any strategy consults.
struct NodeState {
  bool is_cooperator = false;
  double fitness = 0.0;
  double iter_fitness_change = 0.0;       // dF(n), last finished iteration
  double prev_iter_fitness_change = 0.0;  // dF(n-1)
  double total_energy = 0.0;              // power actually spent, cumulative
  int coop_iterations = 0;                // iterations spent as cooperator
  int iterations_completed = 0;

  bool operator==(const NodeState&) const = default;
};

// What one time slot did: who transmitted to whom, who relayed (if anyone),
// and what each party paid. benefit is the transmitter's saving over direct
// transmission and is zero when no relay assisted.
struct SlotOutcome {
  int transmitter = -1;
  int receiver = -1;
  std::optional<int> relay;
  double transmitter_power = 0.0;
  double relay_power = 0.0;
  double benefit = 0.0;
};

enum class NodeRole { Idle, Transmitter, SelectedRelay, BystanderCooperator };

// Per-node indicator view of one slot (packet/cooperator/connectivity
// indicators and the count of active incoming transmissions).
struct SlotContext {
  bool has_packet = false;
  bool has_cooperator = false;
  bool connected_to_active = false;
  int active_incoming = 0;
};

struct TraceRow {
  int iteration = 0;
  int slot = 0;
  int transmitter = -1;
  int receiver = -1;
  int relay = -1;  // -1 when no relay assisted
  double transmitter_power = 0.0;
  double relay_power = 0.0;
};

using SlotTraceFn = std::function<void(const TraceRow&)>;

// Uniformly random ordered transmitter/receiver pair, A != B.
std::pair<int, int> pick_pair(int node_count, Rng& rng);

// Executes one slot: picks a pair, resolves relaying among current
// cooperators, charges the payers and applies the fitness deltas.
SlotOutcome run_slot(const Topology& topology, std::vector<NodeState>& states,
                     const ChannelParams& params, Rng& rng);

// Fitness change a node in the given role sees from the slot. Never
// positive: an unassisted transmitter loses the missed saving, the selected
// relay loses its retransmission cost, everyone else is unaffected.
double delta_fitness(NodeRole role, const SlotOutcome& slot,
                     const Topology& topology, const ChannelParams& params);

// Indicator view of the slot from one node's perspective.
SlotContext slot_context(const Topology& topology, const SlotOutcome& slot,
                         int node, std::span<const std::uint8_t> coop_flags,
                         const ChannelParams& params);

// Runs one iteration of `slots` slots. Returns each node's fitness change
// over the iteration (sum of its slot deltas, so the value is exactly
// invariant under shifts of the initial fitness) and shifts the per-node
// change registers. Fitness itself carries across the boundary.
std::vector<double> run_iteration(const Topology& topology,
                                  std::vector<NodeState>& states, int slots,
                                  const ChannelParams& params, Rng& rng,
                                  const SlotTraceFn& trace = {},
                                  int iteration_index = 0);

struct RunResult {
  int topology_id = -1;
  int iterations = 0;
  std::vector<NodeState> final_states;
  // Iteration-end cumulative energy per node; filled only when
  // SimConfig::record_trajectory is set.
  std::vector<std::vector<double>> energy_trajectory;
};

// Full two-timescale run on one topology. DEF/COOP hold flags fixed.
// TFT/WSLS start all-defector, promote one random node (drawn from
// init_rng) at the end of iteration 0 and apply their decision rule
// simultaneously at the end of every later iteration. traffic_rng drives
// pair selection only, so identical traffic seeds give every strategy the
// same transmission sequence.
RunResult run_simulation(const SimConfig& config, const Topology& topology,
                         Rng& traffic_rng, Rng& init_rng,
                         const SlotTraceFn& trace = {});

}  // namespace coopnet
