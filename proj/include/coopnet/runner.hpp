#pragma once

#include <vector>

#include "coopnet/config.hpp"
#include "coopnet/engine.hpp"
#include "coopnet/geometry.hpp"
#include "coopnet/metrics.hpp"

namespace coopnet {

// One strategy simulated over the whole topology set. Entries are indexed
// by topology id; the placement, traffic and init streams for topology i
// are derived from (master_seed, i) only, so every strategy sees identical
// topologies and transmission sequences.
struct BatchResult {
  std::vector<Topology> topologies;
  std::vector<RunResult> runs;
};

// Runs `kind` on all configured topologies, fanning out to a worker pool.
// Results are deterministic and independent of scheduling.
BatchResult run_batch(const SimConfig& config, const StrategyKind& kind);

// Batch commands behind the CLI. All write CSV reports into
// config.out_dir, report progress on stderr and return a process exit
// status. The all-defector baseline is recomputed within each invocation
// on the same seed set, never loaded from elsewhere.
int cmd_run(const SimConfig& config);
int cmd_compare(const SimConfig& config);
int cmd_sweep_nu(const SimConfig& config, const std::vector<double>& nu_values);

}  // namespace coopnet
