#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "coopnet/channel.hpp"
#include "coopnet/strategy.hpp"

namespace coopnet {

// All model and experiment parameters. Defaults are the reference
// parameter set: M=30 nodes in a unit disk, path-loss exponent 4,
// nu=0.39, T=1000 slots per iteration, N=1000 iterations, 1000 topologies.
struct SimConfig {
  int nodes = 30;
  double radius = 1.0;
  double pathloss_exponent = 4.0;
  double nu = 0.39;
  int slots_per_iteration = 1000;
  int iterations = 1000;
  int topologies = 1000;
  StrategyKind strategy{};
  std::uint64_t master_seed = 1;
  int bins = 10;
  std::string out_dir = ".";
  double initial_fitness = 0.0;
  bool trace = false;
  bool record_trajectory = false;

  ChannelParams channel() const {
    return ChannelParams{pathloss_exponent, nu, 1.0};
  }
};

// Throws with a message naming the offending key on any invariant
// violation.
void validate_config(const SimConfig& config);

// Applies `key = value` lines from a UTF-8 config file ('#' comments,
// blank lines allowed) on top of the current values. Returns the set of
// keys that were assigned. Diagnostics name the file, line and key.
std::set<std::string> apply_config_file(SimConfig& config,
                                        const std::string& path);

}  // namespace coopnet
