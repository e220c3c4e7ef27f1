#pragma once

// Reference simulator used only by tests: a straight-line recomputation of
// every payment, fitness delta and strategy decision from raw positions and
// seeds. It shares no code with the library so that agreement with the
// engine is meaningful.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

enum class Strat { Def, Coop, Tft, Wsls };

struct Params {
  int nodes = 0;
  double alpha = 4.0;
  double nu = 0.39;
  int slots = 1;
  int iterations = 1;
  Strat strategy = Strat::Def;
  bool differential = true;
  bool tie_is_improvement = false;
  double initial_fitness = 0.0;
};

struct SlotRecord {
  int iteration = 0;
  int slot = 0;
  int tx = -1;
  int rx = -1;
  int relay = -1;
  double tx_power = 0.0;
  double relay_power = 0.0;
};

struct Result {
  std::vector<double> total_energy;
  std::vector<double> fitness;
  std::vector<double> iter_change;
  std::vector<double> prev_change;
  std::vector<int> coop_iterations;
  std::vector<bool> is_cooperator;
  std::vector<SlotRecord> slots;
};

Result simulate(const std::vector<std::pair<double, double>>& positions,
                const Params& params, std::uint64_t traffic_seed,
                std::uint64_t init_seed);

}  // namespace oracle
