#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coopnet/config.hpp"
#include "coopnet/runner.hpp"

namespace {

using coopnet::SimConfig;

struct CommonFlags {
  std::string config_path;
  std::string strategy;
  std::string improvement_mode;
  std::string tie_improves;
  std::string out_dir;
  int nodes = 0, slots = 0, iterations = 0, topologies = 0, bins = 0;
  double radius = 0.0, alpha = 0.0, nu = 0.0;
  std::uint64_t seed = 0;
  bool trace = false;

  CLI::Option* o_config = nullptr;
  CLI::Option* o_strategy = nullptr;
  CLI::Option* o_nodes = nullptr;
  CLI::Option* o_radius = nullptr;
  CLI::Option* o_alpha = nullptr;
  CLI::Option* o_nu = nullptr;
  CLI::Option* o_slots = nullptr;
  CLI::Option* o_iterations = nullptr;
  CLI::Option* o_topologies = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_improvement = nullptr;
  CLI::Option* o_tie = nullptr;
  CLI::Option* o_bins = nullptr;
  CLI::Option* o_out_dir = nullptr;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  f.o_config = cmd->add_option("--config", f.config_path,
                               "Config file with key = value lines");
  f.o_strategy =
      cmd->add_option("--strategy", f.strategy, "Strategy: def|coop|tft|wsls");
  f.o_nodes = cmd->add_option("--nodes", f.nodes, "Nodes per topology");
  f.o_radius = cmd->add_option("--radius", f.radius, "Disk radius");
  f.o_alpha = cmd->add_option("--alpha", f.alpha, "Path-loss exponent");
  f.o_nu = cmd->add_option("--nu", f.nu, "Range-reduction factor");
  f.o_slots = cmd->add_option("--slots", f.slots, "Slots per iteration");
  f.o_iterations = cmd->add_option("--iterations", f.iterations,
                                   "Iterations per run");
  f.o_topologies = cmd->add_option("--topologies", f.topologies,
                                   "Random topologies per batch");
  f.o_seed = cmd->add_option("--seed", f.seed, "Master seed (64-bit)");
  f.o_improvement = cmd->add_option("--improvement-mode", f.improvement_mode,
                                    "literal|differential");
  f.o_tie = cmd->add_option("--tie-improves", f.tie_improves,
                            "Count exact fitness ties as improvement: true|false");
  f.o_bins = cmd->add_option("--bins", f.bins, "Radial bins for the curves");
  f.o_out_dir = cmd->add_option("--out-dir", f.out_dir, "Report directory");
  cmd->add_flag("--trace", f.trace, "Write per-slot trace CSVs");
}

bool parse_bool_token(const std::string& v, const char* flag) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw std::invalid_argument(std::string(flag) + ": expected true or false");
}

SimConfig resolve_config(const CommonFlags& f) {
  SimConfig cfg;
  std::set<std::string> file_keys;
  if (f.o_config->count())
    file_keys = coopnet::apply_config_file(cfg, f.config_path);

  if (f.o_strategy->count())
    cfg.strategy.variant = coopnet::parse_strategy(f.strategy);
  if (f.o_nodes->count()) cfg.nodes = f.nodes;
  if (f.o_radius->count()) cfg.radius = f.radius;
  if (f.o_alpha->count()) cfg.pathloss_exponent = f.alpha;
  if (f.o_nu->count()) cfg.nu = f.nu;
  if (f.o_slots->count()) cfg.slots_per_iteration = f.slots;
  if (f.o_iterations->count()) cfg.iterations = f.iterations;
  if (f.o_topologies->count()) cfg.topologies = f.topologies;
  if (f.o_seed->count()) cfg.master_seed = f.seed;
  if (f.o_improvement->count())
    cfg.strategy.improvement_mode =
        coopnet::parse_improvement_mode(f.improvement_mode);
  if (f.o_tie->count())
    cfg.strategy.tie_is_improvement =
        parse_bool_token(f.tie_improves, "--tie-improves");
  if (f.o_bins->count()) cfg.bins = f.bins;
  if (f.o_out_dir->count()) cfg.out_dir = f.out_dir;
  cfg.trace = f.trace;

  // Seed fallback: flag, then config file, then environment.
  if (!f.o_seed->count() && !file_keys.count("seed")) {
    if (const char* env = std::getenv("COOPNET_SEED")) {
      std::size_t used = 0;
      const std::string s(env);
      cfg.master_seed = std::stoull(s, &used);
      if (used != s.size())
        throw std::invalid_argument("COOPNET_SEED: not a valid 64-bit seed");
    }
  }

  coopnet::validate_config(cfg);
  return cfg;
}

std::vector<double> parse_nu_list(const std::string& csv) {
  std::vector<double> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    out.push_back(std::stod(tok, &used));
    if (used != tok.size())
      throw std::invalid_argument("--nu-values: bad entry '" + tok + "'");
  }
  if (out.empty()) throw std::invalid_argument("--nu-values: empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "coopnet: Monte-Carlo simulator of cooperative relaying energy use\n"
      "in random wireless topologies"};
  app.require_subcommand(1);

  CommonFlags run_flags, compare_flags, sweep_flags;
  CLI::App* run_cmd = app.add_subcommand(
      "run", "Simulate one strategy against the all-defector baseline");
  add_common(run_cmd, run_flags);

  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Simulate def, coop, tft and wsls on a shared seed set");
  add_common(compare_cmd, compare_flags);

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep-nu", "Sweep the range-reduction factor for one strategy");
  add_common(sweep_cmd, sweep_flags);
  std::string nu_values = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  sweep_cmd->add_option("--nu-values", nu_values,
                        "Comma-separated nu grid (default 0.1..0.9)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return coopnet::cmd_run(resolve_config(run_flags));
    if (compare_cmd->parsed())
      return coopnet::cmd_compare(resolve_config(compare_flags));
    if (sweep_cmd->parsed())
      return coopnet::cmd_sweep_nu(resolve_config(sweep_flags),
                                   parse_nu_list(nu_values));
  } catch (const std::exception& e) {
    std::cerr << "coopnet: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
