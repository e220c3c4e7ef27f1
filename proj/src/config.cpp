#include "coopnet/config.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

namespace coopnet {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& path, int line,
                       const std::string& msg) {
  throw std::invalid_argument(path + ":" + std::to_string(line) + ": " + msg);
}

long long parse_int(const std::string& v) {
  std::size_t used = 0;
  const long long x = std::stoll(v, &used);
  if (used != v.size()) throw std::invalid_argument("trailing characters");
  return x;
}

double parse_double(const std::string& v) {
  std::size_t used = 0;
  const double x = std::stod(v, &used);
  if (used != v.size()) throw std::invalid_argument("trailing characters");
  return x;
}

bool parse_bool(const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw std::invalid_argument("expected true or false");
}

std::uint64_t parse_seed(const std::string& v) {
  std::size_t used = 0;
  const unsigned long long x = std::stoull(v, &used);
  if (used != v.size()) throw std::invalid_argument("trailing characters");
  return x;
}

int to_int(long long x) {
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw std::invalid_argument("value out of range");
  return static_cast<int>(x);
}

}  // namespace

void validate_config(const SimConfig& config) {
  if (config.nodes < 2)
    throw std::invalid_argument("config: nodes must be >= 2");
  if (!(config.radius > 0.0))
    throw std::invalid_argument("config: radius must be positive");
  if (!(config.pathloss_exponent >= 2.0 && config.pathloss_exponent <= 4.0))
    throw std::invalid_argument("config: alpha must be in [2, 4]");
  if (!(config.nu > 0.0 && config.nu < 1.0))
    throw std::invalid_argument("config: nu must be in (0, 1)");
  if (config.slots_per_iteration < 1)
    throw std::invalid_argument("config: slots must be >= 1");
  if (config.iterations < 1)
    throw std::invalid_argument("config: iterations must be >= 1");
  if (config.topologies < 1)
    throw std::invalid_argument("config: topologies must be >= 1");
  if (config.bins < 1)
    throw std::invalid_argument("config: bins must be >= 1");
  if (config.out_dir.empty())
    throw std::invalid_argument("config: out_dir must not be empty");
}

std::set<std::string> apply_config_file(SimConfig& config,
                                        const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);

  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(path, lineno, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(path, lineno, "missing key before '='");
    if (value.empty()) fail(path, lineno, "missing value for key '" + key + "'");

    static const std::set<std::string> known = {
        "nodes",      "radius",           "alpha",        "nu",
        "slots",      "iterations",       "topologies",   "strategy",
        "seed",       "improvement_mode", "tie_improves", "bins",
        "out_dir",    "initial_fitness"};
    if (!known.count(key)) fail(path, lineno, "unknown key '" + key + "'");

    try {
      if (key == "nodes") config.nodes = to_int(parse_int(value));
      else if (key == "radius") config.radius = parse_double(value);
      else if (key == "alpha") config.pathloss_exponent = parse_double(value);
      else if (key == "nu") config.nu = parse_double(value);
      else if (key == "slots") config.slots_per_iteration = to_int(parse_int(value));
      else if (key == "iterations") config.iterations = to_int(parse_int(value));
      else if (key == "topologies") config.topologies = to_int(parse_int(value));
      else if (key == "strategy") config.strategy.variant = parse_strategy(value);
      else if (key == "seed") config.master_seed = parse_seed(value);
      else if (key == "improvement_mode")
        config.strategy.improvement_mode = parse_improvement_mode(value);
      else if (key == "tie_improves")
        config.strategy.tie_is_improvement = parse_bool(value);
      else if (key == "bins") config.bins = to_int(parse_int(value));
      else if (key == "out_dir") config.out_dir = value;
      else config.initial_fitness = parse_double(value);
    } catch (const std::invalid_argument& e) {
      fail(path, lineno, "bad value for key '" + key + "': " + e.what());
    } catch (const std::out_of_range&) {
      fail(path, lineno, "bad value for key '" + key + "': out of range");
    }
    seen.insert(key);
  }
  return seen;
}

}  // namespace coopnet
