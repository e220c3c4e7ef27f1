#include "coopnet/runner.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>

namespace coopnet {

namespace {

namespace fs = std::filesystem;

unsigned worker_count(int topologies) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return std::min<unsigned>(hw, static_cast<unsigned>(topologies));
}

void write_trace_file(const fs::path& path, const std::vector<TraceRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open trace file: " + path.string());
  out << "iteration,slot,tx,rx,relay,tx_power,relay_power\n";
  char buf[96];
  for (const TraceRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%d,%d,%d,", r.iteration, r.slot,
                  r.transmitter, r.receiver);
    out << buf;
    if (r.relay >= 0) out << r.relay;
    std::snprintf(buf, sizeof buf, ",%.10g,%.10g\n", r.transmitter_power,
                  r.relay_power);
    out << buf;
  }
  if (!out) throw std::runtime_error("failed writing trace file: " + path.string());
}

std::ofstream open_report(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path.string());
  return out;
}

void finish_report(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("failed writing output file: " + path.string());
}

}  // namespace

BatchResult run_batch(const SimConfig& config, const StrategyKind& kind) {
  validate_config(config);
  SimConfig cfg = config;
  cfg.strategy = kind;

  const int n_topologies = cfg.topologies;
  std::vector<std::optional<Topology>> topologies(
      static_cast<std::size_t>(n_topologies));
  std::vector<RunResult> runs(static_cast<std::size_t>(n_topologies));

  const fs::path trace_dir = fs::path(cfg.out_dir) / "trace";
  if (cfg.trace) fs::create_directories(trace_dir);

  std::atomic<int> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto work = [&]() {
    try {
      for (int t = next.fetch_add(1); t < n_topologies; t = next.fetch_add(1)) {
        const auto id = static_cast<std::uint64_t>(t);
        Rng topo_rng(substream_seed(cfg.master_seed, id, Stream::Topology));
        Rng traffic_rng(substream_seed(cfg.master_seed, id, Stream::Traffic));
        Rng init_rng(substream_seed(cfg.master_seed, id, Stream::Init));

        Topology topo = generate_topology(cfg.nodes, cfg.radius, topo_rng);

        std::vector<TraceRow> trace_rows;
        SlotTraceFn trace_fn;
        if (cfg.trace)
          trace_fn = [&trace_rows](const TraceRow& r) { trace_rows.push_back(r); };

        RunResult run = run_simulation(cfg, topo, traffic_rng, init_rng, trace_fn);
        run.topology_id = t;

        if (cfg.trace) {
          const std::string name = "trace_" + strategy_name(kind.variant) +
                                   "_t" + std::to_string(t) + ".csv";
          write_trace_file(trace_dir / name, trace_rows);
        }

        runs[static_cast<std::size_t>(t)] = std::move(run);
        topologies[static_cast<std::size_t>(t)] = std::move(topo);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
      next.store(n_topologies);  // drain remaining work
    }
  };

  const unsigned workers = worker_count(n_topologies);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  BatchResult result;
  result.topologies.reserve(static_cast<std::size_t>(n_topologies));
  for (auto& t : topologies) result.topologies.push_back(std::move(*t));
  result.runs = std::move(runs);
  return result;
}

namespace {

struct TimedBatch {
  BatchResult batch;
  double seconds = 0.0;
};

TimedBatch timed_batch(const SimConfig& config, const StrategyKind& kind) {
  const auto start = std::chrono::steady_clock::now();
  TimedBatch tb{run_batch(config, kind), 0.0};
  tb.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start).count();
  std::cerr << "[coopnet] " << strategy_name(kind.variant) << ": "
            << config.topologies << " topologies x " << config.iterations
            << " iterations done in " << tb.seconds << " s\n";
  return tb;
}

}  // namespace

int cmd_run(const SimConfig& config) {
  validate_config(config);
  fs::create_directories(config.out_dir);

  StrategyKind def_kind = config.strategy;
  def_kind.variant = StrategyVariant::Def;

  const BatchResult def_batch = timed_batch(config, def_kind).batch;
  const double norm = normalization_constant(def_batch.runs);

  std::vector<StrategyReport> reports;
  reports.push_back({"def", aggregate(def_batch.runs, def_batch.topologies,
                                      norm, config.bins)});

  const MetricsReport* requested = &reports.front().report;
  if (config.strategy.variant != StrategyVariant::Def) {
    const BatchResult batch = timed_batch(config, config.strategy).batch;
    reports.push_back({strategy_name(config.strategy.variant),
                       aggregate(batch.runs, batch.topologies, norm,
                                 config.bins)});
    requested = &reports.back().report;
  }

  const fs::path dir(config.out_dir);
  {
    auto out = open_report(dir / "summary.csv");
    write_summary_csv(out, reports);
    finish_report(out, dir / "summary.csv");
  }
  {
    auto out = open_report(dir / "per_node.csv");
    write_per_node_csv(out, *requested);
    finish_report(out, dir / "per_node.csv");
  }
  {
    auto out = open_report(dir / "radius_curves.csv");
    write_radius_curves_csv(out, reports);
    finish_report(out, dir / "radius_curves.csv");
  }
  return 0;
}

int cmd_compare(const SimConfig& config) {
  validate_config(config);
  fs::create_directories(config.out_dir);

  const StrategyVariant order[] = {StrategyVariant::Def, StrategyVariant::Coop,
                                   StrategyVariant::Tft, StrategyVariant::Wsls};
  std::vector<StrategyReport> reports;
  double norm = 0.0;
  std::vector<BatchResult> batches;
  for (StrategyVariant v : order) {
    StrategyKind kind = config.strategy;
    kind.variant = v;
    batches.push_back(timed_batch(config, kind).batch);
    if (v == StrategyVariant::Def)
      norm = normalization_constant(batches.front().runs);
  }
  for (std::size_t i = 0; i < std::size(order); ++i) {
    reports.push_back({strategy_name(order[i]),
                       aggregate(batches[i].runs, batches[i].topologies, norm,
                                 config.bins)});
  }

  const fs::path dir(config.out_dir);
  {
    auto out = open_report(dir / "summary.csv");
    write_summary_csv(out, reports);
    finish_report(out, dir / "summary.csv");
  }
  {
    auto out = open_report(dir / "radius_curves.csv");
    write_radius_curves_csv(out, reports);
    finish_report(out, dir / "radius_curves.csv");
  }
  return 0;
}

int cmd_sweep_nu(const SimConfig& config, const std::vector<double>& nu_values) {
  validate_config(config);
  if (nu_values.empty())
    throw std::invalid_argument("sweep-nu: no nu values given");
  for (double nu : nu_values)
    if (!(nu > 0.0 && nu < 1.0))
      throw std::invalid_argument("sweep-nu: nu must be in (0, 1)");
  fs::create_directories(config.out_dir);

  // The baseline consists of direct transmissions only, so its energies do
  // not depend on nu; one baseline batch serves the whole sweep.
  StrategyKind def_kind = config.strategy;
  def_kind.variant = StrategyVariant::Def;
  const BatchResult def_batch = timed_batch(config, def_kind).batch;
  const double norm = normalization_constant(def_batch.runs);

  const fs::path path = fs::path(config.out_dir) / "nu_sweep.csv";
  auto out = open_report(path);
  out << "nu,strategy,mean_E\n";
  char buf[80];
  for (double nu : nu_values) {
    SimConfig cfg = config;
    cfg.nu = nu;
    double mean_e;
    if (config.strategy.variant == StrategyVariant::Def) {
      mean_e = 1.0;
    } else {
      const BatchResult batch = timed_batch(cfg, cfg.strategy).batch;
      mean_e = normalization_constant(batch.runs) / norm;
    }
    std::snprintf(buf, sizeof buf, "%.10g,%s,%.10g\n", nu,
                  strategy_name(config.strategy.variant).c_str(), mean_e);
    out << buf;
  }
  finish_report(out, path);
  return 0;
}

}  // namespace coopnet
