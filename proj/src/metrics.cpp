#include "coopnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace coopnet {

namespace {

std::vector<std::size_t> order_by_topology(const std::vector<RunResult>& runs) {
  std::vector<std::size_t> idx(runs.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return runs[a].topology_id < runs[b].topology_id;
  });
  return idx;
}

void format_double(std::ostream& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  out << buf;
}

}  // namespace

double normalization_constant(const std::vector<RunResult>& def_runs) {
  if (def_runs.empty())
    throw std::invalid_argument("normalization_constant: no runs given");
  double sum = 0.0;
  long count = 0;
  for (std::size_t k : order_by_topology(def_runs)) {
    for (const NodeState& s : def_runs[k].final_states) {
      sum += s.total_energy;
      ++count;
    }
  }
  if (count == 0)
    throw std::invalid_argument("normalization_constant: runs hold no nodes");
  return sum / static_cast<double>(count);
}

double cooperation_frequency(const RunResult& run, int node) {
  if (node < 0 || node >= static_cast<int>(run.final_states.size()))
    throw std::out_of_range("cooperation_frequency: node index out of range");
  if (run.iterations < 1)
    throw std::invalid_argument("cooperation_frequency: run is empty");
  return static_cast<double>(
             run.final_states[static_cast<std::size_t>(node)].coop_iterations) /
         static_cast<double>(run.iterations);
}

MetricsReport aggregate(const std::vector<RunResult>& runs,
                        const std::vector<Topology>& topologies, double norm,
                        int bins) {
  if (runs.empty()) throw std::invalid_argument("aggregate: no runs given");
  if (runs.size() != topologies.size())
    throw std::invalid_argument("aggregate: runs/topologies size mismatch");
  if (!(norm > 0.0))
    throw std::invalid_argument("aggregate: normalization must be positive");
  if (bins < 1) throw std::invalid_argument("aggregate: bins must be >= 1");

  const double radius = topologies.front().radius();
  for (const Topology& t : topologies)
    if (t.radius() != radius)
      throw std::invalid_argument("aggregate: topologies have mixed radii");

  MetricsReport report;
  for (std::size_t k : order_by_topology(runs)) {
    const RunResult& run = runs[k];
    const Topology& topo = topologies[k];
    if (static_cast<int>(run.final_states.size()) != topo.node_count())
      throw std::invalid_argument("aggregate: run/topology node mismatch");
    for (int i = 0; i < topo.node_count(); ++i) {
      PerNodeRecord rec;
      rec.topology_id = run.topology_id;
      rec.node_id = i;
      rec.dist_center = topo.distance_to_center(i);
      rec.normalized_energy =
          run.final_states[static_cast<std::size_t>(i)].total_energy / norm;
      rec.coop_frequency = cooperation_frequency(run, i);
      report.per_node_records.push_back(rec);
    }
  }

  // Ratio of pooled means, not mean of ratios: normalizing the baseline by
  // its own constant then yields exactly 1.
  report.mean_energy = normalization_constant(runs) / norm;

  const auto& recs = report.per_node_records;
  const double n = static_cast<double>(recs.size());
  double mean = 0.0;
  for (const PerNodeRecord& r : recs) mean += r.normalized_energy;
  mean /= n;
  double var = 0.0;
  for (const PerNodeRecord& r : recs) {
    const double d = r.normalized_energy - mean;
    var += d * d;
  }
  report.std_energy = std::sqrt(var / n);

  report.radius_curve.assign(static_cast<std::size_t>(bins), RadiusBin{});
  std::vector<double> e_sum(static_cast<std::size_t>(bins), 0.0);
  std::vector<double> f_sum(static_cast<std::size_t>(bins), 0.0);
  const double width = radius / static_cast<double>(bins);
  for (int b = 0; b < bins; ++b)
    report.radius_curve[static_cast<std::size_t>(b)].center =
        (static_cast<double>(b) + 0.5) * width;
  for (const PerNodeRecord& r : recs) {
    int b = static_cast<int>(r.dist_center / radius * static_cast<double>(bins));
    b = std::clamp(b, 0, bins - 1);
    e_sum[static_cast<std::size_t>(b)] += r.normalized_energy;
    f_sum[static_cast<std::size_t>(b)] += r.coop_frequency;
    report.radius_curve[static_cast<std::size_t>(b)].count += 1;
  }
  for (int b = 0; b < bins; ++b) {
    RadiusBin& bin = report.radius_curve[static_cast<std::size_t>(b)];
    if (bin.count > 0) {
      bin.mean_energy = e_sum[static_cast<std::size_t>(b)] /
                        static_cast<double>(bin.count);
      bin.mean_coop_frequency = f_sum[static_cast<std::size_t>(b)] /
                                static_cast<double>(bin.count);
    } else {
      bin.mean_energy = std::numeric_limits<double>::quiet_NaN();
      bin.mean_coop_frequency = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return report;
}

void write_summary_csv(std::ostream& out,
                       const std::vector<StrategyReport>& reports) {
  out << "strategy,mean_E,std_E\n";
  for (const StrategyReport& sr : reports) {
    out << sr.strategy << ',';
    format_double(out, sr.report.mean_energy);
    out << ',';
    format_double(out, sr.report.std_energy);
    out << '\n';
  }
}

void write_per_node_csv(std::ostream& out, const MetricsReport& report) {
  out << "topology_id,node_id,dist_center,normalized_energy,coop_frequency\n";
  for (const PerNodeRecord& r : report.per_node_records) {
    out << r.topology_id << ',' << r.node_id << ',';
    format_double(out, r.dist_center);
    out << ',';
    format_double(out, r.normalized_energy);
    out << ',';
    format_double(out, r.coop_frequency);
    out << '\n';
  }
}

void write_radius_curves_csv(std::ostream& out,
                             const std::vector<StrategyReport>& reports) {
  out << "bin_center,strategy,mean_energy,mean_coop_frequency,count\n";
  for (const StrategyReport& sr : reports) {
    for (const RadiusBin& bin : sr.report.radius_curve) {
      format_double(out, bin.center);
      out << ',' << sr.strategy << ',';
      format_double(out, bin.mean_energy);
      out << ',';
      format_double(out, bin.mean_coop_frequency);
      out << ',' << bin.count << '\n';
    }
  }
}

}  // namespace coopnet
