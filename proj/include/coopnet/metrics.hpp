#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coopnet/engine.hpp"
#include "coopnet/geometry.hpp"

namespace coopnet {

struct PerNodeRecord {
  int topology_id = 0;
  int node_id = 0;
  double dist_center = 0.0;
  double normalized_energy = 0.0;
  double coop_frequency = 0.0;
};

struct RadiusBin {
  double center = 0.0;
  double mean_energy = 0.0;          // NaN when the bin is empty
  double mean_coop_frequency = 0.0;  // NaN when the bin is empty
  long count = 0;
};

// Pooled statistics over every (topology, node) record, normalized so the
// all-defector baseline averages to 1.
struct MetricsReport {
  double mean_energy = 0.0;
  double std_energy = 0.0;
  std::vector<RadiusBin> radius_curve;  // equal-width radial bins over (0, r]
  std::vector<PerNodeRecord> per_node_records;  // sorted by (topology, node)
};

// Mean per-node consumed energy across the baseline runs; the unit every
// other strategy is expressed in. Summation order is canonical (sorted by
// topology id), so the value does not depend on input order.
double normalization_constant(const std::vector<RunResult>& def_runs);

// Fraction of iterations the node spent as a cooperator.
double cooperation_frequency(const RunResult& run, int node);

// Pools all runs into a MetricsReport. topologies[k] must be the topology
// run[k] was simulated on; norm is the baseline constant; bins the number
// of radial bins. Input order does not affect any output.
MetricsReport aggregate(const std::vector<RunResult>& runs,
                        const std::vector<Topology>& topologies, double norm,
                        int bins);

struct StrategyReport {
  std::string strategy;
  MetricsReport report;
};

// CSV emitters. Headers are fixed:
//   summary.csv        strategy,mean_E,std_E
//   per_node.csv       topology_id,node_id,dist_center,normalized_energy,coop_frequency
//   radius_curves.csv  bin_center,strategy,mean_energy,mean_coop_frequency,count
void write_summary_csv(std::ostream& out,
                       const std::vector<StrategyReport>& reports);
void write_per_node_csv(std::ostream& out, const MetricsReport& report);
void write_radius_curves_csv(std::ostream& out,
                             const std::vector<StrategyReport>& reports);

}  // namespace coopnet
