#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "coopnet/rng.hpp"

namespace coopnet {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// Random network topology: node positions inside a disk centered at the
// origin. Immutable after construction; all pairwise distances are cached.
class Topology {
 public:
  // Validates node_count >= 2, radius > 0 and that every point lies in the
  // disk (up to a small floating-point slack on the boundary).
  Topology(std::vector<Vec2> positions, double radius);

  int node_count() const { return static_cast<int>(positions_.size()); }
  double radius() const { return radius_; }
  std::span<const Vec2> positions() const { return positions_; }
  const Vec2& position(int i) const;

  // Euclidean distance between nodes i and j.
  double distance(int i, int j) const;

  // Distance from node i to the disk center.
  double distance_to_center(int i) const;

 private:
  std::vector<Vec2> positions_;
  std::vector<double> dist_;  // node_count x node_count, row-major
  double radius_ = 0.0;
};

// Places node_count points independently and uniformly by area over the
// disk of the given radius: radial coordinate radius*sqrt(u), angle uniform
// on [0, 2*pi). Deterministic given the rng state.
Topology generate_topology(int node_count, double radius, Rng& rng);

// CSV dump/load (rows "node_id,x,y") for reproducibility audits.
void save_topology_csv(const Topology& topology, std::ostream& out);
Topology load_topology_csv(std::istream& in, double radius);

}  // namespace coopnet
