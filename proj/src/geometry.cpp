#include "coopnet/geometry.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace coopnet {

namespace {

double euclidean(const Vec2& a, const Vec2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

Topology::Topology(std::vector<Vec2> positions, double radius)
    : positions_(std::move(positions)), radius_(radius) {
  if (radius_ <= 0.0)
    throw std::invalid_argument("topology: radius must be positive");
  if (positions_.size() < 2)
    throw std::invalid_argument("topology: need at least 2 nodes");
  // Tolerate boundary points produced by rounding of radius*sqrt(u).
  const double r2 = radius_ * radius_ * (1.0 + 1e-12);
  for (const Vec2& p : positions_) {
    if (p.x * p.x + p.y * p.y > r2)
      throw std::invalid_argument("topology: node outside the disk");
  }
  const int m = node_count();
  dist_.assign(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const double d = euclidean(positions_[i], positions_[j]);
      dist_[static_cast<std::size_t>(i) * m + j] = d;
      dist_[static_cast<std::size_t>(j) * m + i] = d;
    }
}

const Vec2& Topology::position(int i) const {
  if (i < 0 || i >= node_count())
    throw std::out_of_range("topology: node index out of range");
  return positions_[static_cast<std::size_t>(i)];
}

double Topology::distance(int i, int j) const {
  const int m = node_count();
  if (i < 0 || i >= m || j < 0 || j >= m)
    throw std::out_of_range("topology: node index out of range");
  return dist_[static_cast<std::size_t>(i) * m + j];
}

double Topology::distance_to_center(int i) const {
  const Vec2& p = position(i);
  return std::sqrt(p.x * p.x + p.y * p.y);
}

Topology generate_topology(int node_count, double radius, Rng& rng) {
  if (node_count < 2)
    throw std::invalid_argument("generate_topology: node_count must be >= 2");
  if (radius <= 0.0)
    throw std::invalid_argument("generate_topology: radius must be positive");
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(node_count));
  for (int i = 0; i < node_count; ++i) {
    const double rad = radius * std::sqrt(rng.uniform_double());
    const double ang = 2.0 * M_PI * rng.uniform_double();
    pts.push_back({rad * std::cos(ang), rad * std::sin(ang)});
  }
  return Topology(std::move(pts), radius);
}

void save_topology_csv(const Topology& topology, std::ostream& out) {
  out << "node_id,x,y\n";
  char buf[80];
  for (int i = 0; i < topology.node_count(); ++i) {
    const Vec2& p = topology.position(i);
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", i, p.x, p.y);
    out << buf;
  }
}

Topology load_topology_csv(std::istream& in, double radius) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("node_id,x,y", 0) != 0)
    throw std::invalid_argument("topology csv: missing node_id,x,y header");
  std::vector<Vec2> pts;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    Vec2 p;
    try {
      if (!std::getline(row, field, ',')) throw std::invalid_argument("id");
      if (std::stoi(field) != static_cast<int>(pts.size()))
        throw std::invalid_argument("node ids must be 0,1,2,...");
      if (!std::getline(row, field, ',')) throw std::invalid_argument("x");
      p.x = std::stod(field);
      if (!std::getline(row, field, ',')) throw std::invalid_argument("y");
      p.y = std::stod(field);
    } catch (const std::exception& e) {
      throw std::invalid_argument("topology csv: line " +
                                  std::to_string(lineno) + ": " + e.what());
    }
    pts.push_back(p);
  }
  return Topology(std::move(pts), radius);
}

}  // namespace coopnet
