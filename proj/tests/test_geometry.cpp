#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "coopnet/geometry.hpp"

using namespace coopnet;

TEST_CASE("generated points stay inside the disk") {
  Rng rng(42);
  const Topology topo = generate_topology(30, 1.0, rng);
  CHECK(topo.node_count() == 30);
  for (int i = 0; i < topo.node_count(); ++i)
    CHECK(topo.distance_to_center(i) <= 1.0 + 1e-12);
}

TEST_CASE("minimal two-node topology") {
  Rng rng(7);
  const Topology topo = generate_topology(2, 1.0, rng);
  CHECK(topo.node_count() == 2);
  CHECK(topo.distance_to_center(0) <= 1.0);
  CHECK(topo.distance_to_center(1) <= 1.0);
}

TEST_CASE("radial mean matches the area-uniform expectation 2r/3") {
  const int n = 100000;
  Rng rng(20240809);
  const Topology topo = generate_topology(n, 1.0, rng);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += topo.distance_to_center(i);
  const double mean = sum / n;
  // sd of the radial coordinate is r*sqrt(1/18)
  const double se = std::sqrt(1.0 / 18.0) / std::sqrt(static_cast<double>(n));
  CHECK(std::abs(mean - 2.0 / 3.0) < 3.0 * se);
}

TEST_CASE("radial cdf is quadratic (area uniformity)") {
  const int n = 100000;
  Rng rng(91);
  const Topology topo = generate_topology(n, 1.0, rng);
  for (double rho : {0.25, 0.5, 0.75}) {
    int inside = 0;
    for (int i = 0; i < n; ++i)
      if (topo.distance_to_center(i) <= rho) ++inside;
    const double expect = rho * rho;
    const double se = std::sqrt(expect * (1.0 - expect) / n);
    CHECK(std::abs(static_cast<double>(inside) / n - expect) < 3.0 * se);
  }
}

TEST_CASE("identical seeds give identical topologies") {
  Rng a(555), b(555);
  const Topology ta = generate_topology(50, 2.5, a);
  const Topology tb = generate_topology(50, 2.5, b);
  for (int i = 0; i < 50; ++i) {
    CHECK(ta.position(i).x == tb.position(i).x);
    CHECK(ta.position(i).y == tb.position(i).y);
  }
}

TEST_CASE("distance examples") {
  const Topology topo({{0.0, 0.0}, {0.8, 0.0}, {0.3, 0.05}}, 1.0);
  CHECK(topo.distance(0, 1) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(std::abs(topo.distance(0, 2) - 0.30414) < 1e-5);
  CHECK(topo.distance(1, 1) == 0.0);
}

TEST_CASE("distance symmetry and triangle inequality on random triples") {
  Rng rng(17);
  const Topology topo = generate_topology(40, 1.0, rng);
  Rng pick(18);
  for (int k = 0; k < 500; ++k) {
    const int i = static_cast<int>(pick.uniform_below(40));
    const int j = static_cast<int>(pick.uniform_below(40));
    const int l = static_cast<int>(pick.uniform_below(40));
    CHECK(topo.distance(i, j) == topo.distance(j, i));
    CHECK(topo.distance(i, l) <= topo.distance(i, j) + topo.distance(j, l) + 1e-12);
  }
}

TEST_CASE("invalid construction is rejected") {
  Rng rng(1);
  CHECK_THROWS_AS(generate_topology(1, 1.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(generate_topology(5, 0.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(generate_topology(5, -2.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(Topology({{0.0, 0.0}, {3.0, 0.0}}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Topology({{0.0, 0.0}}, 1.0), std::invalid_argument);
}

TEST_CASE("index errors") {
  const Topology topo({{0.0, 0.0}, {0.5, 0.0}}, 1.0);
  CHECK_THROWS_AS(topo.distance(0, 2), std::out_of_range);
  CHECK_THROWS_AS(topo.distance(-1, 0), std::out_of_range);
  CHECK_THROWS_AS(topo.position(2), std::out_of_range);
}

TEST_CASE("csv dump/load round-trips exactly") {
  Rng rng(3);
  const Topology topo = generate_topology(12, 1.0, rng);
  std::stringstream buf;
  save_topology_csv(topo, buf);
  const Topology back = load_topology_csv(buf, 1.0);
  REQUIRE(back.node_count() == topo.node_count());
  for (int i = 0; i < topo.node_count(); ++i) {
    CHECK(back.position(i).x == topo.position(i).x);
    CHECK(back.position(i).y == topo.position(i).y);
  }
}

TEST_CASE("csv load rejects malformed input") {
  std::stringstream missing_header("0,0.1,0.2\n");
  CHECK_THROWS_AS(load_topology_csv(missing_header, 1.0), std::invalid_argument);
  std::stringstream bad_field("node_id,x,y\n0,zz,0.2\n1,0,0\n");
  CHECK_THROWS_AS(load_topology_csv(bad_field, 1.0), std::invalid_argument);
}
