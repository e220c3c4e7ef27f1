#include "coopnet/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace coopnet {

ChannelParams ChannelParams::make(double pathloss_exponent, double nu,
                                  double unit_cost) {
  ChannelParams p{pathloss_exponent, nu, unit_cost};
  validate(p);
  return p;
}

void validate(const ChannelParams& params) {
  if (!(params.pathloss_exponent >= 2.0 && params.pathloss_exponent <= 4.0))
    throw std::invalid_argument("channel: pathloss exponent must be in [2, 4]");
  if (!(params.nu > 0.0 && params.nu < 1.0))
    throw std::invalid_argument("channel: nu must be in (0, 1)");
  if (!(params.unit_cost > 0.0))
    throw std::invalid_argument("channel: unit_cost must be positive");
}

double direct_power(double d, const ChannelParams& params) {
  if (!(d > 0.0))
    throw std::domain_error("direct_power: distance must be positive");
  return params.unit_cost * std::pow(d, params.pathloss_exponent);
}

double reduced_power(double d_ab, const ChannelParams& params) {
  if (!(d_ab > 0.0))
    throw std::domain_error("reduced_power: distance must be positive");
  return params.unit_cost * std::pow(params.nu * d_ab, params.pathloss_exponent);
}

double relay_cost(double d_cb, const ChannelParams& params) {
  return direct_power(d_cb, params);
}

std::vector<int> intermediate_nodes(const Topology& topology, int a, int b) {
  if (a == b)
    throw std::invalid_argument("intermediate_nodes: a and b must differ");
  const double d_ab = topology.distance(a, b);
  std::vector<int> out;
  for (int c = 0; c < topology.node_count(); ++c) {
    if (c == a || c == b) continue;
    if (topology.distance(a, c) < d_ab && topology.distance(c, b) < d_ab)
      out.push_back(c);
  }
  return out;
}

std::vector<int> eligible_cooperators(const Topology& topology, int a, int b,
                                      std::span<const std::uint8_t> coop_flags,
                                      const ChannelParams& params) {
  if (a == b)
    throw std::invalid_argument("eligible_cooperators: a and b must differ");
  const double d_ab = topology.distance(a, b);
  const double range = params.nu * d_ab;
  std::vector<int> out;
  for (int c = 0; c < topology.node_count(); ++c) {
    if (c == a || c == b || !coop_flags[static_cast<std::size_t>(c)]) continue;
    if (topology.distance(a, c) <= range && topology.distance(c, b) < d_ab)
      out.push_back(c);
  }
  return out;
}

std::optional<int> select_relay(const Topology& topology,
                                std::span<const int> eligible, int b) {
  std::optional<int> best;
  double best_d = 0.0;
  for (int c : eligible) {
    const double d = topology.distance(c, b);
    if (!best || d < best_d || (d == best_d && c < *best)) {
      best = c;
      best_d = d;
    }
  }
  return best;
}

}  // namespace coopnet
