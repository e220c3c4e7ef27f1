#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coopnet/geometry.hpp"

namespace coopnet {

// Propagation model parameters. All receiver-side constants (threshold
// receive power, noise) only ever enter as a common multiplicative factor,
// folded into unit_cost; normalized results do not depend on it.
struct ChannelParams {
  double pathloss_exponent = 4.0;  // power-law decay, in [2, 4]
  double nu = 0.39;                // range-reduction factor, in (0, 1)
  double unit_cost = 1.0;

  static ChannelParams make(double pathloss_exponent, double nu,
                            double unit_cost = 1.0);
};

void validate(const ChannelParams& params);

// Power for an unassisted transmission over distance d: unit_cost * d^alpha.
double direct_power(double d, const ChannelParams& params);

// Reduced power used when a relay assists: unit_cost * (nu * d_ab)^alpha.
// Strictly below direct_power(d_ab) for nu < 1.
double reduced_power(double d_ab, const ChannelParams& params);

// Power the selected relay spends retransmitting to the receiver over
// distance d_cb; identical to direct transmission over that hop.
double relay_cost(double d_cb, const ChannelParams& params);

// Nodes strictly closer to both endpoints than the endpoints are to each
// other: d_AC < d_AB and d_CB < d_AB. Strict so that B itself never
// qualifies. Returned in increasing index order.
std::vector<int> intermediate_nodes(const Topology& topology, int a, int b);

// Cooperating nodes inside the reduced transmitter range that can still
// usefully retransmit: d_AC <= nu * d_AB and d_CB < d_AB.
std::vector<int> eligible_cooperators(const Topology& topology, int a, int b,
                                      std::span<const std::uint8_t> coop_flags,
                                      const ChannelParams& params);

// The eligible node closest to the receiver; ties broken by lowest index.
std::optional<int> select_relay(const Topology& topology,
                                std::span<const int> eligible, int b);

}  // namespace coopnet
