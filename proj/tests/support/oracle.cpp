#include "oracle.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace oracle {

namespace {

struct Stream {
  std::mt19937_64 gen;
  explicit Stream(std::uint64_t seed) : gen(seed) {}

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (max % n + 1) % n;
    if (rem == 0) return gen() % n;
    const std::uint64_t limit = max - rem + 1;
    std::uint64_t x = gen();
    while (x >= limit) x = gen();
    return x % n;
  }
};

double dist(const std::vector<std::pair<double, double>>& p, int i, int j) {
  const double dx = p[static_cast<std::size_t>(i)].first -
                    p[static_cast<std::size_t>(j)].first;
  const double dy = p[static_cast<std::size_t>(i)].second -
                    p[static_cast<std::size_t>(j)].second;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

Result simulate(const std::vector<std::pair<double, double>>& positions,
                const Params& params, std::uint64_t traffic_seed,
                std::uint64_t init_seed) {
  const int m = params.nodes;
  Stream traffic(traffic_seed);
  Stream init(init_seed);

  Result r;
  r.total_energy.assign(static_cast<std::size_t>(m), 0.0);
  r.fitness.assign(static_cast<std::size_t>(m), params.initial_fitness);
  r.iter_change.assign(static_cast<std::size_t>(m), 0.0);
  r.prev_change.assign(static_cast<std::size_t>(m), 0.0);
  r.coop_iterations.assign(static_cast<std::size_t>(m), 0);
  r.is_cooperator.assign(static_cast<std::size_t>(m),
                         params.strategy == Strat::Coop);

  const bool adaptive =
      params.strategy == Strat::Tft || params.strategy == Strat::Wsls;

  for (int n = 0; n < params.iterations; ++n) {
    std::vector<double> df(static_cast<std::size_t>(m), 0.0);
    for (int t = 0; t < params.slots; ++t) {
      const int a = static_cast<int>(traffic.below(static_cast<std::uint64_t>(m)));
      int b = static_cast<int>(traffic.below(static_cast<std::uint64_t>(m - 1)));
      if (b >= a) ++b;

      const double d_ab = dist(positions, a, b);
      int relay = -1;
      double relay_d = 0.0;
      for (int c = 0; c < m; ++c) {
        if (c == a || c == b || !r.is_cooperator[static_cast<std::size_t>(c)])
          continue;
        const double d_ac = dist(positions, a, c);
        const double d_cb = dist(positions, c, b);
        if (d_ac <= params.nu * d_ab && d_cb < d_ab) {
          if (relay < 0 || d_cb < relay_d) {
            relay = c;
            relay_d = d_cb;
          }
        }
      }

      SlotRecord rec;
      rec.iteration = n;
      rec.slot = t;
      rec.tx = a;
      rec.rx = b;
      const double p_d = std::pow(d_ab, params.alpha);
      const double p_i = std::pow(params.nu * d_ab, params.alpha);
      if (relay >= 0) {
        const double p_c = std::pow(relay_d, params.alpha);
        rec.relay = relay;
        rec.tx_power = p_i;
        rec.relay_power = p_c;
        r.total_energy[static_cast<std::size_t>(a)] += p_i;
        r.total_energy[static_cast<std::size_t>(relay)] += p_c;
        r.fitness[static_cast<std::size_t>(relay)] += -p_c;
        df[static_cast<std::size_t>(relay)] += -p_c;
      } else {
        rec.tx_power = p_d;
        r.total_energy[static_cast<std::size_t>(a)] += p_d;
        const double loss = p_i - p_d;
        r.fitness[static_cast<std::size_t>(a)] += loss;
        df[static_cast<std::size_t>(a)] += loss;
      }
      r.slots.push_back(rec);
    }

    for (int i = 0; i < m; ++i) {
      r.prev_change[static_cast<std::size_t>(i)] =
          r.iter_change[static_cast<std::size_t>(i)];
      r.iter_change[static_cast<std::size_t>(i)] = df[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < m; ++i)
      if (r.is_cooperator[static_cast<std::size_t>(i)])
        r.coop_iterations[static_cast<std::size_t>(i)] += 1;

    if (!adaptive) continue;
    if (n == 0) {
      const int seeded = static_cast<int>(init.below(static_cast<std::uint64_t>(m)));
      r.is_cooperator[static_cast<std::size_t>(seeded)] = true;
    } else {
      std::vector<bool> next(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) {
        const double cur = r.iter_change[static_cast<std::size_t>(i)];
        const double prev = r.prev_change[static_cast<std::size_t>(i)];
        bool imp;
        if (params.differential)
          imp = (cur == prev) ? params.tie_is_improvement : cur > prev;
        else
          imp = (cur == 0.0) ? params.tie_is_improvement : cur > 0.0;
        const bool flag = r.is_cooperator[static_cast<std::size_t>(i)];
        bool decided;
        if (params.strategy == Strat::Tft)
          decided = imp;
        else  // WSLS
          decided = imp ? flag : !flag;
        next[static_cast<std::size_t>(i)] = decided;
      }
      for (int i = 0; i < m; ++i)
        r.is_cooperator[static_cast<std::size_t>(i)] =
            next[static_cast<std::size_t>(i)];
    }
  }
  return r;
}

}  // namespace oracle
