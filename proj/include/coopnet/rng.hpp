#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace coopnet {

// Seeded random stream. Wraps mt19937_64 but maps raw draws to uniform
// doubles/integers with fixed algorithms, so sequences are identical on
// every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Unbiased uniform integer in [0, n). Rejection sampling.
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (max % n + 1) % n;  // 2^64 mod n
    if (rem == 0) return next_u64() % n;
    const std::uint64_t limit = max - rem + 1;  // largest multiple of n <= 2^64
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent substreams per topology: node placement, slot traffic, and
// the scenario-2 initial-cooperator draw. Keeping the last one separate
// means every strategy sees the exact same placement and pair sequence.
enum class Stream : std::uint64_t { Topology = 1, Traffic = 2, Init = 3 };

inline std::uint64_t substream_seed(std::uint64_t master_seed,
                                    std::uint64_t topology_id, Stream stream) {
  std::uint64_t z = splitmix64(master_seed);
  z = splitmix64(z ^ (topology_id + 0x51ed270b0f4d2c9fULL));
  z = splitmix64(z ^ static_cast<std::uint64_t>(stream));
  return z;
}

}  // namespace coopnet
