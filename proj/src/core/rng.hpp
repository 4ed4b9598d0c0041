#pragma once

#include <cstdint>

namespace catoni {

// SplitMix64 generator. One instance per Monte Carlo trial, seeded from
// (master seed XOR trial index), keeps every trial's draws independent of
// thread count and scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 for_trial(std::uint64_t master_seed, std::uint64_t trial_index) {
    return SplitMix64(master_seed ^ trial_index);
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on the open interval (0, 1). Endpoints are unreachable, so
  // inverse-CDF transforms stay finite.
  double uniform01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace catoni
