#pragma once

#include <cmath>
#include <cstdint>

namespace clab {

// splitmix64; used everywhere randomness is needed so that results are
// reproducible across platforms (std <random> distributions are not).
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in (0, 1); never returns 0 so -log is finite
  double uniform() {
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return u > 0.0 ? u : 0x1.0p-53;
  }

  double exponential() { return -std::log(uniform()); }

  // standard normal via Box-Muller (deterministic, no cached spare)
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }
};

// stream derivation: restart i of a multi-start search gets its own stream
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  SplitMix64 s(master ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  return s.next();
}

}  // namespace clab
