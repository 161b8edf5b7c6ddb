#pragma once

#include <cmath>
#include <cstdint>

namespace hhlab {

/// SplitMix64 generator (Steele/Lea/Vigna). The state advances by a fixed
/// increment, so the k-th output is a pure function of seed + k*gamma and
/// substreams derived with derive_stream() are reproducible everywhere.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Standard normal via Box-Muller; consumes exactly two draws.
  double normal() {
    const double u1 = 1.0 - next_double();  // (0, 1]
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

private:
  std::uint64_t state_;
};

/// Seed of an independent substream, derived deterministically from a root
/// seed and a stream index. Streams with distinct indices do not overlap in
/// any run length used here.
inline std::uint64_t derive_stream(std::uint64_t root, std::uint64_t stream) {
  SplitMix64 g(root ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  return g.next_u64();
}

}  // namespace hhlab
