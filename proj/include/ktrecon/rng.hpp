#pragma once

#include <cmath>
#include <cstdint>

namespace ktrecon {

// splitmix64; used both as a stream generator and to derive independent
// sub-seeds (seed mixed with tags) so the result does not depend on call
// order. Portable across platforms, unlike <random> distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform integer in [0, n)
  std::uint64_t next_below(std::uint64_t n) {
    return next_u64() % n;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // standard normal via Box-Muller; one value per call, no cached spare,
  // so the stream position is a pure function of the call count
  double next_normal() {
    double u1 = next_double();
    double u2 = next_double();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t tag) {
    Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
    return r.next_u64();
  }

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t tag_a, std::uint64_t tag_b) {
    return mix(mix(seed, tag_a), tag_b);
  }

 private:
  std::uint64_t state_;
};

}  // namespace ktrecon
