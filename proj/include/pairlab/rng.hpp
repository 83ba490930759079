#pragma once

#include <cstdint>
#include <cmath>
#include <utility>

namespace pairlab {

// Counter-based random stream: output t is a pure function of
// (seed, stream, t), so independent streams can be consumed in any
// order (or in parallel) with identical results.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix2(seed, stream)), ctr_(0) {}

  std::uint64_t next_u64() {
    std::uint64_t z = key_ + (ctr_++) * 0x9E3779B97F4A7C15ull;
    return finalize(z);
  }

  // uniform in [0, 1)
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform in [0, m), unbiased via rejection
  std::uint64_t next_below(std::uint64_t m) {
    if (m <= 1) return 0;
    const std::uint64_t lim = ~0ull - ~0ull % m;
    std::uint64_t x = next_u64();
    while (x >= lim) x = next_u64();
    return x % m;
  }

  // Box-Muller pair of standard normals
  std::pair<double, double> next_normal_pair() {
    double u1 = next_unit();
    double u2 = next_unit();
    // avoid log(0)
    double r = std::sqrt(-2.0 * std::log1p(-u1));
    double t = 6.283185307179586476925286766559 * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

  static std::uint64_t finalize(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  static std::uint64_t mix2(std::uint64_t a, std::uint64_t b) {
    return finalize(finalize(a + 0x9E3779B97F4A7C15ull) ^
                    finalize(b + 0xD1B54A32D192ED03ull));
  }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_;
};

// Deterministic seed derivation for sub-streams (trials, stages, ...).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  return StreamRng::mix2(seed, tag);
}

}  // namespace pairlab
