#pragma once

#include <cstdint>
#include <random>

namespace cglab {

/// Seedable deterministic random stream with cheap derivation of independent
/// substreams. Substreams are keyed, so removing one consumer from a sweep
/// leaves every other consumer's stream untouched.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(scramble(seed)) {}

  /// Independent stream derived from (seed, key).
  Rng substream(std::uint64_t key) const {
    return Rng(scramble(seed_ ^ scramble(key + 0x9e3779b97f4a7c15ULL)));
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return engine_(); }

  /// Unbiased uniform draw from [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n) {
    std::uniform_int_distribution<std::uint64_t> dist(0, n - 1);
    return dist(engine_);
  }

  double uniform01() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  static std::uint64_t scramble(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace cglab
