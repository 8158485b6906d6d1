#pragma once

#include <cstdint>

namespace rcurves {

/// Counter-based deterministic PRNG built on the SplitMix64 finalizer
/// (constants from Steele, Lea, Flood's SplitMix; the same mixer as in
/// java.util.SplittableRandom). Output at position i of stream s under a
/// seed is a pure function of (seed, s, i), so work can be sharded across
/// threads in any order and still reproduce byte-identical results.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static std::uint64_t at(std::uint64_t seed, std::uint64_t stream, std::uint64_t i) {
    // Distinct golden-ratio multiples keep (stream, i) pairs well separated.
    std::uint64_t z = seed;
    z ^= mix(stream + 0x9E3779B97F4A7C15ull);
    z ^= mix(i * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull);
    return mix(z + 0x2545F4914F6CDD1Dull);
  }

  std::uint64_t next() { return at(seed_, stream_, counter_++); }

  /// Uniform value in [0, bound) by reduction; bias is irrelevant here
  /// because outputs only need determinism, not statistical quality.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  long long next_in(long long lo, long long hi) {
    return lo + static_cast<long long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace rcurves
