#pragma once

#include <cstdint>
#include <random>

namespace fieldplan {

// Seedable random source with platform-stable streams.
//
// The raw generator is std::mt19937_64, whose output sequence is fixed by the
// C++ standard for a given seed. The mappings below avoid
// std::uniform_*_distribution on purpose: those are implementation-defined,
// and instance generation must reproduce bit-identically everywhere.
//
//   next_u64  -> raw 64-bit word
//   uniform() -> (word >> 11) * 2^-53, i.e. the top 53 bits as a double in [0,1)
//   uniform_int(lo,hi) -> rejection sampling on the raw words (no modulo bias)
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return lo + static_cast<std::int64_t>(next_u64()); // full 64-bit range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t word;
    do {
      word = next_u64();
    } while (word >= limit);
    return lo + static_cast<std::int64_t>(word % span);
  }

  // Bernoulli draw; consumes exactly one word.
  bool chance(double p) { return uniform() < p; }

private:
  std::mt19937_64 engine_;
};

} // namespace fieldplan
