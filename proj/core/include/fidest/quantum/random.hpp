#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <random>

namespace fidest {

// Seeded xoshiro256** generator. Identical seeds give bit-identical draw
// sequences; split(i) derives an independent sub-stream for work item i, so
// parallel experiments are reproducible regardless of scheduling.
//
// Satisfies UniformRandomBitGenerator, so <random> distributions accept it.
class RandomSource {
 public:
  using result_type = std::uint64_t;

  explicit RandomSource(std::uint64_t seed = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  std::uint64_t seed() const noexcept { return seed_; }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform();

  // Standard normal deviate.
  double normal();

  // Child stream keyed by (seed, stream). Does not advance this generator.
  RandomSource split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> s_{};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace fidest
