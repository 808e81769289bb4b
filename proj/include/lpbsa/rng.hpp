#pragma once

#include <cstdint>
#include <random>

namespace lpbsa {

/// Seeded random stream used by every stochastic step.
///
/// The raw generator is std::mt19937_64, whose output sequence is fixed by
/// the C++ standard. The seed is first passed through one SplitMix64 round so
/// that adjacent seeds (base + run index) start from unrelated states. All
/// derived draws (uniform reals, bounded integers, normals) are computed here
/// rather than through <random> distributions, whose algorithms differ
/// between standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Stream for run `run_index` of an experiment seeded with `base_seed`.
  static Rng for_run(std::uint64_t base_seed, std::uint64_t run_index) {
    return Rng(base_seed + run_index);
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lower, double upper);

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  /// Uniform integer in [lower, upper], inclusive.
  std::int64_t integer(std::int64_t lower, std::int64_t upper);

  /// Standard normal draw (Box-Muller, one value per call).
  double normal();

  /// Independent child stream seeded from this stream's next output.
  Rng split();

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace lpbsa
