#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "lpbsa/annealing.hpp"

namespace lpbsa {

/// Where each child's Metropolis threshold comes from.
struct ThresholdSource {
  enum class Kind { FreshUniformPerChild, FixedConstant };

  Kind kind = Kind::FreshUniformPerChild;
  double value = 0.0;

  static ThresholdSource fresh() { return {}; }
  static ThresholdSource fixed(double v) { return {Kind::FixedConstant, v}; }
  bool operator==(const ThresholdSource&) const = default;
};

/// How the working population evolves between iterations.
enum class PopulationMode {
  Elitist,     // merge accepted children, keep the best population_size
  FixedPool,   // keep the initial pool; children are only reported
};

/// What a rejected mutation leaves behind.
enum class RejectionPolicy {
  KeepPremutation,  // the crossover child stays a candidate (Metropolis "stay")
  Discard,          // the child is dropped entirely
};

struct RunConfig {
  std::size_t population_size = 30;
  std::size_t subpopulation_size = 10;
  std::size_t selection_count = 5;
  std::size_t max_iterations = 500;
  /// Optional cap on objective evaluations. An iteration that would exceed
  /// it is not started.
  std::optional<std::size_t> max_evaluations;
  double temperature = 1.0;
  CoolingRule cooling = CoolingRule::geometric(0.99, 1e-12);
  ThresholdSource threshold = ThresholdSource::fresh();
  double mutation_sigma = 0.1;
  PopulationMode population_mode = PopulationMode::Elitist;
  RejectionPolicy rejection = RejectionPolicy::KeepPremutation;
  std::uint64_t seed = 1;

  /// Throws InvalidInput when a field violates its constraints.
  void validate() const;
};

/// Settings that replay the worked example: 16 individuals, subpopulation
/// of 8, 4 parents, T = 100 held constant, threshold fixed at 0.6, two
/// iterations drawn from the initial pool.
RunConfig case_study_config();

}  // namespace lpbsa
