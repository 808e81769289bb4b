#include "lpbsa/config.hpp"

namespace lpbsa {

void RunConfig::validate() const {
  if (population_size == 0) throw InvalidInput("population_size must be positive");
  if (subpopulation_size == 0 || subpopulation_size % 2 != 0) {
    throw InvalidInput("subpopulation_size must be a positive even number");
  }
  if (subpopulation_size > population_size) {
    throw InvalidInput("subpopulation_size exceeds population_size");
  }
  if (selection_count == 0) throw InvalidInput("selection_count must be positive");
  if (selection_count > population_size) throw InvalidInput("selection_count exceeds population_size");
  if (max_iterations == 0) throw InvalidInput("max_iterations must be positive");
  if (!(temperature > 0.0)) throw InvalidInput("temperature must be positive");
  cooling.validate();
  if (temperature < cooling.floor) throw InvalidInput("temperature is below the cooling floor");
  if (threshold.kind == ThresholdSource::Kind::FixedConstant &&
      !(threshold.value >= 0.0 && threshold.value <= 1.0)) {
    throw InvalidInput("fixed threshold must lie in [0, 1]");
  }
  if (!(mutation_sigma >= 0.0)) throw InvalidInput("mutation_sigma must be non-negative");
}

RunConfig case_study_config() {
  RunConfig c;
  c.population_size = 16;
  c.subpopulation_size = 8;
  c.selection_count = 4;
  c.max_iterations = 2;
  c.temperature = 100.0;
  c.cooling = CoolingRule::constant();
  c.threshold = ThresholdSource::fixed(0.6);
  c.population_mode = PopulationMode::FixedPool;
  c.rejection = RejectionPolicy::Discard;
  return c;
}

}  // namespace lpbsa
