#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpbsa/annealing.hpp"
#include "lpbsa/config.hpp"
#include "lpbsa/core.hpp"
#include "lpbsa/decision_script.hpp"
#include "lpbsa/grouping.hpp"
#include "lpbsa/rng.hpp"

namespace lpbsa {

enum class EngineKind { Lpbsa, Lpb };

struct CrossoverPair {
  Individual parent;
  Individual partner;
  std::string partner_label;  // "K<rank>" for subpopulation members

  bool operator==(const CrossoverPair&) const = default;
};

struct ChildRecord {
  Individual crossover;  // pre-mutation child, evaluated
  Individual mutated;
  /// Flipped bit per gene for integer encodings (nullopt: nothing eligible).
  std::vector<std::optional<std::size_t>> mutation_bits;
  std::vector<std::size_t> forced_genes;
  /// Absent for the plain LPB engine, which accepts every child.
  std::optional<AcceptanceDecision> decision;
  bool verdict_forced = false;
  bool accepted = true;

  bool operator==(const ChildRecord&) const = default;
};

struct IterationRecord {
  std::size_t iteration = 0;
  double temperature = 0.0;  // temperature used by this iteration's filter
  std::vector<Individual> population;  // working population at iteration start
  SubpopulationSplit split;
  PopulationPartition partition;  // aligned with `population`
  std::vector<Individual> parents;
  std::vector<CrossoverPair> pairs;
  std::vector<ChildRecord> children;
  std::vector<Individual> survivors;  // working population after the update
  /// Mean over parents, partners and accepted children (truncated toward
  /// zero for integer problems).
  double summary_average = 0.0;
  /// Mean fitness of `survivors`.
  double population_average = 0.0;
  double best_so_far = 0.0;
  std::size_t evaluations = 0;

  bool operator==(const IterationRecord&) const = default;
};

struct EngineOptions {
  const DecisionScript* script = nullptr;
  bool keep_history = true;
  /// Capture the decisions this run made as a replayable script (integer
  /// encodings only).
  bool record_script = false;
};

struct RunResult {
  Individual best;
  std::vector<Individual> initial_population;
  double initial_average = 0.0;
  std::vector<Individual> final_population;
  std::vector<IterationRecord> history;
  std::vector<ConvergencePoint> convergence;  // entry 0 is the initial population
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  double final_temperature = 0.0;
  DecisionScript recorded;
};

/// Objective evaluations spent per iteration: each of the 2N children is
/// evaluated after crossover and again after mutation.
std::size_t evaluations_per_iteration(const RunConfig& config);

/// LPB with a Metropolis filter between mutation and population update.
RunResult lpbsa_run(const ObjectiveProblem& problem, const RunConfig& config, Rng& rng,
                    const EngineOptions& options = {});

/// The same pipeline with every child accepted.
RunResult lpb_run(const ObjectiveProblem& problem, const RunConfig& config, Rng& rng,
                  const EngineOptions& options = {});

RunResult run_engine(EngineKind kind, const ObjectiveProblem& problem, const RunConfig& config,
                     Rng& rng, const EngineOptions& options = {});

/// Ranks incumbents and entrants together and keeps the best `capacity`.
/// Survivors keep their relative order: incumbents first, then entrants.
std::vector<Individual> update_population(std::span<const Individual> population,
                                          std::span<const Individual> entrants, Sense sense,
                                          std::size_t capacity);

/// Arithmetic mean; for integer encodings the exact integer sum is divided
/// and truncated toward zero. Throws InvalidInput on an empty set.
double summary_average(std::span<const double> fitness, Encoding encoding);

}  // namespace lpbsa
