#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "lpbsa/core.hpp"
#include "lpbsa/rng.hpp"

namespace lpbsa {

/// Temperature update applied once per iteration.
struct CoolingRule {
  enum class Kind { Geometric, Linear, Constant };

  Kind kind = Kind::Constant;
  double rate = 0.0;  // alpha for Geometric, step for Linear, unused for Constant
  double floor = 0.0;

  static CoolingRule geometric(double alpha, double floor = 0.0) {
    return {Kind::Geometric, alpha, floor};
  }
  static CoolingRule linear(double step, double floor = 0.0) { return {Kind::Linear, step, floor}; }
  static CoolingRule constant() { return {Kind::Constant, 0.0, 0.0}; }

  /// Throws InvalidInput for alpha outside (0,1), non-positive step, or a
  /// negative floor.
  void validate() const;
  bool operator==(const CoolingRule&) const = default;
};

/// Outcome of one Metropolis test. `delta` is oriented so positive means the
/// candidate is worse.
struct AcceptanceDecision {
  double probability = 1.0;
  double threshold = 0.0;
  double delta = 0.0;
  bool accepted = true;

  bool operator==(const AcceptanceDecision&) const = default;
};

/// 1 when the candidate is no worse, else exp(-delta / temperature). A
/// result that underflows is returned as the smallest positive double, so
/// the probability always lies in (0, 1].
double acceptance_probability(double cost_new, double cost_current, double temperature,
                              Sense sense);

/// Accepts iff threshold < acceptance_probability(...).
AcceptanceDecision metropolis_accept(double cost_new, double cost_current, double temperature,
                                     double threshold, Sense sense);

double cool(double temperature, const CoolingRule& rule);

struct SaConfig {
  double initial_temperature = 10.0;
  CoolingRule cooling = CoolingRule::geometric(0.99);
  std::size_t budget = 10000;  // neighbor evaluations
};

struct ConvergencePoint {
  std::size_t iteration = 0;
  std::size_t evaluations = 0;
  double best = 0.0;

  bool operator==(const ConvergencePoint&) const = default;
};

struct SaResult {
  Individual best;
  Individual initial;
  Individual final_current;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  std::size_t accepted_worse = 0;
  std::vector<ConvergencePoint> convergence;
};

using Neighbor = std::function<Genome(const Genome&, Rng&)>;

/// Single-coordinate Gaussian step for real problems, a single AnyFlip bit
/// on one gene for integer problems. Results are repaired to bounds.
Neighbor default_neighbor(const ObjectiveProblem& problem, double sigma = 0.1);

/// Plain simulated annealing: perturb, Metropolis-accept against a fresh
/// uniform threshold, cool; stops after `budget` steps, or once a cooling
/// rule has driven the temperature to a positive floor.
SaResult sa_optimize(const ObjectiveProblem& problem, const Neighbor& neighbor,
                     const SaConfig& config, Rng& rng,
                     std::optional<Genome> start = std::nullopt);

}  // namespace lpbsa
