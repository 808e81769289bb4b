#include "lpbsa/annealing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lpbsa/encoding.hpp"

namespace lpbsa {

void CoolingRule::validate() const {
  if (!(floor >= 0.0)) throw InvalidInput("cooling floor must be non-negative");
  switch (kind) {
    case Kind::Geometric:
      if (!(rate > 0.0 && rate < 1.0)) throw InvalidInput("geometric alpha must lie in (0, 1)");
      break;
    case Kind::Linear:
      if (!(rate > 0.0)) throw InvalidInput("linear cooling step must be positive");
      break;
    case Kind::Constant:
      break;
  }
}

double acceptance_probability(double cost_new, double cost_current, double temperature,
                              Sense sense) {
  if (!(temperature > 0.0)) throw InvalidInput("temperature must be positive");
  if (std::isnan(cost_new) || std::isnan(cost_current)) throw InvalidInput("cost is NaN");
  const double delta =
      sense == Sense::Minimize ? cost_new - cost_current : cost_current - cost_new;
  if (delta <= 0.0) return 1.0;
  return std::max(std::exp(-delta / temperature), std::numeric_limits<double>::denorm_min());
}

AcceptanceDecision metropolis_accept(double cost_new, double cost_current, double temperature,
                                     double threshold, Sense sense) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw InvalidInput("threshold must lie in [0, 1]");
  AcceptanceDecision d;
  d.probability = acceptance_probability(cost_new, cost_current, temperature, sense);
  d.threshold = threshold;
  d.delta = sense == Sense::Minimize ? cost_new - cost_current : cost_current - cost_new;
  d.accepted = threshold < d.probability;
  return d;
}

double cool(double temperature, const CoolingRule& rule) {
  switch (rule.kind) {
    case CoolingRule::Kind::Geometric: return std::max(rule.floor, rule.rate * temperature);
    case CoolingRule::Kind::Linear: return std::max(rule.floor, temperature - rule.rate);
    case CoolingRule::Kind::Constant: return temperature;
  }
  return temperature;
}

Neighbor default_neighbor(const ObjectiveProblem& problem, double sigma) {
  if (problem.encoding() == Encoding::RealVector) {
    return [bounds = problem.bounds(), sigma](const Genome& g, Rng& rng) {
      return mutate_real(g, sigma, rng, bounds);
    };
  }
  return [bounds = problem.bounds()](const Genome& g, Rng& rng) {
    Genome out = g;
    const auto i = static_cast<std::size_t>(rng.below(out.size()));
    const auto offset = static_cast<std::int64_t>(out[i] - bounds[i].lower);
    const auto bits = encode(offset);
    const auto mutated = mutate_binary(bits, FlipDirection::AnyFlip, rng);
    out[i] = bounds[i].clamp(bounds[i].lower + static_cast<double>(decode(mutated)));
    return out;
  };
}

SaResult sa_optimize(const ObjectiveProblem& problem, const Neighbor& neighbor,
                     const SaConfig& config, Rng& rng, std::optional<Genome> start) {
  config.cooling.validate();
  if (!(config.initial_temperature > 0.0)) throw InvalidInput("initial temperature must be positive");
  if (!(config.initial_temperature >= config.cooling.floor)) {
    throw InvalidInput("initial temperature is below the cooling floor");
  }
  Rng noise = rng.split();
  auto eval = [&](const Genome& g) {
    return problem.evaluate(g, problem.is_noisy() ? &noise : nullptr);
  };

  Individual current{"S0", start ? problem.repair(*start) : problem.random_genome(rng), {}};
  current.fitness = eval(current.genome);

  SaResult result;
  result.initial = current;
  result.best = current;
  result.evaluations = 1;
  result.convergence.push_back({0, 1, current.cost()});

  double temperature = config.initial_temperature;
  for (std::size_t step = 1; step <= config.budget; ++step) {
    Individual candidate{"S" + std::to_string(step), problem.repair(neighbor(current.genome, rng)), {}};
    candidate.fitness = eval(candidate.genome);
    ++result.evaluations;

    if (better(candidate.cost(), result.best.cost(), problem.sense())) result.best = candidate;
    const auto decision = metropolis_accept(candidate.cost(), current.cost(), temperature,
                                            rng.uniform(), problem.sense());
    if (decision.accepted) {
      if (decision.delta > 0.0) ++result.accepted_worse;
      current = std::move(candidate);
    }
    result.iterations = step;
    result.convergence.push_back({step, result.evaluations, result.best.cost()});

    temperature = cool(temperature, config.cooling);
    if (config.cooling.kind != CoolingRule::Kind::Constant && temperature <= config.cooling.floor) {
      break;
    }
  }
  result.final_current = current;
  return result;
}

}  // namespace lpbsa
