#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lpbsa/rng.hpp"

namespace lpbsa {

/// Malformed arguments: wrong dimension, bad sizes, unknown ids, etc.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A genome component outside its declared interval.
class BoundsViolation : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

enum class Sense { Minimize, Maximize };
enum class Encoding { IntegerBinary, RealVector };

std::string_view to_string(Sense sense);

/// Decision vector. Integer-encoded problems store integral values, which
/// are exact in a double for magnitudes below 2^53.
using Genome = std::vector<double>;

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double x) const { return x >= lower && x <= upper; }
  double width() const { return upper - lower; }
  double clamp(double x) const { return x < lower ? lower : (x > upper ? upper : x); }
  bool operator==(const Bounds&) const = default;
};

struct Individual {
  std::string id;
  Genome genome;
  std::optional<double> fitness;

  double cost() const { return fitness.value(); }
  bool operator==(const Individual&) const = default;
};

/// Strict preference: a beats b under `sense`. Ties are not better.
constexpr bool better(double a, double b, Sense sense) {
  return sense == Sense::Maximize ? a > b : a < b;
}

/// Natural ordering of ids ("B2" < "B10"); used to break fitness ties.
bool id_less(std::string_view a, std::string_view b);

/// Best-first ordering under `sense`, ties broken by id.
bool ranks_before(const Individual& a, const Individual& b, Sense sense);

/// Objective function, box bounds, dimension, and optimization sense.
///
/// Three objective forms are supported: a real objective, a real objective
/// that consumes noise from an explicit stream, and an integer objective
/// evaluated in exact 64-bit arithmetic.
class ObjectiveProblem {
 public:
  using RealObjective = std::function<double(std::span<const double>)>;
  using NoisyObjective = std::function<double(std::span<const double>, Rng&)>;
  using IntegerObjective = std::function<std::int64_t(std::span<const std::int64_t>)>;

  static ObjectiveProblem real(std::string name, std::vector<Bounds> bounds, Sense sense,
                               RealObjective objective);
  static ObjectiveProblem noisy(std::string name, std::vector<Bounds> bounds, Sense sense,
                                NoisyObjective objective);
  static ObjectiveProblem integer(std::string name, std::vector<Bounds> bounds, Sense sense,
                                  IntegerObjective objective);

  const std::string& name() const { return name_; }
  std::size_t dimension() const { return bounds_.size(); }
  const std::vector<Bounds>& bounds() const { return bounds_; }
  Sense sense() const { return sense_; }
  Encoding encoding() const { return encoding_; }
  bool is_noisy() const { return std::holds_alternative<NoisyObjective>(objective_); }

  /// Throws InvalidInput on dimension mismatch (or a noisy objective without
  /// a stream), BoundsViolation when a component is outside its interval or
  /// not integral for an integer encoding.
  double evaluate(std::span<const double> genome, Rng* noise = nullptr) const;

  void check_genome(std::span<const double> genome) const;

  /// Clamp to bounds (and round to integers for integer encodings).
  Genome repair(Genome genome) const;

  /// Uniform sample within bounds.
  Genome random_genome(Rng& rng) const;

 private:
  ObjectiveProblem(std::string name, std::vector<Bounds> bounds, Sense sense, Encoding encoding);

  std::string name_;
  std::vector<Bounds> bounds_;
  Sense sense_;
  Encoding encoding_;
  std::variant<RealObjective, NoisyObjective, IntegerObjective> objective_;
};

inline double evaluate(const ObjectiveProblem& problem, std::span<const double> genome,
                       Rng* noise = nullptr) {
  return problem.evaluate(genome, noise);
}

/// f(x) = x1^2 + x2^2 over integers 0..9000, maximized.
ObjectiveProblem case_study_problem();

}  // namespace lpbsa
