#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpbsa/core.hpp"
#include "lpbsa/rng.hpp"

namespace lpbsa::bench {

/// One member of the classical 19-function minimization suite.
///
/// TF1-TF13 are scalable (default dimension 30); TF14-TF19 have a fixed
/// dimension. TF7 adds a uniform [0, 1) noise term drawn from a caller
/// supplied stream.
struct BenchmarkFunction {
  using Fn = std::function<double(std::span<const double>, Rng*)>;

  std::string id;
  std::string name;
  bool scalable = true;
  std::size_t default_dimension = 30;
  std::size_t min_dimension = 1;
  /// Per-dimension interval; scalable functions repeat element 0.
  std::vector<Bounds> box;
  bool noisy = false;
  std::string optimum_description;
  std::string note;

  Fn fn;
  std::function<double(std::size_t)> optimum_value;
  std::function<Genome(std::size_t)> optimum_point;

  std::vector<Bounds> bounds(std::size_t dimension) const;
  double known_optimum(std::size_t dimension) const { return optimum_value(dimension); }
  Genome optimum_location(std::size_t dimension) const { return optimum_point(dimension); }
  /// Throws InvalidInput when `dimension` is not allowed for this function.
  void check_dimension(std::size_t dimension) const;
  /// Minimization problem over bounds(dimension). 0 means default dimension.
  ObjectiveProblem problem(std::size_t dimension = 0) const;
};

const std::vector<BenchmarkFunction>& registry();

/// Accepts "TF7" or "tf7". Throws InvalidInput for unknown ids.
const BenchmarkFunction& lookup(std::string_view id);

/// Validates dimension and bounds, then evaluates. `noise` is required for
/// TF7 and ignored otherwise.
double evaluate_tf(std::string_view id, std::span<const double> point, Rng* noise = nullptr);

}  // namespace lpbsa::bench
