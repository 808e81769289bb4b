#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpbsa/annealing.hpp"
#include "lpbsa/config.hpp"
#include "lpbsa/core.hpp"

namespace lpbsa::harness {

enum class Algorithm { Lpbsa, Lpb, Sa };

std::string_view to_string(Algorithm a);
/// "lpbsa", "lpb" or "sa". Throws InvalidInput otherwise.
Algorithm parse_algorithm(std::string_view name);

/// Unwritable output destination.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  RunConfig run;
  std::size_t dimension = 0;  // 0: the function's default
  std::size_t runs = 30;
  std::uint64_t base_seed = 1;
  /// Objective evaluations per run, shared by every algorithm.
  std::size_t evaluation_budget = 10000;
};

struct RunOutcome {
  std::size_t run_index = 0;
  std::uint64_t seed = 0;
  double final_best = 0.0;
  Genome best_genome;
  std::size_t evaluations = 0;
  std::vector<ConvergencePoint> convergence;

  bool operator==(const RunOutcome&) const = default;
};

struct RunStats {
  std::string function_id;
  std::string algorithm;
  Sense sense = Sense::Minimize;
  std::size_t runs = 0;
  double average = 0.0;
  double std = 0.0;  // population form, divisor n
  double best = 0.0;
  double worst = 0.0;
  std::vector<double> per_run_finals;
  std::vector<std::vector<ConvergencePoint>> convergence;

  bool operator==(const RunStats&) const = default;
};

/// Mean and population standard deviation (divisor n).
std::pair<double, double> mean_and_std(std::span<const double> values);

/// One seeded run (seed = base_seed + run_index) under the evaluation budget.
RunOutcome run_single(Algorithm algorithm, const ObjectiveProblem& problem,
                      const ExperimentConfig& config, std::size_t run_index);

/// Sorts outcomes by run index and computes the statistics.
RunStats summarize(std::string function_id, Algorithm algorithm, Sense sense,
                   std::vector<RunOutcome> outcomes);

/// Runs execute in parallel (OpenMP); results do not depend on the thread
/// count.
RunStats run_experiment(Algorithm algorithm, const ObjectiveProblem& problem,
                        const ExperimentConfig& config, std::string function_id);
RunStats run_experiment(Algorithm algorithm, std::string_view tf, const ExperimentConfig& config);

/// Sequential reference for run_experiment.
RunStats run_experiment_serial(Algorithm algorithm, const ObjectiveProblem& problem,
                               const ExperimentConfig& config, std::string function_id);
RunStats run_experiment_serial(Algorithm algorithm, std::string_view tf,
                               const ExperimentConfig& config);

/// Published comparison constants, kept as their original text.
struct ReferenceRow {
  std::string tf;
  std::vector<std::string> values;  // LPBSA, LPB, DA, PSO, GA; AVA then STD each
};

const std::vector<std::string>& reference_columns();
const std::vector<ReferenceRow>& reference_table();
const ReferenceRow* reference_for(std::string_view tf);

/// "%.16e" via std::to_chars: locale independent, 17 significant digits.
std::string format_scientific(double v);

void write_stats_csv(std::ostream& os, std::span<const RunStats> stats);
void write_finals_csv(std::ostream& os, std::span<const RunStats> stats);
void write_convergence_csv(std::ostream& os, std::span<const RunStats> stats);
/// Rows are function ids in first-seen order, columns are <alg>_AVA/<alg>_STD
/// per algorithm; reference columns are appended when requested.
void write_comparison_csv(std::ostream& os, std::span<const RunStats> stats, bool with_reference);
void write_table(std::ostream& os, std::span<const RunStats> stats, bool with_reference);

struct EmitOptions {
  bool with_reference = false;
  /// Extra key = value lines written to config.txt.
  std::vector<std::pair<std::string, std::string>> config_snapshot;
};

/// Writes stats.csv, finals.csv, convergence.csv, comparison.csv and
/// config.txt under `directory`, creating it if needed. Throws IoError.
void emit_results(std::span<const RunStats> stats, const std::filesystem::path& directory,
                  const EmitOptions& options);

}  // namespace lpbsa::harness
