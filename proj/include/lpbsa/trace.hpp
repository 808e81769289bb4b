#pragma once

#include <iosfwd>
#include <vector>

#include "lpbsa/decision_script.hpp"
#include "lpbsa/engine.hpp"

namespace lpbsa {

struct TraceResult {
  RunResult run;
  /// Initial population average followed by one summary average per iteration.
  std::vector<double> averages;
};

/// Replays `script` on the worked example problem with case_study_config().
/// Throws ReplayDesync or InvalidInput.
TraceResult run_trace(const DecisionScript& script);

/// Human-readable tables for every iteration, ending with one line holding
/// the averages separated by spaces.
void write_trace(std::ostream& os, const TraceResult& trace, const ObjectiveProblem& problem);

}  // namespace lpbsa
