#include "lpbsa/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "lpbsa/assets.hpp"
#include "lpbsa/benchmarks.hpp"
#include "lpbsa/engine.hpp"

namespace lpbsa::harness {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Lpbsa: return "lpbsa";
    case Algorithm::Lpb: return "lpb";
    case Algorithm::Sa: return "sa";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "lpbsa") return Algorithm::Lpbsa;
  if (name == "lpb") return Algorithm::Lpb;
  if (name == "sa") return Algorithm::Sa;
  throw InvalidInput("unknown algorithm '" + std::string(name) + "' (expected lpbsa, lpb or sa)");
}

std::pair<double, double> mean_and_std(std::span<const double> values) {
  if (values.empty()) throw InvalidInput("mean_and_std: empty sample");
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return {mean, std::sqrt(sq / static_cast<double>(values.size()))};
}

RunOutcome run_single(Algorithm algorithm, const ObjectiveProblem& problem,
                      const ExperimentConfig& config, std::size_t run_index) {
  if (config.evaluation_budget < 1) throw InvalidInput("evaluation budget must be positive");
  RunOutcome out;
  out.run_index = run_index;
  out.seed = config.base_seed + run_index;
  Rng rng = Rng::for_run(config.base_seed, run_index);

  if (algorithm == Algorithm::Sa) {
    SaConfig sa;
    sa.initial_temperature = config.run.temperature;
    sa.cooling = config.run.cooling;
    sa.budget = config.evaluation_budget - 1;
    auto result = sa_optimize(problem, default_neighbor(problem, config.run.mutation_sigma), sa, rng);
    out.final_best = result.best.cost();
    out.best_genome = result.best.genome;
    out.evaluations = result.evaluations;
    // Thin to the engine's per-iteration grid so series stay comparable.
    const std::size_t stride = evaluations_per_iteration(config.run);
    for (const auto& p : result.convergence) {
      if (p.iteration % stride == 0 || &p == &result.convergence.back()) out.convergence.push_back(p);
    }
    return out;
  }

  RunConfig run = config.run;
  run.max_evaluations = config.evaluation_budget;
  run.max_iterations = std::max<std::size_t>(config.evaluation_budget, 1);
  run.seed = out.seed;
  EngineOptions options;
  options.keep_history = false;
  const auto kind = algorithm == Algorithm::Lpbsa ? EngineKind::Lpbsa : EngineKind::Lpb;
  auto result = run_engine(kind, problem, run, rng, options);
  out.final_best = result.best.cost();
  out.best_genome = result.best.genome;
  out.evaluations = result.evaluations;
  out.convergence = std::move(result.convergence);
  return out;
}

RunStats summarize(std::string function_id, Algorithm algorithm, Sense sense,
                   std::vector<RunOutcome> outcomes) {
  if (outcomes.empty()) throw InvalidInput("summarize: no runs");
  std::sort(outcomes.begin(), outcomes.end(),
            [](const RunOutcome& a, const RunOutcome& b) { return a.run_index < b.run_index; });
  RunStats s;
  s.function_id = std::move(function_id);
  s.algorithm = std::string(to_string(algorithm));
  s.sense = sense;
  s.runs = outcomes.size();
  for (auto& o : outcomes) {
    s.per_run_finals.push_back(o.final_best);
    s.convergence.push_back(std::move(o.convergence));
  }
  std::tie(s.average, s.std) = mean_and_std(s.per_run_finals);
  s.best = s.worst = s.per_run_finals.front();
  for (double v : s.per_run_finals) {
    if (better(v, s.best, sense)) s.best = v;
    if (better(s.worst, v, sense)) s.worst = v;
  }
  return s;
}

namespace {

void check_runs(const ExperimentConfig& config) {
  if (config.runs < 1) throw InvalidInput("runs must be at least 1");
  config.run.validate();
}

}  // namespace

RunStats run_experiment(Algorithm algorithm, const ObjectiveProblem& problem,
                        const ExperimentConfig& config, std::string function_id) {
  check_runs(config);
  std::vector<RunOutcome> outcomes(config.runs);
  std::exception_ptr error;
  const auto runs = static_cast<std::int64_t>(config.runs);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < runs; ++k) {
    try {
      outcomes[static_cast<std::size_t>(k)] =
          run_single(algorithm, problem, config, static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(lpbsa_harness_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return summarize(std::move(function_id), algorithm, problem.sense(), std::move(outcomes));
}

RunStats run_experiment_serial(Algorithm algorithm, const ObjectiveProblem& problem,
                               const ExperimentConfig& config, std::string function_id) {
  check_runs(config);
  std::vector<RunOutcome> outcomes;
  outcomes.reserve(config.runs);
  for (std::size_t k = 0; k < config.runs; ++k) {
    outcomes.push_back(run_single(algorithm, problem, config, k));
  }
  return summarize(std::move(function_id), algorithm, problem.sense(), std::move(outcomes));
}

RunStats run_experiment(Algorithm algorithm, std::string_view tf, const ExperimentConfig& config) {
  const auto& f = bench::lookup(tf);
  return run_experiment(algorithm, f.problem(config.dimension), config, f.id);
}

RunStats run_experiment_serial(Algorithm algorithm, std::string_view tf,
                               const ExperimentConfig& config) {
  const auto& f = bench::lookup(tf);
  return run_experiment_serial(algorithm, f.problem(config.dimension), config, f.id);
}

namespace {

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (auto& f : out) {
    while (!f.empty() && (f.back() == '\r' || f.back() == ' ')) f.pop_back();
  }
  return out;
}

struct ReferenceData {
  std::vector<std::string> columns;
  std::vector<ReferenceRow> rows;
};

const ReferenceData& reference_data() {
  static const ReferenceData data = [] {
    ReferenceData d;
    std::istringstream in{std::string(assets::reference_table_csv())};
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto fields = split_csv_line(line);
      if (header) {
        d.columns.assign(fields.begin() + 1, fields.end());
        header = false;
        continue;
      }
      ReferenceRow row{fields.front(), {fields.begin() + 1, fields.end()}};
      d.rows.push_back(std::move(row));
    }
    return d;
  }();
  return data;
}

/// Function ids and algorithm names in first-seen order.
template <class Key>
std::vector<std::string> distinct(std::span<const RunStats> stats, Key key) {
  std::vector<std::string> out;
  for (const auto& s : stats) {
    const std::string& k = key(s);
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  }
  return out;
}

const RunStats* find_stats(std::span<const RunStats> stats, const std::string& tf,
                           const std::string& alg) {
  for (const auto& s : stats) {
    if (s.function_id == tf && s.algorithm == alg) return &s;
  }
  return nullptr;
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

const std::vector<std::string>& reference_columns() { return reference_data().columns; }
const std::vector<ReferenceRow>& reference_table() { return reference_data().rows; }

const ReferenceRow* reference_for(std::string_view tf) {
  for (const auto& r : reference_table()) {
    if (r.tf == tf) return &r;
  }
  return nullptr;
}

std::string format_scientific(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

void write_stats_csv(std::ostream& os, std::span<const RunStats> stats) {
  os << "function,algorithm,runs,average,std,best,worst\n";
  for (const auto& s : stats) {
    os << s.function_id << ',' << s.algorithm << ',' << s.runs << ',' << format_scientific(s.average)
       << ',' << format_scientific(s.std) << ',' << format_scientific(s.best) << ','
       << format_scientific(s.worst) << '\n';
  }
}

void write_finals_csv(std::ostream& os, std::span<const RunStats> stats) {
  os << "function,algorithm,run,final\n";
  for (const auto& s : stats) {
    for (std::size_t k = 0; k < s.per_run_finals.size(); ++k) {
      os << s.function_id << ',' << s.algorithm << ',' << k << ','
         << format_scientific(s.per_run_finals[k]) << '\n';
    }
  }
}

void write_convergence_csv(std::ostream& os, std::span<const RunStats> stats) {
  os << "function,algorithm,run,iteration,evaluations,best\n";
  for (const auto& s : stats) {
    for (std::size_t k = 0; k < s.convergence.size(); ++k) {
      for (const auto& p : s.convergence[k]) {
        os << s.function_id << ',' << s.algorithm << ',' << k << ',' << p.iteration << ','
           << p.evaluations << ',' << format_scientific(p.best) << '\n';
      }
    }
  }
}

void write_comparison_csv(std::ostream& os, std::span<const RunStats> stats, bool with_reference) {
  const auto tfs = distinct(stats, [](const RunStats& s) -> const std::string& { return s.function_id; });
  const auto algs = distinct(stats, [](const RunStats& s) -> const std::string& { return s.algorithm; });
  os << "tf";
  for (const auto& a : algs) os << ',' << upper(a) << "_AVA," << upper(a) << "_STD";
  if (with_reference) {
    for (const auto& c : reference_columns()) os << ",ref_" << c;
  }
  os << '\n';
  for (const auto& tf : tfs) {
    os << tf;
    for (const auto& a : algs) {
      const auto* s = find_stats(stats, tf, a);
      if (s) os << ',' << format_scientific(s->average) << ',' << format_scientific(s->std);
      else os << ",,";
    }
    if (with_reference) {
      const auto* ref = reference_for(tf);
      for (std::size_t i = 0; i < reference_columns().size(); ++i) {
        os << ',' << (ref ? ref->values[i] : std::string());
      }
    }
    os << '\n';
  }
}

void write_table(std::ostream& os, std::span<const RunStats> stats, bool with_reference) {
  const auto tfs = distinct(stats, [](const RunStats& s) -> const std::string& { return s.function_id; });
  const auto algs = distinct(stats, [](const RunStats& s) -> const std::string& { return s.algorithm; });
  std::vector<std::string> header{"TF"};
  for (const auto& a : algs) {
    header.push_back(upper(a) + " AVA");
    header.push_back(upper(a) + " STD");
  }
  if (with_reference) {
    for (const auto& c : reference_columns()) header.push_back("ref " + c);
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& tf : tfs) {
    std::vector<std::string> row{tf};
    for (const auto& a : algs) {
      const auto* s = find_stats(stats, tf, a);
      std::ostringstream avg, sd;
      avg.imbue(std::locale::classic());
      sd.imbue(std::locale::classic());
      if (s) {
        avg << std::scientific << std::setprecision(6) << s->average;
        sd << std::scientific << std::setprecision(6) << s->std;
      }
      row.push_back(avg.str());
      row.push_back(sd.str());
    }
    if (with_reference) {
      const auto* ref = reference_for(tf);
      for (std::size_t i = 0; i < reference_columns().size(); ++i) {
        row.push_back(ref ? ref->values[i] : std::string());
      }
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  auto print = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << "  ";
      os << std::left << std::setw(static_cast<int>(width[i])) << r[i];
    }
    os << std::right << '\n';
  };
  print(header);
  for (const auto& r : rows) print(r);
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

template <class Fn>
std::string render(Fn fn) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  fn(os);
  return os.str();
}

}  // namespace

void emit_results(std::span<const RunStats> stats, const std::filesystem::path& directory,
                  const EmitOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec || !std::filesystem::is_directory(directory)) {
    throw IoError("cannot create output directory " + directory.string());
  }
  write_file(directory / "stats.csv", render([&](std::ostream& os) { write_stats_csv(os, stats); }));
  write_file(directory / "finals.csv", render([&](std::ostream& os) { write_finals_csv(os, stats); }));
  write_file(directory / "convergence.csv",
             render([&](std::ostream& os) { write_convergence_csv(os, stats); }));
  write_file(directory / "comparison.csv", render([&](std::ostream& os) {
               write_comparison_csv(os, stats, options.with_reference);
             }));
  write_file(directory / "config.txt", render([&](std::ostream& os) {
               os << "# std_divisor = n (population standard deviation)\n";
               for (const auto& [k, v] : options.config_snapshot) os << k << " = " << v << '\n';
             }));
}

}  // namespace lpbsa::harness
