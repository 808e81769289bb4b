#include "lpbsa/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "lpbsa/assets.hpp"
#include "lpbsa/benchmarks.hpp"
#include "lpbsa/harness.hpp"
#include "lpbsa/trace.hpp"

namespace lpbsa::cli {

namespace {

struct EngineParams {
  std::size_t population = 30;
  std::size_t subpopulation = 10;
  std::size_t selection = 5;
  double temperature = 1.0;
  double alpha = 0.99;
  double temperature_floor = 1e-12;
  double sigma = 0.1;
  std::optional<double> threshold;
  std::string mode = "elitist";
  std::string rejection = "keep";
  std::size_t budget = 10000;
  std::size_t dimension = 0;

  RunConfig to_run_config() const {
    RunConfig c;
    c.population_size = population;
    c.subpopulation_size = subpopulation;
    c.selection_count = selection;
    c.temperature = temperature;
    c.cooling = CoolingRule::geometric(alpha, temperature_floor);
    c.mutation_sigma = sigma;
    if (threshold) c.threshold = ThresholdSource::fixed(*threshold);
    c.population_mode = mode == "fixed-pool" ? PopulationMode::FixedPool : PopulationMode::Elitist;
    c.rejection = rejection == "discard" ? RejectionPolicy::Discard
                                         : RejectionPolicy::KeepPremutation;
    c.validate();
    return c;
  }

  std::vector<std::pair<std::string, std::string>> snapshot() const {
    auto num = [](double v) { return format_double(v); };
    return {
        {"population", std::to_string(population)},
        {"subpopulation", std::to_string(subpopulation)},
        {"selection", std::to_string(selection)},
        {"temperature", num(temperature)},
        {"alpha", num(alpha)},
        {"temperature_floor", num(temperature_floor)},
        {"sigma", num(sigma)},
        {"threshold", threshold ? num(*threshold) : std::string("fresh")},
        {"mode", mode},
        {"rejection", rejection},
        {"budget", std::to_string(budget)},
        {"dimension", dimension ? std::to_string(dimension) : std::string("default")},
    };
  }
};

void add_engine_options(CLI::App* app, EngineParams& p, std::string& config) {
  app->add_option("--config", config, "Read key = value defaults from a file");
  app->add_option("--pop", p.population, "Population size")->capture_default_str();
  app->add_option("--sub", p.subpopulation, "Subpopulation size (even)")->capture_default_str();
  app->add_option("--select", p.selection, "Parents per iteration")->capture_default_str();
  app->add_option("--temperature", p.temperature, "Initial temperature")->capture_default_str();
  app->add_option("--alpha", p.alpha, "Geometric cooling factor")->capture_default_str();
  app->add_option("--temperature-floor", p.temperature_floor, "Lowest temperature")
      ->capture_default_str();
  app->add_option("--sigma", p.sigma, "Gaussian mutation scale, fraction of the bound width")
      ->capture_default_str();
  app->add_option("--threshold", p.threshold, "Fixed acceptance threshold (default: fresh uniform)");
  app->add_option("--mode", p.mode, "Population update")
      ->check(CLI::IsMember({"elitist", "fixed-pool"}))
      ->capture_default_str();
  app->add_option("--rejection", p.rejection, "Fate of a rejected mutation")
      ->check(CLI::IsMember({"keep", "discard"}))
      ->capture_default_str();
  app->add_option("--budget", p.budget, "Objective evaluations per run")->capture_default_str();
  app->add_option("--dim", p.dimension, "Dimension (0: the function's default)");
}

// Splices the entries of a subcommand's --config file in front of its other
// arguments, so explicit flags parsed later take precedence.
std::vector<std::string> expand_config(int argc, const char* const* argv) {
  std::vector<std::string> args(argv, argv + argc);
  const auto sub = std::find_if(args.begin() + std::min(argc, 1), args.end(), [](const std::string& a) {
    return a == "run" || a == "bench" || a == "compare";
  });
  if (sub == args.end()) return args;
  std::string path;
  for (auto it = sub + 1; it != args.end(); ++it) {
    if (*it == "--config" && it + 1 != args.end()) path = *(it + 1);
    if (it->rfind("--config=", 0) == 0) path = it->substr(9);
  }
  if (path.empty()) return args;
  std::vector<std::string> injected;
  for (const auto& item : CLI::ConfigINI().from_file(path)) {
    if (item.name == "++" || item.name == "--") continue;
    if (!item.parents.empty() && !(item.parents.size() == 1 && item.parents[0] == *sub)) continue;
    std::string key = item.name;
    std::replace(key.begin(), key.end(), '_', '-');
    for (const auto& v : item.inputs) injected.push_back("--" + key + "=" + v);
  }
  args.insert(sub + 1, injected.begin(), injected.end());
  return args;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::string> resolve_functions(const std::string& spec) {
  std::vector<std::string> ids;
  if (spec == "all") {
    for (const auto& f : bench::registry()) ids.push_back(f.id);
    return ids;
  }
  for (const auto& id : split_list(spec)) ids.push_back(bench::lookup(id).id);
  if (ids.empty()) throw InvalidInput("no benchmark functions selected");
  return ids;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw harness::IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_genome(std::ostream& out, const Genome& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out << ' ';
    out << format_double(g[i]);
  }
  out << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local-population based search with simulated annealing"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string config_path;

  // run
  EngineParams run_params;
  std::string run_tf = "TF1";
  std::string run_algorithm = "lpbsa";
  std::uint64_t run_seed = 1;
  auto* run_cmd = app.add_subcommand("run", "Single optimization run on one benchmark function");
  add_engine_options(run_cmd, run_params, config_path);
  run_cmd->add_option("--tf", run_tf, "Benchmark function id")->capture_default_str();
  run_cmd->add_option("--algorithm", run_algorithm, "lpbsa, lpb or sa")
      ->check(CLI::IsMember({"lpbsa", "lpb", "sa"}))
      ->capture_default_str();
  run_cmd->add_option("--seed", run_seed, "Random seed")->capture_default_str();

  // bench
  EngineParams bench_params;
  std::string bench_tf = "all";
  std::string bench_algorithms = "lpbsa,lpb,sa";
  std::size_t bench_runs = 30;
  std::optional<std::uint64_t> bench_seed;
  std::string bench_out;
  bool bench_list = false;
  bool bench_refs = false;
  bool bench_serial = false;
  auto* bench_cmd = app.add_subcommand("bench", "Repeated runs over the benchmark suite");
  add_engine_options(bench_cmd, bench_params, config_path);
  bench_cmd->add_option("--tf", bench_tf, "Comma separated ids or 'all'")->capture_default_str();
  bench_cmd->add_option("--algorithms", bench_algorithms, "Comma separated algorithms")
      ->capture_default_str();
  bench_cmd->add_option("--runs", bench_runs, "Independent runs per function")->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed, "Base seed; run k uses seed + k");
  bench_cmd->add_option("--out", bench_out, "Directory for CSV output and config.txt");
  bench_cmd->add_flag("--list", bench_list, "List the benchmark functions and exit");
  bench_cmd->add_flag("--with-paper-refs", bench_refs, "Append the published reference columns");
  bench_cmd->add_flag("--serial", bench_serial, "Run sequentially");

  // trace
  std::string trace_script;
  auto* trace_cmd = app.add_subcommand("trace", "Replay the worked example from a decision script");
  trace_cmd->add_option("--script", trace_script, "Script file (default: the bundled one)");

  // compare
  EngineParams cmp_params;
  std::string cmp_tf = "TF1";
  std::size_t cmp_runs = 30;
  std::optional<std::uint64_t> cmp_seed;
  auto* cmp_cmd = app.add_subcommand("compare", "LPBSA against LPB under identical seeds");
  add_engine_options(cmp_cmd, cmp_params, config_path);
  cmp_cmd->add_option("--tf", cmp_tf, "Benchmark function id")->capture_default_str();
  cmp_cmd->add_option("--runs", cmp_runs, "Paired runs")->capture_default_str();
  cmp_cmd->add_option("--seed", cmp_seed, "Base seed")->required();

  try {
    const auto args = expand_config(argc, argv);
    std::vector<const char*> expanded;
    for (const auto& a : args) expanded.push_back(a.c_str());
    app.parse(static_cast<int>(expanded.size()), expanded.data());
  } catch (const CLI::FileError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  out.imbue(std::locale::classic());
  try {
    if (run_cmd->parsed()) {
      const auto& f = bench::lookup(run_tf);
      harness::ExperimentConfig cfg;
      cfg.run = run_params.to_run_config();
      cfg.dimension = run_params.dimension;
      cfg.base_seed = run_seed;
      cfg.evaluation_budget = run_params.budget;
      const auto problem = f.problem(cfg.dimension);
      const auto outcome =
          harness::run_single(harness::parse_algorithm(run_algorithm), problem, cfg, 0);
      out << "function " << f.id << '\n'
          << "algorithm " << run_algorithm << '\n'
          << "dimension " << problem.dimension() << '\n'
          << "seed " << run_seed << '\n'
          << "evaluations " << outcome.evaluations << '\n'
          << "best " << harness::format_scientific(outcome.final_best) << '\n'
          << "genome ";
      print_genome(out, outcome.best_genome);
      return kOk;
    }

    if (bench_cmd->parsed()) {
      if (bench_list) {
        for (const auto& f : bench::registry()) {
          out << std::left << std::setw(5) << f.id << ' ' << std::setw(22) << f.name << ' '
              << (f.scalable ? "d=" + std::to_string(f.default_dimension) + " (scalable)"
                             : "d=" + std::to_string(f.default_dimension))
              << "  optimum " << f.optimum_description << std::right << '\n';
        }
        return kOk;
      }
      if (!bench_seed) {
        err << "error: --seed is required for bench\n";
        return kUsage;
      }
      harness::ExperimentConfig cfg;
      cfg.run = bench_params.to_run_config();
      cfg.dimension = bench_params.dimension;
      cfg.runs = bench_runs;
      cfg.base_seed = *bench_seed;
      cfg.evaluation_budget = bench_params.budget;
      std::vector<harness::Algorithm> algorithms;
      for (const auto& a : split_list(bench_algorithms)) algorithms.push_back(harness::parse_algorithm(a));
      if (algorithms.empty()) throw InvalidInput("no algorithms selected");
      const auto ids = resolve_functions(bench_tf);

      std::vector<harness::RunStats> stats;
      for (const auto& id : ids) {
        for (auto a : algorithms) {
          stats.push_back(bench_serial ? harness::run_experiment_serial(a, id, cfg)
                                       : harness::run_experiment(a, id, cfg));
        }
      }
      harness::write_table(out, stats, bench_refs);
      if (!bench_out.empty()) {
        harness::EmitOptions emit;
        emit.with_reference = bench_refs;
        emit.config_snapshot = bench_params.snapshot();
        emit.config_snapshot.insert(emit.config_snapshot.begin(),
                                    {{"functions", bench_tf},
                                     {"algorithms", bench_algorithms},
                                     {"runs", std::to_string(bench_runs)},
                                     {"seed", std::to_string(*bench_seed)}});
        harness::emit_results(stats, bench_out, emit);
      }
      return kOk;
    }

    if (trace_cmd->parsed()) {
      const std::string text =
          trace_script.empty() ? std::string(assets::case_study_script()) : read_file(trace_script);
      const auto script = DecisionScript::parse(text);
      const auto trace = run_trace(script);
      write_trace(out, trace, case_study_problem());
      return kOk;
    }

    if (cmp_cmd->parsed()) {
      const auto& f = bench::lookup(cmp_tf);
      harness::ExperimentConfig cfg;
      cfg.run = cmp_params.to_run_config();
      cfg.dimension = cmp_params.dimension;
      cfg.runs = cmp_runs;
      cfg.base_seed = *cmp_seed;
      cfg.evaluation_budget = cmp_params.budget;
      const auto a = harness::run_experiment(harness::Algorithm::Lpbsa, f.id, cfg);
      const auto b = harness::run_experiment(harness::Algorithm::Lpb, f.id, cfg);
      std::size_t wins = 0, ties = 0;
      out << "run,seed,lpbsa,lpb\n";
      for (std::size_t k = 0; k < cfg.runs; ++k) {
        const double x = a.per_run_finals[k], y = b.per_run_finals[k];
        if (x == y) ++ties;
        else if (x < y) ++wins;
        out << k << ',' << cfg.base_seed + k << ',' << harness::format_scientific(x) << ','
            << harness::format_scientific(y) << '\n';
      }
      out << "average " << harness::format_scientific(a.average) << ' '
          << harness::format_scientific(b.average) << '\n'
          << "lpbsa better in " << wins << " of " << cfg.runs << " runs, " << ties << " ties\n";
      return kOk;
    }
  } catch (const ScriptParseError& e) {
    err << "error: " << e.what() << '\n';
    return kReplayFailure;
  } catch (const ReplayDesync& e) {
    err << "error: " << e.what() << '\n';
    return kReplayFailure;
  } catch (const harness::IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lpbsa::cli
