#include "lpbsa/trace.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "lpbsa/encoding.hpp"

namespace lpbsa {

TraceResult run_trace(const DecisionScript& script) {
  const auto problem = case_study_problem();
  const auto config = case_study_config();
  Rng rng(config.seed);
  EngineOptions options;
  options.script = &script;
  TraceResult out;
  out.run = lpbsa_run(problem, config, rng, options);
  out.averages.push_back(out.run.initial_average);
  for (const auto& it : out.run.history) out.averages.push_back(it.summary_average);
  return out;
}

namespace {

std::string number(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  if (std::floor(v) == v && std::fabs(v) < 1e15) {
    os << static_cast<long long>(v);
  } else {
    os << std::setprecision(6) << v;
  }
  return os.str();
}

std::string bits(double gene, const Bounds& b) {
  return encode(static_cast<std::int64_t>(gene - b.lower)).str();
}

void genome_columns(std::ostream& os, const Individual& ind, const ObjectiveProblem& problem) {
  for (std::size_t g = 0; g < ind.genome.size(); ++g) {
    os << "  X" << g + 1 << '=' << std::setw(5) << number(ind.genome[g]) << " ("
       << bits(ind.genome[g], problem.bounds()[g]) << ')';
  }
  os << "  f=" << (ind.fitness ? number(*ind.fitness) : std::string("-"));
}

void individual_table(std::ostream& os, std::span<const Individual> rows,
                      const ObjectiveProblem& problem) {
  for (const auto& ind : rows) {
    os << "  " << std::left << std::setw(4) << ind.id << std::right;
    genome_columns(os, ind, problem);
    os << '\n';
  }
}

}  // namespace

void write_trace(std::ostream& os, const TraceResult& trace, const ObjectiveProblem& problem) {
  const auto& run = trace.run;
  os << "Initial population\n";
  individual_table(os, run.initial_population, problem);
  os << "  average=" << number(run.initial_average) << "\n";

  for (const auto& it : run.history) {
    os << "\nIteration " << it.iteration << " (T=" << number(it.temperature) << ")\n";
    os << "Subpopulation\n";
    for (std::size_t k = 0; k < it.split.members.size(); ++k) {
      const auto& m = it.split.members[k];
      os << "  K" << k + 1 << ' ' << std::left << std::setw(4) << m.id << std::right
         << (k < it.split.half() ? " good" : " bad ");
      genome_columns(os, m, problem);
      os << '\n';
    }
    os << "  good_threshold=" << number(it.split.good_threshold)
       << "  bad_threshold=" << number(it.split.bad_threshold) << '\n';

    os << "Partition\n";
    for (Group g : {Group::Ideal, Group::Good, Group::Bad}) {
      os << "  " << std::left << std::setw(6) << to_string(g) << std::right << ':';
      for (std::size_t i = 0; i < it.population.size(); ++i) {
        if (it.partition.labels[i] == g) os << ' ' << it.population[i].id;
      }
      os << '\n';
    }

    os << "Parents\n";
    individual_table(os, it.parents, problem);

    os << "Crossover\n";
    for (std::size_t p = 0; p < it.pairs.size(); ++p) {
      const auto& pair = it.pairs[p];
      os << "  " << pair.parent.id << " x " << pair.partner_label << " (" << pair.partner.id
         << ") -> C" << 2 * p + 1 << ", C" << 2 * p + 2 << '\n';
    }
    individual_table(os, [&] {
      std::vector<Individual> v;
      for (const auto& c : it.children) v.push_back(c.crossover);
      return v;
    }(), problem);

    os << "Mutation\n";
    for (const auto& c : it.children) {
      os << "  " << std::left << std::setw(4) << c.mutated.id << std::right;
      genome_columns(os, c.mutated, problem);
      os << "  bits=";
      for (std::size_t g = 0; g < c.mutation_bits.size(); ++g) {
        if (g) os << ',';
        os << (c.mutation_bits[g] ? std::to_string(*c.mutation_bits[g]) : std::string("-"));
      }
      os << '\n';
    }

    os << "Acceptance\n";
    for (const auto& c : it.children) {
      os << "  " << std::left << std::setw(4) << c.mutated.id << std::right;
      if (c.decision) {
        os << "  dE=" << number(c.decision->delta) << "  p=" << std::setprecision(6)
           << c.decision->probability << "  threshold=" << c.decision->threshold;
      }
      os << "  " << (c.accepted ? "accept" : "reject") << (c.verdict_forced ? " (scripted)" : "")
         << '\n';
    }

    os << "Survivors\n";
    individual_table(os, it.survivors, problem);
    os << "  summary_average=" << number(it.summary_average) << '\n';
  }

  os << '\n';
  for (std::size_t i = 0; i < trace.averages.size(); ++i) {
    if (i) os << ' ';
    os << number(trace.averages[i]);
  }
  os << '\n';
}

}  // namespace lpbsa
