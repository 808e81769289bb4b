#include "lpbsa/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lpbsa/encoding.hpp"

namespace lpbsa {

std::size_t evaluations_per_iteration(const RunConfig& config) {
  return 4 * config.selection_count;
}

namespace {
__extension__ using wide_int = __int128;
}  // namespace

double summary_average(std::span<const double> fitness, Encoding encoding) {
  if (fitness.empty()) throw InvalidInput("summary_average: empty set");
  if (encoding == Encoding::IntegerBinary) {
    wide_int sum = 0;
    for (double f : fitness) sum += static_cast<wide_int>(std::llround(f));
    return static_cast<double>(static_cast<std::int64_t>(sum / static_cast<wide_int>(fitness.size())));
  }
  double sum = 0.0;
  for (double f : fitness) sum += f;
  return sum / static_cast<double>(fitness.size());
}

std::vector<Individual> update_population(std::span<const Individual> population,
                                          std::span<const Individual> entrants, Sense sense,
                                          std::size_t capacity) {
  std::vector<const Individual*> pool;
  pool.reserve(population.size() + entrants.size());
  for (const auto& ind : population) pool.push_back(&ind);
  for (const auto& ind : entrants) pool.push_back(&ind);

  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ranks_before(*pool[a], *pool[b], sense);
  });
  std::vector<bool> keep(pool.size(), false);
  for (std::size_t i = 0; i < std::min(capacity, order.size()); ++i) keep[order[i]] = true;

  std::vector<Individual> out;
  out.reserve(std::min(capacity, pool.size()));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (keep[i]) out.push_back(*pool[i]);
  }
  return out;
}

namespace {

double mean_fitness(std::span<const Individual> inds, Encoding encoding) {
  std::vector<double> f;
  f.reserve(inds.size());
  for (const auto& i : inds) f.push_back(i.cost());
  return summary_average(f, encoding);
}

std::size_t find_by_id(std::span<const Individual> inds, std::string_view id) {
  for (std::size_t i = 0; i < inds.size(); ++i) {
    if (inds[i].id == id) return i;
  }
  return inds.size();
}

std::string child_id(std::size_t index) { return "C" + std::to_string(index + 1); }

/// One engine run. Owns the evaluation counter, the noise stream and the
/// optional script cursor / recorder.
class EngineRun {
 public:
  EngineRun(EngineKind kind, const ObjectiveProblem& problem, const RunConfig& config, Rng& rng,
            const EngineOptions& options)
      : kind_(kind),
        problem_(problem),
        config_(config),
        rng_(rng),
        noise_(rng.split()),
        options_(options),
        sense_(problem.sense()),
        integer_(problem.encoding() == Encoding::IntegerBinary) {
    if (options.script) cursor_.emplace(*options.script);
    if ((options.script || options.record_script) && !integer_) {
      throw InvalidInput("decision scripts require an integer-encoded problem");
    }
  }

  RunResult run() {
    RunResult result;
    initialize();
    result.initial_population = population_;
    result.initial_average = mean_fitness(population_, problem_.encoding());
    result.convergence.push_back({0, evaluations_, best_.cost()});

    double temperature = config_.temperature;
    const std::size_t per_iteration = evaluations_per_iteration(config_);
    for (std::size_t iter = 1; iter <= config_.max_iterations; ++iter) {
      if (config_.max_evaluations && evaluations_ + per_iteration > *config_.max_evaluations) break;
      auto record = iterate(iter, temperature);
      temperature = cool(temperature, config_.cooling);
      result.iterations = iter;
      result.convergence.push_back({iter, evaluations_, best_.cost()});
      if (options_.keep_history) result.history.push_back(std::move(record));
    }
    if (cursor_) cursor_->expect_end();

    result.best = best_;
    result.final_population = population_;
    result.evaluations = evaluations_;
    result.final_temperature = temperature;
    result.recorded = std::move(recorded_);
    return result;
  }

 private:
  double evaluate(const Genome& g) {
    ++evaluations_;
    return problem_.evaluate(g, problem_.is_noisy() ? &noise_ : nullptr);
  }

  void consider(const Individual& ind) {
    if (!best_.fitness || better(ind.cost(), best_.cost(), sense_)) best_ = ind;
  }

  void emit(script::Record r) {
    if (options_.record_script) recorded_.records.push_back(std::move(r));
  }

  std::int64_t offset(double gene, std::size_t g) const {
    return static_cast<std::int64_t>(gene - problem_.bounds()[g].lower);
  }
  double from_offset(std::int64_t v, std::size_t g) const {
    return problem_.bounds()[g].clamp(problem_.bounds()[g].lower + static_cast<double>(v));
  }

  void initialize() {
    const std::size_t n = config_.population_size;
    population_.clear();
    for (std::size_t i = 0; i < n; ++i) {
      Individual ind;
      if (cursor_) {
        const auto& rec = cursor_->take<script::Init>("INIT record " + std::to_string(i + 1) +
                                                      " of " + std::to_string(n));
        ind.id = rec.id;
        ind.genome.assign(rec.genome.begin(), rec.genome.end());
        if (find_by_id(population_, ind.id) != population_.size()) {
          cursor_->fail_consumed("a fresh id instead of duplicate " + ind.id);
        }
        try {
          problem_.check_genome(ind.genome);
        } catch (const InvalidInput& e) {
          throw ReplayDesync(cursor_->position() - 1, e.what());
        }
      } else {
        ind.id = "B" + std::to_string(i + 1);
        ind.genome = problem_.random_genome(rng_);
      }
      ind.fitness = evaluate(ind.genome);
      if (options_.record_script) {
        emit(script::Init{ind.id, std::vector<std::int64_t>(ind.genome.begin(), ind.genome.end())});
      }
      consider(ind);
      population_.push_back(std::move(ind));
    }
    next_serial_ = n + 1;
  }

  SubpopulationSplit draw_subpopulation() {
    const std::size_t size = config_.subpopulation_size;
    std::vector<Individual> members;
    if (cursor_) {
      const auto& rec = cursor_->take<script::Subpop>("SUBPOP record");
      if (rec.ids.size() != size) {
        throw ReplayDesync(cursor_->position() - 1, "SUBPOP lists " + std::to_string(rec.ids.size()) +
                                                        " ids, expected " + std::to_string(size));
      }
      for (const auto& id : rec.ids) {
        const auto idx = find_by_id(population_, id);
        if (idx == population_.size()) {
          throw ReplayDesync(cursor_->position() - 1, "unknown individual " + id);
        }
        if (find_by_id(members, id) != members.size()) {
          throw ReplayDesync(cursor_->position() - 1, "individual " + id + " drawn twice");
        }
        members.push_back(population_[idx]);
      }
    } else {
      for (std::size_t i : sample_indices(population_.size(), size, rng_)) {
        members.push_back(population_[i]);
      }
    }
    if (options_.record_script) {
      script::Subpop rec;
      for (const auto& m : members) rec.ids.push_back(m.id);
      emit(std::move(rec));
    }
    return split_subpopulation(std::move(members), sense_);
  }

  CrossoverPair choose_partner(const Individual& parent, std::size_t pair_index,
                               const SubpopulationSplit& split) {
    const std::size_t k = pair_index % split.half();
    CrossoverPair pair{parent, split.members[k], "K" + std::to_string(k + 1)};
    if (cursor_) {
      const auto& rec = cursor_->take<script::Pair>("PAIR " + parent.id + " <partner>");
      if (rec.parent != parent.id) cursor_->fail_consumed("PAIR " + parent.id + " <partner>");
      pair.partner_label = rec.partner;
      if (rec.partner.size() > 1 && rec.partner[0] == 'K' &&
          rec.partner.find_first_not_of("0123456789", 1) == std::string::npos) {
        const auto rank = std::stoul(rec.partner.substr(1));
        if (rank == 0 || rank > split.members.size()) {
          throw ReplayDesync(cursor_->position() - 1, "no subpopulation rank " + rec.partner);
        }
        pair.partner = split.members[rank - 1];
      } else {
        const auto idx = find_by_id(population_, rec.partner);
        if (idx == population_.size()) {
          throw ReplayDesync(cursor_->position() - 1, "unknown partner " + rec.partner);
        }
        pair.partner = population_[idx];
      }
    }
    emit(script::Pair{pair.parent.id, pair.partner_label});
    return pair;
  }

  std::pair<Genome, Genome> cross(const Genome& a, const Genome& b) {
    if (!integer_) {
      auto [c1, c2] = crossover_real(a, b, rng_, problem_.bounds());
      return {problem_.repair(std::move(c1)), problem_.repair(std::move(c2))};
    }
    Genome c1(a.size()), c2(a.size());
    for (std::size_t g = 0; g < a.size(); ++g) {
      const auto [x, y] = crossover_binary(encode(offset(a[g], g)), encode(offset(b[g], g)));
      c1[g] = from_offset(decode(x), g);
      c2[g] = from_offset(decode(y), g);
    }
    return {std::move(c1), std::move(c2)};
  }

  void apply_forces(std::vector<ChildRecord>& children, std::size_t first) {
    if (!cursor_) return;
    while (const auto* rec = cursor_->take_if<script::Force>()) {
      std::size_t idx = 2;
      if (rec->child == children[first].crossover.id) idx = 0;
      if (rec->child == children[first + 1].crossover.id) idx = 1;
      if (idx == 2) {
        throw ReplayDesync(cursor_->position() - 1,
                           "FORCE names " + rec->child + ", which this pair did not produce");
      }
      if (rec->gene >= problem_.dimension()) {
        throw ReplayDesync(cursor_->position() - 1, "FORCE gene outside the problem dimension");
      }
      auto& child = children[first + idx];
      const auto value = static_cast<double>(rec->value);
      if (!problem_.bounds()[rec->gene].contains(value)) {
        throw ReplayDesync(cursor_->position() - 1, "FORCE value outside bounds");
      }
      child.crossover.genome[rec->gene] = value;
      child.forced_genes.push_back(rec->gene);
      emit(*rec);
    }
  }

  void mutate(ChildRecord& child) {
    child.mutated = child.crossover;
    child.mutated.fitness.reset();
    if (!integer_) {
      child.mutated.genome = problem_.repair(
          mutate_real(child.crossover.genome, config_.mutation_sigma, rng_, problem_.bounds()));
      return;
    }
    const auto direction = default_flip_direction(sense_);
    for (std::size_t g = 0; g < problem_.dimension(); ++g) {
      const auto bits = encode(offset(child.crossover.genome[g], g));
      std::optional<std::size_t> bit;
      std::optional<BinaryString> mutated;
      if (cursor_) {
        const std::string expect = "MUTBIT " + child.crossover.id + " X" + std::to_string(g + 1);
        const auto& rec = cursor_->take<script::MutBit>(expect);
        if (rec.child != child.crossover.id || rec.gene != g) cursor_->fail_consumed(expect);
        bit = rec.bit;
        if (bit) {
          try {
            mutated = flip_bit(bits, *bit, direction);
          } catch (const InvalidInput& e) {
            throw ReplayDesync(cursor_->position() - 1, e.what());
          }
        } else if (!eligible_bits(bits, direction).empty()) {
          throw ReplayDesync(cursor_->position() - 1,
                             "MUTBIT skips a gene that has eligible bits");
        }
      } else {
        try {
          auto [m, index] = mutate_binary_at_random(bits, direction, rng_);
          mutated = std::move(m);
          bit = index;
        } catch (const NoEligibleBit&) {
        }
      }
      if (mutated) child.mutated.genome[g] = from_offset(decode(*mutated), g);
      child.mutation_bits.push_back(bit);
      emit(script::MutBit{child.crossover.id, g, bit});
    }
  }

  void filter(ChildRecord& child, double temperature) {
    if (kind_ == EngineKind::Lpb) {
      child.accepted = true;
      return;
    }
    double threshold = config_.threshold.value;
    bool scripted_threshold = false;
    if (cursor_) {
      if (const auto* rec = cursor_->take_if<script::Thresh>()) {
        if (rec->child != child.mutated.id) cursor_->fail_consumed("THRESH " + child.mutated.id);
        threshold = rec->value;
        scripted_threshold = true;
      }
    }
    if (!scripted_threshold && config_.threshold.kind == ThresholdSource::Kind::FreshUniformPerChild) {
      threshold = rng_.uniform();
    }
    if (config_.threshold.kind == ThresholdSource::Kind::FreshUniformPerChild || scripted_threshold) {
      emit(script::Thresh{child.mutated.id, threshold});
    }
    child.decision = metropolis_accept(child.mutated.cost(), child.crossover.cost(), temperature,
                                       threshold, sense_);
    child.accepted = child.decision->accepted;
    if (cursor_) {
      if (const auto* rec = cursor_->take_if<script::Verdict>()) {
        if (rec->child != child.mutated.id) cursor_->fail_consumed("ACCEPT/REJECT " + child.mutated.id);
        child.accepted = rec->accept;
        child.verdict_forced = true;
        emit(*rec);
      }
    }
  }

  IterationRecord iterate(std::size_t iter, double temperature) {
    IterationRecord rec;
    rec.iteration = iter;
    rec.temperature = temperature;
    if (options_.keep_history) rec.population = population_;

    rec.split = draw_subpopulation();
    rec.partition = partition(population_, rec.split, sense_);
    rec.parents = select_parents(rec.partition, population_, config_.selection_count, sense_);

    for (std::size_t i = 0; i < rec.parents.size(); ++i) {
      rec.pairs.push_back(choose_partner(rec.parents[i], i, rec.split));
      const auto& pair = rec.pairs.back();
      auto [g1, g2] = cross(pair.parent.genome, pair.partner.genome);
      const std::size_t first = rec.children.size();
      rec.children.push_back(ChildRecord{Individual{child_id(first), std::move(g1), {}}, {}, {}, {}, {}, false, true});
      rec.children.push_back(ChildRecord{Individual{child_id(first + 1), std::move(g2), {}}, {}, {}, {}, {}, false, true});
      apply_forces(rec.children, first);
    }
    for (auto& child : rec.children) {
      child.crossover.fitness = evaluate(child.crossover.genome);
      consider(child.crossover);
    }
    for (auto& child : rec.children) {
      mutate(child);
      child.mutated.fitness = evaluate(child.mutated.genome);
      consider(child.mutated);
    }

    std::vector<Individual> entrants;
    std::vector<double> summary;
    for (const auto& p : rec.pairs) summary.push_back(p.parent.cost());
    for (const auto& p : rec.pairs) summary.push_back(p.partner.cost());
    for (auto& child : rec.children) {
      filter(child, temperature);
      if (child.accepted) {
        entrants.push_back(child.mutated);
        summary.push_back(child.mutated.cost());
      } else if (config_.rejection == RejectionPolicy::KeepPremutation) {
        entrants.push_back(child.crossover);
      }
    }

    if (config_.population_mode == PopulationMode::Elitist) {
      for (auto& e : entrants) e.id = "B" + std::to_string(next_serial_++);
      population_ = update_population(population_, entrants, sense_, config_.population_size);
    }
    rec.survivors = population_;
    rec.summary_average = summary_average(summary, problem_.encoding());
    rec.population_average = mean_fitness(population_, problem_.encoding());
    rec.best_so_far = best_.cost();
    rec.evaluations = evaluations_;
    if (!options_.keep_history) rec = IterationRecord{};
    return rec;
  }

  EngineKind kind_;
  const ObjectiveProblem& problem_;
  const RunConfig& config_;
  Rng& rng_;
  Rng noise_;
  const EngineOptions& options_;
  Sense sense_;
  bool integer_;
  std::optional<ScriptCursor> cursor_;
  DecisionScript recorded_;
  std::vector<Individual> population_;
  Individual best_;
  std::size_t evaluations_ = 0;
  std::size_t next_serial_ = 1;
};

}  // namespace

RunResult run_engine(EngineKind kind, const ObjectiveProblem& problem, const RunConfig& config,
                     Rng& rng, const EngineOptions& options) {
  config.validate();
  return EngineRun(kind, problem, config, rng, options).run();
}

RunResult lpbsa_run(const ObjectiveProblem& problem, const RunConfig& config, Rng& rng,
                    const EngineOptions& options) {
  return run_engine(EngineKind::Lpbsa, problem, config, rng, options);
}

RunResult lpb_run(const ObjectiveProblem& problem, const RunConfig& config, Rng& rng,
                  const EngineOptions& options) {
  return run_engine(EngineKind::Lpb, problem, config, rng, options);
}

}  // namespace lpbsa
