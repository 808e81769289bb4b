#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "lpbsa/core.hpp"
#include "lpbsa/rng.hpp"

namespace lpbsa {

/// A fitness-sorted subpopulation split into a Good half and a Bad half.
///
/// `members` is ordered best-first under the problem sense. The thresholds
/// are the fitness of the best member of each half.
struct SubpopulationSplit {
  std::vector<Individual> members;
  double good_threshold = 0.0;
  double bad_threshold = 0.0;

  std::size_t half() const { return members.size() / 2; }
  std::span<const Individual> good() const { return {members.data(), half()}; }
  std::span<const Individual> bad() const { return {members.data() + half(), half()}; }

  bool operator==(const SubpopulationSplit&) const = default;
};

enum class Group { Bad, Good, Ideal };

std::string_view to_string(Group group);

/// One label per main-population individual, aligned by index.
struct PopulationPartition {
  std::vector<Group> labels;

  std::size_t count(Group g) const;
  bool operator==(const PopulationPartition&) const = default;
};

/// Sorts `members` best-first (ties by id), splits them in half and records
/// the thresholds. Size must be even and positive.
SubpopulationSplit split_subpopulation(std::vector<Individual> members, Sense sense);

/// Uniform draw without replacement of `size` indices out of `population_size`
/// (partial Fisher-Yates), in draw order.
std::vector<std::size_t> sample_indices(std::size_t population_size, std::size_t size, Rng& rng);

SubpopulationSplit sample_subpopulation(std::span<const Individual> population, std::size_t size,
                                        Sense sense, Rng& rng);

/// Maximize: f <= bad_threshold is Bad, else f <= good_threshold is Good,
/// else Ideal. Minimize mirrors the comparisons.
Group classify(double fitness, const SubpopulationSplit& split, Sense sense);

PopulationPartition partition(std::span<const Individual> population,
                              const SubpopulationSplit& split, Sense sense);

/// Indices of the `count` individuals chosen Ideal first, then Good, then
/// Bad, each group best-first.
std::vector<std::size_t> select_parent_indices(const PopulationPartition& partition,
                                               std::span<const Individual> population,
                                               std::size_t count, Sense sense);

std::vector<Individual> select_parents(const PopulationPartition& partition,
                                       std::span<const Individual> population, std::size_t count,
                                       Sense sense);

}  // namespace lpbsa
