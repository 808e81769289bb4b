#include "lpbsa/grouping.hpp"

#include <algorithm>
#include <numeric>

namespace lpbsa {

std::string_view to_string(Group group) {
  switch (group) {
    case Group::Bad: return "Bad";
    case Group::Good: return "Good";
    case Group::Ideal: return "Ideal";
  }
  return "?";
}

std::size_t PopulationPartition::count(Group g) const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), g));
}

SubpopulationSplit split_subpopulation(std::vector<Individual> members, Sense sense) {
  if (members.empty() || members.size() % 2 != 0) {
    throw InvalidInput("subpopulation size must be even and positive, got " +
                       std::to_string(members.size()));
  }
  std::stable_sort(members.begin(), members.end(),
                   [sense](const Individual& a, const Individual& b) {
                     return ranks_before(a, b, sense);
                   });
  SubpopulationSplit split;
  split.members = std::move(members);
  split.good_threshold = split.members.front().cost();
  split.bad_threshold = split.members[split.half()].cost();
  return split;
}

std::vector<std::size_t> sample_indices(std::size_t population_size, std::size_t size, Rng& rng) {
  if (size > population_size) {
    throw InvalidInput("cannot draw " + std::to_string(size) + " individuals from a population of " +
                       std::to_string(population_size));
  }
  std::vector<std::size_t> idx(population_size);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < size; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(population_size - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(size);
  return idx;
}

SubpopulationSplit sample_subpopulation(std::span<const Individual> population, std::size_t size,
                                        Sense sense, Rng& rng) {
  if (size % 2 != 0) throw InvalidInput("subpopulation size must be even, got " + std::to_string(size));
  std::vector<Individual> members;
  members.reserve(size);
  for (std::size_t i : sample_indices(population.size(), size, rng)) members.push_back(population[i]);
  return split_subpopulation(std::move(members), sense);
}

Group classify(double fitness, const SubpopulationSplit& split, Sense sense) {
  if (!better(fitness, split.bad_threshold, sense)) return Group::Bad;
  if (!better(fitness, split.good_threshold, sense)) return Group::Good;
  return Group::Ideal;
}

PopulationPartition partition(std::span<const Individual> population,
                              const SubpopulationSplit& split, Sense sense) {
  PopulationPartition out;
  out.labels.reserve(population.size());
  for (const auto& ind : population) out.labels.push_back(classify(ind.cost(), split, sense));
  return out;
}

std::vector<std::size_t> select_parent_indices(const PopulationPartition& partition,
                                               std::span<const Individual> population,
                                               std::size_t count, Sense sense) {
  if (partition.labels.size() != population.size()) {
    throw InvalidInput("partition does not match population size");
  }
  if (count > population.size()) {
    throw InvalidInput("cannot select " + std::to_string(count) + " parents from " +
                       std::to_string(population.size()));
  }
  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ga = partition.labels[a];
    const auto gb = partition.labels[b];
    if (ga != gb) return ga > gb;  // Ideal > Good > Bad
    return ranks_before(population[a], population[b], sense);
  });
  order.resize(count);
  return order;
}

std::vector<Individual> select_parents(const PopulationPartition& partition,
                                       std::span<const Individual> population, std::size_t count,
                                       Sense sense) {
  std::vector<Individual> out;
  for (std::size_t i : select_parent_indices(partition, population, count, sense)) {
    out.push_back(population[i]);
  }
  return out;
}

}  // namespace lpbsa
