#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "lpbsa/grouping.hpp"

using namespace lpbsa;

namespace {

std::vector<Individual> initial() {
  std::vector<Individual> pop;
  for (const auto& r : fixtures::initial_population) {
    pop.push_back({r.id, {static_cast<double>(r.x1), static_cast<double>(r.x2)},
                   static_cast<double>(r.fitness)});
  }
  return pop;
}

std::vector<Individual> pick(const std::vector<Individual>& pop, const std::vector<std::string>& ids) {
  std::vector<Individual> out;
  for (const auto& id : ids) {
    out.push_back(*std::find_if(pop.begin(), pop.end(), [&](const auto& x) { return x.id == id; }));
  }
  return out;
}

std::vector<std::string> ids_of(const std::vector<Individual>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.id);
  return out;
}

std::string label(Group g) { return std::string(to_string(g)); }

}  // namespace

TEST_CASE("first subpopulation sorts best first and yields its thresholds") {
  const auto pop = initial();
  auto members = pick(pop, fixtures::subpop1);
  std::reverse(members.begin(), members.end());
  const auto split = split_subpopulation(members, Sense::Maximize);
  CHECK(ids_of(split.members) == fixtures::subpop1);
  CHECK(split.good_threshold == fixtures::good_threshold1);
  CHECK(split.bad_threshold == fixtures::bad_threshold1);
  CHECK(split.good().size() == 4);
  CHECK(split.bad().front().id == "B5");
}

TEST_CASE("second subpopulation thresholds") {
  const auto split = split_subpopulation(pick(initial(), fixtures::subpop2), Sense::Maximize);
  CHECK(ids_of(split.members) == fixtures::subpop2);
  CHECK(split.good_threshold == fixtures::good_threshold2);
  CHECK(split.bad_threshold == fixtures::bad_threshold2);
}

TEST_CASE("split rejects odd or empty subpopulations") {
  const auto pop = initial();
  CHECK_THROWS_AS(split_subpopulation({}, Sense::Maximize), InvalidInput);
  CHECK_THROWS_AS(split_subpopulation(pick(pop, {"B1", "B2", "B3"}), Sense::Maximize), InvalidInput);
}

TEST_CASE("first partition matches every label") {
  const auto pop = initial();
  const auto split = split_subpopulation(pick(pop, fixtures::subpop1), Sense::Maximize);
  const auto part = partition(pop, split, Sense::Maximize);
  for (std::size_t i = 0; i < pop.size(); ++i) {
    CAPTURE(pop[i].id);
    CHECK(label(part.labels[i]) == fixtures::partition1[i]);
  }
  CHECK(part.count(Group::Ideal) == 2);
}

TEST_CASE("second partition matches every label except the listed erratum") {
  const auto pop = initial();
  const auto split = split_subpopulation(pick(pop, fixtures::subpop2), Sense::Maximize);
  const auto part = partition(pop, split, Sense::Maximize);
  for (std::size_t i = 0; i < pop.size(); ++i) {
    CAPTURE(pop[i].id);
    if (i == fixtures::partition2_erratum) {
      // Equal to the Bad threshold, so the inclusive rule says Bad.
      CHECK(pop[i].fitness == fixtures::bad_threshold2);
      CHECK(part.labels[i] == Group::Bad);
      CHECK(fixtures::partition2[i] == "Good");
    } else {
      CHECK(label(part.labels[i]) == fixtures::partition2[i]);
    }
  }
}

TEST_CASE("classify handles both senses at the boundaries") {
  SubpopulationSplit s;
  s.good_threshold = 10;
  s.bad_threshold = 5;
  CHECK(classify(5, s, Sense::Maximize) == Group::Bad);
  CHECK(classify(6, s, Sense::Maximize) == Group::Good);
  CHECK(classify(10, s, Sense::Maximize) == Group::Good);
  CHECK(classify(11, s, Sense::Maximize) == Group::Ideal);
  s.good_threshold = 5;
  s.bad_threshold = 10;
  CHECK(classify(10, s, Sense::Minimize) == Group::Bad);
  CHECK(classify(7, s, Sense::Minimize) == Group::Good);
  CHECK(classify(5, s, Sense::Minimize) == Group::Good);
  CHECK(classify(4, s, Sense::Minimize) == Group::Ideal);
}

TEST_CASE("parent selections for both iterations") {
  const auto pop = initial();
  for (const auto& [sub, expected] : {std::pair{fixtures::subpop1, fixtures::selection1},
                                      std::pair{fixtures::subpop2, fixtures::selection2}}) {
    const auto split = split_subpopulation(pick(pop, sub), Sense::Maximize);
    const auto part = partition(pop, split, Sense::Maximize);
    CHECK(ids_of(select_parents(part, pop, 4, Sense::Maximize)) == expected);
  }
}

TEST_CASE("selection rejects a count above the population") {
  const auto pop = initial();
  const auto split = split_subpopulation(pick(pop, fixtures::subpop1), Sense::Maximize);
  const auto part = partition(pop, split, Sense::Maximize);
  CHECK_THROWS_AS(select_parents(part, pop, 17, Sense::Maximize), InvalidInput);
}

TEST_CASE("select_parents equals the brute-force precedence oracle") {
  Rng rng(77);
  for (int instance = 0; instance < 1000; ++instance) {
    const auto s = oracles::random_selection_instance(rng);
    CAPTURE(instance);
    REQUIRE(select_parent_indices(s.partition, s.population, s.count, s.sense) ==
            oracles::select_parents(s.population, s.partition, s.count, s.sense));
  }
}

TEST_CASE("sample_indices draws distinct in-range indices uniformly") {
  Rng rng(4);
  std::map<std::size_t, int> hits;
  for (int i = 0; i < 20000; ++i) {
    const auto idx = sample_indices(10, 4, rng);
    REQUIRE(idx.size() == 4);
    REQUIRE(std::set<std::size_t>(idx.begin(), idx.end()).size() == 4);
    for (auto k : idx) {
      REQUIRE(k < 10);
      ++hits[k];
    }
  }
  for (auto [k, c] : hits) CHECK(std::abs(c - 8000) < 400);
  CHECK_THROWS_AS(sample_indices(3, 4, rng), InvalidInput);
}
