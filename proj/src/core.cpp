#include "lpbsa/core.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace lpbsa {

std::string_view to_string(Sense sense) {
  return sense == Sense::Maximize ? "maximize" : "minimize";
}

namespace {

std::pair<std::string_view, std::string_view> split_numeric_suffix(std::string_view s) {
  std::size_t i = s.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
  return {s.substr(0, i), s.substr(i)};
}

constexpr double kMaxExactInteger = 9007199254740992.0;  // 2^53

}  // namespace

bool id_less(std::string_view a, std::string_view b) {
  const auto [pa, na] = split_numeric_suffix(a);
  const auto [pb, nb] = split_numeric_suffix(b);
  if (pa != pb) return pa < pb;
  // Compare digit strings numerically without overflow: shorter (after
  // stripping leading zeros) is smaller.
  auto strip = [](std::string_view d) {
    while (d.size() > 1 && d.front() == '0') d.remove_prefix(1);
    return d;
  };
  const auto da = strip(na);
  const auto db = strip(nb);
  if (da.size() != db.size()) return da.size() < db.size();
  if (da != db) return da < db;
  return a < b;
}

bool ranks_before(const Individual& a, const Individual& b, Sense sense) {
  if (better(a.cost(), b.cost(), sense)) return true;
  if (better(b.cost(), a.cost(), sense)) return false;
  return id_less(a.id, b.id);
}

ObjectiveProblem::ObjectiveProblem(std::string name, std::vector<Bounds> bounds, Sense sense,
                                   Encoding encoding)
    : name_(std::move(name)), bounds_(std::move(bounds)), sense_(sense), encoding_(encoding) {
  if (bounds_.empty()) throw InvalidInput("problem '" + name_ + "': dimension must be positive");
  for (const auto& b : bounds_) {
    if (!(b.lower <= b.upper)) {
      throw InvalidInput("problem '" + name_ + "': lower bound exceeds upper bound");
    }
    if (encoding_ == Encoding::IntegerBinary &&
        (b.lower != std::floor(b.lower) || b.upper != std::floor(b.upper) ||
         std::abs(b.lower) > kMaxExactInteger || std::abs(b.upper) > kMaxExactInteger)) {
      throw InvalidInput("problem '" + name_ + "': integer bounds must be exact integers");
    }
  }
}

ObjectiveProblem ObjectiveProblem::real(std::string name, std::vector<Bounds> bounds, Sense sense,
                                        RealObjective objective) {
  ObjectiveProblem p(std::move(name), std::move(bounds), sense, Encoding::RealVector);
  p.objective_ = std::move(objective);
  return p;
}

ObjectiveProblem ObjectiveProblem::noisy(std::string name, std::vector<Bounds> bounds, Sense sense,
                                         NoisyObjective objective) {
  ObjectiveProblem p(std::move(name), std::move(bounds), sense, Encoding::RealVector);
  p.objective_ = std::move(objective);
  return p;
}

ObjectiveProblem ObjectiveProblem::integer(std::string name, std::vector<Bounds> bounds,
                                           Sense sense, IntegerObjective objective) {
  ObjectiveProblem p(std::move(name), std::move(bounds), sense, Encoding::IntegerBinary);
  p.objective_ = std::move(objective);
  return p;
}

void ObjectiveProblem::check_genome(std::span<const double> genome) const {
  if (genome.size() != bounds_.size()) {
    throw InvalidInput("problem '" + name_ + "': genome has " + std::to_string(genome.size()) +
                       " components, expected " + std::to_string(bounds_.size()));
  }
  for (std::size_t i = 0; i < genome.size(); ++i) {
    if (!bounds_[i].contains(genome[i])) {
      throw BoundsViolation("problem '" + name_ + "': component " + std::to_string(i) +
                            " out of bounds");
    }
    if (encoding_ == Encoding::IntegerBinary && genome[i] != std::floor(genome[i])) {
      throw BoundsViolation("problem '" + name_ + "': component " + std::to_string(i) +
                            " is not an integer");
    }
  }
}

double ObjectiveProblem::evaluate(std::span<const double> genome, Rng* noise) const {
  check_genome(genome);
  if (const auto* f = std::get_if<RealObjective>(&objective_)) return (*f)(genome);
  if (const auto* f = std::get_if<NoisyObjective>(&objective_)) {
    if (noise == nullptr) {
      throw InvalidInput("problem '" + name_ + "' is noisy and needs a random stream");
    }
    return (*f)(genome, *noise);
  }
  const auto& f = std::get<IntegerObjective>(objective_);
  std::vector<std::int64_t> ints(genome.begin(), genome.end());
  const std::int64_t value = f(ints);
  if (static_cast<double>(value > 0 ? value : -value) > kMaxExactInteger) {
    throw InvalidInput("problem '" + name_ + "': integer objective exceeds 2^53");
  }
  return static_cast<double>(value);
}

Genome ObjectiveProblem::repair(Genome genome) const {
  for (std::size_t i = 0; i < genome.size() && i < bounds_.size(); ++i) {
    double x = genome[i];
    if (encoding_ == Encoding::IntegerBinary) x = std::round(x);
    genome[i] = bounds_[i].clamp(x);
  }
  return genome;
}

Genome ObjectiveProblem::random_genome(Rng& rng) const {
  Genome g(bounds_.size());
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    const auto& b = bounds_[i];
    if (encoding_ == Encoding::IntegerBinary) {
      g[i] = static_cast<double>(
          rng.integer(static_cast<std::int64_t>(b.lower), static_cast<std::int64_t>(b.upper)));
    } else {
      g[i] = rng.uniform(b.lower, b.upper);
    }
  }
  return g;
}

ObjectiveProblem case_study_problem() {
  return ObjectiveProblem::integer(
      "case-study", {{0, 9000}, {0, 9000}}, Sense::Maximize,
      [](std::span<const std::int64_t> x) { return x[0] * x[0] + x[1] * x[1]; });
}

}  // namespace lpbsa
