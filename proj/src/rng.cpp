#include "lpbsa/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lpbsa {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lower, double upper) {
  return lower + (upper - lower) * uniform();
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  // Rejection sampling on the largest multiple of n.
  const std::uint64_t limit = (~std::uint64_t{0} / n) * n;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % n;
}

std::int64_t Rng::integer(std::int64_t lower, std::int64_t upper) {
  if (lower > upper) throw std::invalid_argument("Rng::integer: empty range");
  const auto span = static_cast<std::uint64_t>(upper) - static_cast<std::uint64_t>(lower);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(engine_());
  return lower + static_cast<std::int64_t>(below(span + 1));
}

double Rng::normal() {
  // 1 - uniform() lies in (0, 1], so the log is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Rng Rng::split() { return Rng(engine_()); }

}  // namespace lpbsa
