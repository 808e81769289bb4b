#include "lpbsa/encoding.hpp"

#include <cmath>

namespace lpbsa {

BinaryString BinaryString::parse(std::string_view bits) {
  if (bits.empty()) throw InvalidInput("binary string is empty");
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw InvalidInput("binary string contains '" + std::string(1, c) + "'");
    }
  }
  const auto first_one = bits.find('1');
  if (first_one == std::string_view::npos) return BinaryString("0");
  return BinaryString(std::string(bits.substr(first_one)));
}

BinaryString encode(std::int64_t n) {
  if (n < 0) throw InvalidInput("encode: negative value " + std::to_string(n));
  if (n == 0) return BinaryString::parse("0");
  std::string bits;
  for (auto u = static_cast<std::uint64_t>(n); u != 0; u >>= 1) bits.push_back((u & 1) ? '1' : '0');
  return BinaryString::parse(std::string(bits.rbegin(), bits.rend()));
}

std::int64_t decode(const BinaryString& b) { return decode(std::string_view(b.str())); }

std::int64_t decode(std::string_view bits) {
  if (bits.empty()) throw InvalidInput("decode: empty bit string");
  std::uint64_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidInput("decode: invalid bit '" + std::string(1, c) + "'");
    if (value >> 62) throw InvalidInput("decode: value does not fit in 63 bits");
    value = (value << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return static_cast<std::int64_t>(value);
}

std::pair<BinaryString, BinaryString> crossover_binary(const BinaryString& p1,
                                                       const BinaryString& p2) {
  const std::string& a = p1.str();
  const std::string& b = p2.str();
  const std::size_t la = a.size() / 2;
  const std::size_t lb = b.size() / 2;
  // A one-bit parent contributes an empty left half; an empty result means 0.
  auto join = [](std::string s) { return BinaryString::parse(s.empty() ? "0" : s); };
  return {join(a.substr(0, la) + b.substr(lb)), join(b.substr(0, lb) + a.substr(la))};
}

FlipDirection default_flip_direction(Sense sense) {
  return sense == Sense::Maximize ? FlipDirection::ZeroToOne : FlipDirection::AnyFlip;
}

namespace {

bool is_eligible(char bit, FlipDirection direction) {
  switch (direction) {
    case FlipDirection::ZeroToOne: return bit == '0';
    case FlipDirection::OneToZero: return bit == '1';
    case FlipDirection::AnyFlip: return true;
  }
  return false;
}

}  // namespace

std::vector<std::size_t> eligible_bits(const BinaryString& b, FlipDirection direction) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (is_eligible(b[i], direction)) out.push_back(i);
  }
  return out;
}

BinaryString flip_bit(const BinaryString& b, std::size_t index, FlipDirection direction) {
  if (index >= b.size()) {
    throw InvalidInput("flip_bit: index " + std::to_string(index) + " outside " +
                       std::to_string(b.size()) + "-bit string");
  }
  if (!is_eligible(b[index], direction)) {
    throw InvalidInput("flip_bit: bit " + std::to_string(index) + " of " + b.str() +
                       " is not eligible");
  }
  std::string bits = b.str();
  bits[index] = bits[index] == '0' ? '1' : '0';
  return BinaryString::parse(bits);
}

std::pair<BinaryString, std::size_t> mutate_binary_at_random(const BinaryString& b,
                                                             FlipDirection direction, Rng& rng) {
  const auto positions = eligible_bits(b, direction);
  if (positions.empty()) throw NoEligibleBit("no eligible bit in " + b.str());
  const std::size_t index = positions[rng.below(positions.size())];
  return {flip_bit(b, index, direction), index};
}

BinaryString mutate_binary(const BinaryString& b, FlipDirection direction, Rng& rng) {
  return mutate_binary_at_random(b, direction, rng).first;
}

std::pair<Genome, Genome> crossover_real_at(std::span<const double> p1, std::span<const double> p2,
                                            std::size_t cut) {
  if (p1.size() != p2.size()) throw InvalidInput("crossover_real: dimension mismatch");
  if (cut == 0 || cut >= p1.size()) {
    throw InvalidInput("crossover_real: cut point " + std::to_string(cut) + " outside 1.." +
                       std::to_string(p1.size() - 1));
  }
  Genome c1(p1.begin(), p1.end());
  Genome c2(p2.begin(), p2.end());
  for (std::size_t i = cut; i < p1.size(); ++i) std::swap(c1[i], c2[i]);
  return {std::move(c1), std::move(c2)};
}

namespace {

constexpr double kFixedPointSteps = 1073741823.0;  // 2^30 - 1

std::int64_t to_fixed_point(double x, const Bounds& b) {
  if (b.width() == 0.0) return 0;
  return static_cast<std::int64_t>(std::llround((b.clamp(x) - b.lower) / b.width() * kFixedPointSteps));
}

double from_fixed_point(std::int64_t n, const Bounds& b) {
  return b.clamp(b.lower + static_cast<double>(n) / kFixedPointSteps * b.width());
}

}  // namespace

std::pair<Genome, Genome> crossover_real(std::span<const double> p1, std::span<const double> p2,
                                         Rng& rng, std::span<const Bounds> bounds) {
  if (p1.size() != p2.size()) throw InvalidInput("crossover_real: dimension mismatch");
  if (p1.empty()) throw InvalidInput("crossover_real: empty parents");
  if (p1.size() >= 2) {
    const auto cut = 1 + static_cast<std::size_t>(rng.below(p1.size() - 1));
    return crossover_real_at(p1, p2, cut);
  }
  if (bounds.size() != 1) throw InvalidInput("crossover_real: bounds dimension mismatch");
  const auto [c1, c2] = crossover_binary(encode(to_fixed_point(p1[0], bounds[0])),
                                         encode(to_fixed_point(p2[0], bounds[0])));
  const auto limit = static_cast<std::int64_t>(kFixedPointSteps);
  return {Genome{from_fixed_point(std::min(decode(c1), limit), bounds[0])},
          Genome{from_fixed_point(std::min(decode(c2), limit), bounds[0])}};
}

Genome mutate_real(std::span<const double> v, double sigma, Rng& rng,
                   std::span<const Bounds> bounds) {
  if (v.size() != bounds.size()) throw InvalidInput("mutate_real: bounds dimension mismatch");
  if (!(sigma >= 0.0)) throw InvalidInput("mutate_real: sigma must be non-negative");
  Genome out(v.begin(), v.end());
  if (out.empty()) return out;
  const auto i = static_cast<std::size_t>(rng.below(out.size()));
  const double step = rng.normal() * sigma * bounds[i].width();
  out[i] = bounds[i].clamp(out[i] + step);
  return out;
}

}  // namespace lpbsa
