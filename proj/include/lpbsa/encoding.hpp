#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpbsa/core.hpp"
#include "lpbsa/rng.hpp"

namespace lpbsa {

/// Thrown by mutate_binary when no bit can be flipped in the requested
/// direction. Callers skip the mutation for that gene.
class NoEligibleBit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Big-endian bit string in minimal form: no leading zero except "0" itself.
class BinaryString {
 public:
  /// Parses a string of '0'/'1'. Leading zeros are stripped.
  static BinaryString parse(std::string_view bits);

  const std::string& str() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  char operator[](std::size_t i) const { return bits_[i]; }
  bool operator==(const BinaryString&) const = default;

 private:
  explicit BinaryString(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

BinaryString encode(std::int64_t n);
std::int64_t decode(const BinaryString& b);
std::int64_t decode(std::string_view bits);

/// child1 = left(p1) ++ right(p2), child2 = left(p2) ++ right(p1), where for
/// a string of length L the left half is the first floor(L/2) bits and the
/// right half the last ceil(L/2) bits, each taken from its own parent.
std::pair<BinaryString, BinaryString> crossover_binary(const BinaryString& p1,
                                                       const BinaryString& p2);

enum class FlipDirection { ZeroToOne, OneToZero, AnyFlip };

/// ZeroToOne when maximizing, AnyFlip when minimizing.
FlipDirection default_flip_direction(Sense sense);

/// Positions (0 = most significant) that may be flipped in `direction`.
std::vector<std::size_t> eligible_bits(const BinaryString& b, FlipDirection direction);

/// Flips bit `index`. Throws InvalidInput when the index is out of range or
/// the bit is not eligible for `direction`.
BinaryString flip_bit(const BinaryString& b, std::size_t index, FlipDirection direction);

/// Flips one eligible bit chosen uniformly. Throws NoEligibleBit.
BinaryString mutate_binary(const BinaryString& b, FlipDirection direction, Rng& rng);

/// Same as mutate_binary, reporting the chosen index.
std::pair<BinaryString, std::size_t> mutate_binary_at_random(const BinaryString& b,
                                                             FlipDirection direction, Rng& rng);

/// Single cut-point crossover at `cut` (1 <= cut < dimension).
std::pair<Genome, Genome> crossover_real_at(std::span<const double> p1, std::span<const double> p2,
                                            std::size_t cut);

/// Cut point drawn uniformly from 1..d-1. For d == 1 the values are mapped to
/// a 30-bit fixed-point grid over `bounds` and crossed with crossover_binary.
std::pair<Genome, Genome> crossover_real(std::span<const double> p1, std::span<const double> p2,
                                         Rng& rng, std::span<const Bounds> bounds);

/// Perturbs one uniformly chosen coordinate by N(0, (sigma * width)^2) and
/// clamps it to its bounds.
Genome mutate_real(std::span<const double> v, double sigma, Rng& rng,
                   std::span<const Bounds> bounds);

}  // namespace lpbsa
