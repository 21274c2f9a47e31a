#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corrmetrics/confusion_matrix.hpp"

namespace corrmetrics {

enum class Family {
  Diagonal,
  DiagonallyDominant,
  Hollow,
  OffDiagonallyDominant,
  NearlyUniform,
  Imbalanced32,
  Imbalanced14,
};

inline constexpr std::array kAllFamilies = {
    Family::Diagonal,      Family::DiagonallyDominant, Family::Hollow,
    Family::OffDiagonallyDominant, Family::NearlyUniform, Family::Imbalanced32,
    Family::Imbalanced14,
};

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::Diagonal;
  std::size_t k = 5;
  Count n = 1000;

  /// Throws std::invalid_argument for K < 2, N < K, or K < 3 with Imbalanced32.
  void validate() const;
};

/// xoshiro256** 1.0 (Blackman & Vigna). Output is fully specified, so streams
/// are reproducible across platforms and languages.
class Xoshiro256 {
 public:
  static constexpr std::string_view kAlgorithm = "xoshiro256** 1.0 / splitmix64 seeding";

  /// Expands `seed` into the 256-bit state with SplitMix64.
  explicit Xoshiro256(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Unit-rate exponential, the Gamma(1) building block of a flat simplex draw.
  double exponential();

 private:
  std::array<std::uint64_t, 4> s_{};
};

std::uint64_t splitmix64_mix(std::uint64_t x);

/// Seed of replicate `replicate` of `family` under `master_seed`; independent of
/// any other replicate, so replicates can be generated in any order.
std::uint64_t replicate_seed(std::uint64_t master_seed, Family family,
                             std::uint64_t replicate);

/// Row-major K x K cell probabilities summing to one. Cells forbidden by the
/// family (off-diagonal for Diagonal, diagonal for Hollow, C_kk for k >= 2 in
/// Imbalanced14) are exactly zero.
std::vector<double> family_template(const FamilySpec& spec, Xoshiro256& rng);

/// Draws N cases from the family template by categorical sampling over the
/// K^2 cells. Pure function of (spec, replicate, master_seed).
ConfusionMatrix generate(const FamilySpec& spec, std::uint64_t replicate,
                         std::uint64_t master_seed);

}  // namespace corrmetrics
