#include "corrmetrics/generator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace corrmetrics {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

struct NamedFamily {
  Family family;
  std::string_view name;
};

constexpr std::array<NamedFamily, 7> kNames = {{
    {Family::Diagonal, "diagonal"},
    {Family::DiagonallyDominant, "diagonally_dominant"},
    {Family::Hollow, "hollow"},
    {Family::OffDiagonallyDominant, "off_diagonally_dominant"},
    {Family::NearlyUniform, "nearly_uniform"},
    {Family::Imbalanced32, "imbalanced_3_2"},
    {Family::Imbalanced14, "imbalanced_1_4"},
}};

// Spreads `mass` over `cells` with flat-Dirichlet (normalised exponential) weights.
void flat_simplex(std::vector<double>& probs, const std::vector<std::size_t>& cells,
                  double mass, Xoshiro256& rng) {
  std::vector<double> w(cells.size());
  for (auto& v : w) {
    v = rng.exponential();
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    probs[cells[i]] = mass * w[i] / total;
  }
}

// Spreads `mass` over `cells` with Uniform(0.8, 1.2) weights: similar magnitudes.
void near_uniform(std::vector<double>& probs, const std::vector<std::size_t>& cells,
                  double mass, Xoshiro256& rng) {
  std::vector<double> w(cells.size());
  for (auto& v : w) {
    v = rng.uniform(0.8, 1.2);
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    probs[cells[i]] = mass * w[i] / total;
  }
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& [f, name] : kNames) {
    if (f == family) {
      return name;
    }
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, n] : kNames) {
    if (n == name) {
      return f;
    }
  }
  return std::nullopt;
}

void FamilySpec::validate() const {
  if (k < 2) {
    throw std::invalid_argument("family needs K >= 2");
  }
  if (family == Family::Imbalanced32 && k < 3) {
    throw std::invalid_argument("imbalanced_3_2 needs K >= 3");
  }
  if (n < static_cast<Count>(k) || n > kMaxTotal) {
    throw std::invalid_argument("family needs K <= N <= 2^31 - 1");
  }
}

std::uint64_t splitmix64_mix(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  for (auto& word : s_) {
    seed += kGolden;
    word = splitmix64_mix(seed);
  }
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Xoshiro256::exponential() { return -std::log1p(-uniform()); }

std::uint64_t replicate_seed(std::uint64_t master_seed, Family family,
                             std::uint64_t replicate) {
  const auto tag = static_cast<std::uint64_t>(family) + 1;
  return splitmix64_mix(master_seed + kGolden * tag) ^ splitmix64_mix(replicate);
}

std::vector<double> family_template(const FamilySpec& spec, Xoshiro256& rng) {
  spec.validate();
  const std::size_t k = spec.k;
  std::vector<double> probs(k * k, 0.0);
  std::vector<std::size_t> diag;
  std::vector<std::size_t> off;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      (r == c ? diag : off).push_back(r * k + c);
    }
  }

  switch (spec.family) {
    case Family::Diagonal:
      flat_simplex(probs, diag, 1.0, rng);
      break;
    case Family::DiagonallyDominant: {
      const double mass = rng.uniform(0.7, 0.95);
      flat_simplex(probs, diag, mass, rng);
      flat_simplex(probs, off, 1.0 - mass, rng);
      break;
    }
    case Family::Hollow:
      flat_simplex(probs, off, 1.0, rng);
      break;
    case Family::OffDiagonallyDominant: {
      const double mass = rng.uniform(0.02, 0.2);
      flat_simplex(probs, diag, mass, rng);
      flat_simplex(probs, off, 1.0 - mass, rng);
      break;
    }
    case Family::NearlyUniform: {
      std::vector<std::size_t> all(k * k);
      std::iota(all.begin(), all.end(), 0);
      near_uniform(probs, all, 1.0, rng);
      break;
    }
    case Family::Imbalanced32: {
      const std::vector<std::size_t> big = {0, k + 1, 2 * k + 2};
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < k * k; ++i) {
        if (std::find(big.begin(), big.end(), i) == big.end()) {
          rest.push_back(i);
        }
      }
      flat_simplex(probs, big, 0.5, rng);
      near_uniform(probs, rest, 0.5, rng);
      break;
    }
    case Family::Imbalanced14:
      probs[0] = 0.9;
      near_uniform(probs, off, 0.1, rng);
      break;
  }
  return probs;
}

ConfusionMatrix generate(const FamilySpec& spec, std::uint64_t replicate,
                         std::uint64_t master_seed) {
  Xoshiro256 rng(replicate_seed(master_seed, spec.family, replicate));
  const std::vector<double> probs = family_template(spec, rng);

  std::vector<double> cumulative(probs.size());
  std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
  const double total = cumulative.back();
  std::size_t last_live = probs.size() - 1;
  while (probs[last_live] == 0.0) {
    --last_live;
  }

  std::vector<Count> counts(probs.size(), 0);
  for (Count i = 0; i < spec.n; ++i) {
    const double u = rng.uniform() * total;
    auto cell = static_cast<std::size_t>(
        std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
    // Zero-probability cells have zero-width intervals and are never selected.
    ++counts[std::min(cell, last_live)];
  }
  return ConfusionMatrix(spec.k, std::move(counts));
}

}  // namespace corrmetrics
