#pragma once

#include <cstdint>
#include <random>

#include "tempered/exact.hpp"
#include "tempered/subspace.hpp"

namespace tempered {

/// Default bound N for random integer coordinates in [-N, N].
inline constexpr int kDefaultCoordinateBound = 50;

/// Seeded generator with a platform-independent integer draw. std::mt19937_64
/// is fully specified; the distributions in <random> are not, so we avoid them.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform in [-bound, bound] excluding 0.
  std::int64_t nonzero(std::int64_t bound);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }

  /// Integer combination of the subspace basis with coefficients in [-bound, bound].
  Vector element_of(const Subspace& w, int bound = kDefaultCoordinateBound);
  Vector vector(std::size_t n, int bound = kDefaultCoordinateBound);

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent stream seed from (seed, stream, index) with splitmix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0);

}  // namespace tempered
