#include "tempered/random.hpp"

namespace tempered {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return lo + static_cast<std::int64_t>(draw % span);
}

std::int64_t Rng::nonzero(std::int64_t bound) {
  const auto v = uniform(1, bound);
  return uniform(0, 1) == 0 ? v : -v;
}

Vector Rng::element_of(const Subspace& w, int bound) {
  Vector coeff(w.dim());
  for (auto& c : coeff) c = Scalar(static_cast<long>(uniform(-bound, bound)));
  if (w.dim() == 0) return zero_vector(w.ambient_dim());
  return w.basis().apply_left(coeff);
}

Vector Rng::vector(std::size_t n, int bound) {
  Vector v(n);
  for (auto& c : v) c = Scalar(static_cast<long>(uniform(-bound, bound)));
  return v;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)) ^ (0xBF58476D1CE4E5B9ULL * (index + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace tempered
