#pragma once

// Seeded random density matrices for property suites.

#include <cstdint>
#include <random>
#include <utility>

#include "dmsem/spectral.hpp"

namespace dmsem {

class RandomDmats {
 public:
  explicit RandomDmats(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() noexcept { return rng_; }
  double uniform(double lo, double hi);
  std::size_t uniform_int(std::size_t lo, std::size_t hi);  // inclusive

  /// Haar-ish orthogonal matrix (QR of a Gaussian matrix, sign-fixed), rows
  /// orthonormal.
  Matrix orthogonal(std::size_t dim);

  /// Dmat with `rank` eigenvalues drawn from [lo, hi] in a random basis, the
  /// rest exactly zero.
  Dmat psd(std::size_t dim, std::size_t rank, double lo = 0.05, double hi = 1.0);
  Dmat full_rank(std::size_t dim, double lo = 0.05, double hi = 1.0) { return psd(dim, dim, lo, hi); }

  /// Rank uniformly in [1, dim].
  Dmat any_rank(std::size_t dim, double lo = 0.05, double hi = 1.0);

  /// A below B in the Loewner order: A = B - P for a random PSD P that keeps
  /// A PSD. Both have lambda_max <= 1.
  std::pair<Dmat, Dmat> ordered_pair(std::size_t dim);

  /// Invertible pair sharing a random eigenbasis.
  std::pair<Dmat, Dmat> commuting_pair(std::size_t dim, double lo = 0.05, double hi = 1.0);

 private:
  std::mt19937_64 rng_;
};

}  // namespace dmsem
