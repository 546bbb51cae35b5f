#pragma once

#include "qdiv/operators.hpp"
#include "qdiv/state_map.hpp"
#include "qdiv/types.hpp"

#include <cstdint>

namespace qdiv {

// SplitMix64. The stream depends only on the seed, so every sampler below is
// reproducible bit for bit on IEEE-754 platforms with the same libm.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed), seed_(seed) {}

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform on (0, 1): never returns 0, so -log(u) is finite.
  double uniform_open();
  // Standard complex normal (E|z|^2 = 1) by Box-Muller: sqrt(-log u1) e^{2 pi i u2}.
  Complex complex_normal();
  // Unit-rate exponential, -log(u).
  double exponential();

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t state_;
  std::uint64_t seed_;
};

// Derives an independent seed for worker/sample `index` from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

ComplexMatrix ginibre(int n, SeededRng& rng);

// QR of a Ginibre matrix with the phases of diag(R) divided out of Q.
ComplexMatrix haar_unitary(int n, SeededRng& rng);

ComplexVector random_unit_vector(int n, SeededRng& rng);

// U diag(p_1..p_r, 0..0) U*, p uniform on the simplex, U Haar.
DensityOperator random_density(int n, int rank, SeededRng& rng);

// U diag(lambda) U*, lambda log-uniform in [1/sqrt(kappa), sqrt(kappa)].
PositiveOperator random_positive_definite(int n, double kappa, SeededRng& rng);

StateMap random_antiunitary(int n, SeededRng& rng);

}  // namespace qdiv
