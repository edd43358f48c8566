#pragma once

#include <random>

#include "cfree/fock.hpp"
#include "cfree/meixner.hpp"

namespace cfree {

/// Deterministic source of small exact rationals and random algebra inputs
/// for tests and verification suites. Same seed, same stream.
class RatRng {
 public:
  explicit RatRng(uint64_t seed) : gen_(seed) {}

  /// Numerator in [-3, 3], denominator in {1, 2, 3}.
  Rat coefficient();
  Rat nonzero_coefficient();
  /// Numerator in [1, 4], denominator in {1, 2, 3}.
  Rat positive();
  int uniform_int(int lo, int hi);

 private:
  std::mt19937_64 gen_;
};

/// Generic functional: unit empty-word moment, random small rationals on
/// every word of degree 1..truncation.
Functional random_functional(RatRng& rng, int d, int truncation);

/// Functional with reversal-symmetric moments.
Functional random_symmetric_functional(RatRng& rng, int d, int truncation);

/// Single-variable state built from random Jacobi parameters with strictly
/// positive gamma (hence PSD moments).
Functional random_jacobi_state(RatRng& rng, int truncation);

std::vector<Rat> random_point(RatRng& rng, int d);

/// Random symmetric-operator data; xi is the first basis vector.
StateOpData<Rat> random_state_data(RatRng& rng, int d, int dim);
FreeOpData<Rat> random_free_data(RatRng& rng, int d, int dim);

}  // namespace cfree
