#pragma once

// Seeded exact sampling.  Numerators lie in [-9, 9], denominators in [1, 5].

#include <cstdint>
#include <random>
#include <vector>

#include "dbs/rational.hpp"

namespace dbs {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  Rational rational();
  Rational nonzero_rational();
  /// Nonzero diagonal entry candidates for torus elements.
  std::vector<Rational> rationals(int n, bool nonzero);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace dbs
