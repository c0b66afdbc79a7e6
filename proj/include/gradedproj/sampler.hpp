#pragma once

#include <cstdint>
#include <random>

#include "gradedproj/potion.hpp"

namespace gradedproj {

// Deterministic pseudo-random source for sample-based map checks. mt19937_64
// is fully specified, so streams are identical across platforms for a fixed
// seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  unsigned uniform(unsigned lo, unsigned hi);
  Rat coefficient();  // nonzero, numerator in [-5,5], denominator in [1,3]

  // Random homogeneous polynomial of the given degree built from monomials of
  // total degree <= bound; zero when no such monomial exists.
  Polynomial homogeneous(const GradedRing& ring, const GroupElement& degree, unsigned bound);

  // Random potion element with witness entries <= witness_bound. Falls back
  // to a constant multiple of the denominator when the degree slice has no
  // monomials within the total-degree bound.
  PotionElement potion(const SubmonoidHandle& sub, unsigned witness_bound = 2);

 private:
  std::mt19937_64 rng_;
};

}  // namespace gradedproj
