#pragma once

#include <cstdint>
#include <random>

#include "ainfty/multimap.hpp"

namespace ainfty {

// Deterministic draws for property checks: same seed, same sequence, on any
// platform (uniform sampling is done by rejection, not by distribution
// objects).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t draw() { return rng_(); }
  int uniform(int lo, int hi);  // inclusive bounds
  Scalar scalar(const RingSpec& ring, int bound = 3);
  Scalar nonzero_scalar(const RingSpec& ring, int bound = 3);

  // Operator with up to max_entries terms on degree-consistent basis pairs;
  // zero when the complex supports none at this arity and degree.
  MultiMap multimap(const DgModule& c, int arity, int degree, int max_entries);

 private:
  std::mt19937_64 rng_;
};

}  // namespace ainfty
