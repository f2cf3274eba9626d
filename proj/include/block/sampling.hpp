#pragma once

// Seeded generators for the randomized property suites. Draws are derived
// from std::mt19937_64 words directly so a seed gives the same stream on
// every standard library.

#include "block/algebra.hpp"
#include "block/automorphism.hpp"

#include <cstdint>
#include <random>

namespace block {

class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    // Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return uniform(0, 1) == 1; }

    // Nonzero p/q with |p| <= 9, 1 <= q <= 9.
    Scalar coefficient();
    BasisIndex index(std::int64_t alpha_lo = -6, std::int64_t alpha_hi = 6, std::int64_t i_max = 4);
    // 1 to 5 terms with support alpha in [-6,6], i in [0,4]; a central part
    // is drawn half of the time when `with_central` is set.
    Element element(bool with_central = false);
    Element witt_element();
    AutParams aut_params();

  private:
    std::mt19937_64 rng_;
};

} // namespace block
