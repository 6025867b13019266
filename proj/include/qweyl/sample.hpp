#pragma once

// Seeded random monomials and polynomials for the property suites.  Draws
// use only the raw engine output, so a seed gives the same sample on every
// standard library.

#include "qweyl/laurent.hpp"

#include <cstdint>
#include <random>

namespace qweyl {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in [lo, hi].
    int uniform(int lo, int hi);
    /// Product of `factors` generators Y_{j,k}^{+-1}, k in [-kRange, kRange].
    Mono mono(int rank, int factors, int kRange = 4);
    /// Up to `terms` monomials of degree <= maxDegree with coefficients in [-3, 3].
    Poly poly(int rank, int maxDegree = 3, int terms = 3, int kRange = 4);

private:
    std::mt19937_64 rng_;
};

}  // namespace qweyl
