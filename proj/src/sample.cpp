#include "qweyl/sample.hpp"

namespace qweyl {

int Sampler::uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng_() % span);
}

Mono Sampler::mono(int rank, int factors, int kRange) {
    Mono m;
    for (int t = 0; t < factors; ++t)
        m = m * Mono::y(uniform(0, rank - 1), uniform(-kRange, kRange), uniform(0, 1) ? 1 : -1);
    return m;
}

Poly Sampler::poly(int rank, int maxDegree, int terms, int kRange) {
    Poly p;
    const int n = uniform(1, terms);
    for (int t = 0; t < n; ++t) {
        int c = uniform(-3, 3);
        if (c == 0) c = 1;
        p.addTerm(mono(rank, uniform(0, maxDegree), kRange), c);
    }
    return p;
}

}  // namespace qweyl
