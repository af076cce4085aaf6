#ifndef KRAW_RNG_HPP
#define KRAW_RNG_HPP

#include <cstdint>

#include "unipoly.hpp"

namespace kraw {

// splitmix64. Chosen over std::mt19937 because the exact stream is part of
// the reproducibility contract: alternate implementations must regenerate
// the same trial polynomials from the same seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound >= 1, by modulo (bias is irrelevant here)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Per-point stream so trials at distinct (n, s, m) are decorrelated while
// staying a pure function of (seed, n, s, m).
inline std::uint64_t trial_stream_seed(std::uint64_t seed, long n, long s, long m) {
    return seed ^ (static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ULL) ^
           (static_cast<std::uint64_t>(s) * 0xC2B2AE3D27D4EB4FULL) ^
           (static_cast<std::uint64_t>(m) * 0x165667B19E3779F9ULL);
}

// numerator in [-9, 9], denominator in [1, 9]
inline Rational draw_small_rational(SplitMix64& rng) {
    long num = static_cast<long>(rng.below(19)) - 9;
    long den = static_cast<long>(rng.below(9)) + 1;
    return Rational(num, den);
}

// Nonzero polynomial of degree exactly d for d drawn in [0, max_degree];
// the leading coefficient is redrawn until nonzero.
inline UniPoly draw_poly(SplitMix64& rng, long max_degree) {
    const size_t d = static_cast<size_t>(rng.below(static_cast<std::uint64_t>(max_degree) + 1));
    std::vector<Rational> coeffs(d + 1);
    for (size_t k = 0; k <= d; ++k)
        coeffs[k] = draw_small_rational(rng);
    while (coeffs[d].is_zero())
        coeffs[d] = draw_small_rational(rng);
    return UniPoly(std::move(coeffs));
}

}  // namespace kraw

#endif
