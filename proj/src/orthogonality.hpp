#ifndef KRAW_ORTHOGONALITY_HPP
#define KRAW_ORTHOGONALITY_HPP

#include <cstdint>

#include "identities.hpp"

namespace kraw {

// Weights w_i = C(n,i)(s-1)^i for i = 0..n; all positive, summing to s^n.
struct WeightSequence {
    long n;
    long s;
    std::vector<Rational> weights;

    static WeightSequence make(long n, long s);
};

// <A,B> = sum_i w_i A(i) B(i) on polynomials of degree at most n.
// Degrees above n are rejected: the orthogonality statements live in R_n[X].
Rational inner_product(const UniPoly& a, const UniPoly& b, const WeightSequence& w);

// Entry (k,l) = <K_k, K_l>; diagonal s^n (s-1)^k C(n,k), zero elsewhere.
std::vector<std::vector<Rational>> gram_matrix(long n, long s,
                                               const PolyProvider& kp = default_provider());

// <K_m, A> = 0 for every monomial X^d with d < m and for `trials` seeded
// pseudo-random polynomials of degree < m (see rng.hpp for the exact stream).
VerificationReport check_low_degree_orthogonality(long n, long s, long m, std::uint64_t seed,
                                                  long trials,
                                                  const PolyProvider& kp = default_provider());

}  // namespace kraw

#endif
