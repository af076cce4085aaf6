#ifndef KRAW_ROOTS_HPP
#define KRAW_ROOTS_HPP

#include "identities.hpp"

namespace kraw {

// Sturm chain: first element a positive multiple of p, then its derivative,
// then successive negated remainders, computed fraction-free with content
// stripping so every element keeps integer coefficients.
struct SturmSequence {
    std::vector<UniPoly> chain;

    const UniPoly& p() const { return chain.front(); }
};

// Throws std::invalid_argument on the zero polynomial.
SturmSequence sturm_sequence(const UniPoly& p);

// Whether the chain certifies a squarefree polynomial (constant last element).
bool is_squarefree(const SturmSequence& seq);

// Distinct real roots in (lo, hi] by sign-variation difference.
// Requires lo < hi and both endpoints non-roots of p.
long count_roots(const SturmSequence& seq, const Rational& lo, const Rational& hi);

// 1 + max |c_i / c_d|; every real root lies strictly inside (-bound, bound).
Rational cauchy_root_bound(const UniPoly& p);

// Certified bracket for one real root; lo = hi pins the root exactly.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    bool exact = false;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    std::string str() const;
};

// Isolates all real roots of a squarefree p in (lo, hi); p(lo) and p(hi)
// must be nonzero. Non-exact intervals are refined to the given width and
// carry a sign change; exact rational roots hit by bisection midpoints are
// returned as points. Output is sorted ascending and pairwise disjoint.
std::vector<IsolatingInterval> isolate_in_interval(const UniPoly& p, const Rational& lo,
                                                   const Rational& hi, const Rational& width);

// Root isolation for K_{m,n,s} over (0, n). Degree-1 polynomials short-cut
// to their exact rational root.
std::vector<IsolatingInterval> isolate_roots(const KrawtchoukParams& params,
                                             const Rational& width,
                                             const PolyProvider& kp = default_provider());

// Per-point certification bundle: exactly m disjoint certified intervals
// inside (0,n), zero roots outside the Cauchy bound, simple roots.
VerificationReport check_root_isolation(long n, long s, long m, const Rational& width,
                                        const PolyProvider& kp = default_provider());

// Certifies 0 < y_1 < x_1 < ... < x_m < y_{m+1} < n between the roots of
// K_m (x's) and K_{m+1} (y's), refining intervals until pairwise disjoint.
VerificationReport check_interlacing(long n, long s, long m, const Rational& width,
                                     const PolyProvider& kp = default_provider());

// For s = 2: the isolating-interval list maps onto itself (reversed) under
// [lo,hi] -> [n-hi, n-lo]; for odd m the middle interval contains n/2 and
// is exact when n is even.
VerificationReport check_root_symmetry_s2(long n, long m, const Rational& width,
                                          const PolyProvider& kp = default_provider());

}  // namespace kraw

#endif
