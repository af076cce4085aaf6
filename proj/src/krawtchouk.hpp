#ifndef KRAW_KRAWTCHOUK_HPP
#define KRAW_KRAWTCHOUK_HPP

#include <vector>

#include "unipoly.hpp"

namespace kraw {

// Parameter triple (n, s, m): n >= 0, s >= 2, 0 <= m <= n.
struct KrawtchoukParams {
    long n = 0;
    long s = 2;
    long m = 0;

    KrawtchoukParams(long n_, long s_, long m_);
};

// Coefficients of the three-term recurrence
//   (m+1) K_{m+1} = (a_m - sX) K_m - b_m K_{m-1},
// a_m = m + (s-1)(n-m), b_m = (s-1)(n-m+1); both positive for 1 <= m <= n.
struct ThreeTermCoefficients {
    Rational a_m;
    Rational b_m;
};

ThreeTermCoefficients three_term_coefficients(long n, long s, long m);

// The defining alternating sum over the falling-factorial basis:
//   sum_{j=0}^{m} (-1)^j P_j(X) P_{m-j}(n - X) (s-1)^{m-j}.
UniPoly poly_from_definition(const KrawtchoukParams& p);

// Value at integer i in [0, n], read off as the X^m coefficient of the
// exact expansion of (1 + (s-1)X)^{n-i} (1 - X)^i.
Rational gf_value(const KrawtchoukParams& p, long i);

// Reconstruction from the m+1 generating-function values at i = 0..m,
// by exact Newton interpolation.
UniPoly poly_from_generating_function(const KrawtchoukParams& p);

// Iterates the three-term recurrence up from K_0 = 1, K_1 = n(s-1) - sX.
UniPoly poly_from_recurrence(const KrawtchoukParams& p);

// K_0..K_{m_max} in one recurrence pass.
std::vector<UniPoly> family(long n, long s, long m_max);

// Value table, rows m = 0..m_max, columns i = 0..n. Row 0 is all ones,
// row 1 comes from the closed form n(s-1) - s i, rows m >= 2 start at
// column 0 with C(n,m)(s-1)^m and fill left to right via
//   K_m(i) = K_m(i-1) - K_{m-1}(i-1) - (s-1) K_{m-1}(i).
std::vector<std::vector<Rational>> value_table(long n, long s, long m_max);

// (-s)^m / m!
Rational leading_coefficient(const KrawtchoukParams& p);

enum class Method { definition, generating_function, recurrence };

UniPoly construct(const KrawtchoukParams& p, Method method);

namespace detail {

// The defining sum without the m <= n restriction. Only the extended
// summation check needs it (its right side reaches m = n against the
// (n-1)-family); everything else goes through KrawtchoukParams.
UniPoly definition_sum_unchecked(long n, long s, long m);

}  // namespace detail

}  // namespace kraw

#endif
