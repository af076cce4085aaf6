#ifndef KRAW_IDENTITIES_HPP
#define KRAW_IDENTITIES_HPP

#include <functional>

#include "krawtchouk.hpp"
#include "report.hpp"

namespace kraw {

// Source of K_{m,n,s} for the identity checks. Tests substitute perturbed
// providers to exercise witness reporting; the default is the defining sum.
using PolyProvider = std::function<UniPoly(long n, long s, long m)>;

const PolyProvider& default_provider();

// Dense polynomial in two variables; entry (k,l) is the coefficient of X^k Y^l.
class BivariatePoly {
public:
    BivariatePoly(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), c_(rows * cols, Rational(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t k, size_t l) { return c_[k * cols_ + l]; }
    const Rational& at(size_t k, size_t l) const { return c_[k * cols_ + l]; }

    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.c_ == b.c_;
    }

private:
    size_t rows_;
    size_t cols_;
    std::vector<Rational> c_;
};

// P_j(X) + P_{j+1}(X) = P_{j+1}(X+1), coefficient-identical, for 0 <= j <= j_max.
VerificationReport check_pascal_basis(long j_max);

// K_m(i) = K_m(i-1) - K_{m-1}(i-1) - (s-1) K_{m-1}(i) for 1 <= m, i <= n.
VerificationReport check_value_recurrence(long n, long s,
                                          const PolyProvider& kp = default_provider());

// Same relation at the coefficient level, with X-1 substituted exactly.
VerificationReport check_poly_recurrence(long n, long s,
                                         const PolyProvider& kp = default_provider());

// sum_{k=0}^{m} K_{k,n,s}(X) = K_{m,n-1,s}(X-1). Stated for 1 <= m <= n-1;
// m = n extends the right side past the (n-1)-family's range and is only
// run by the verification driver under its extended flag.
VerificationReport check_summation(long n, long s, long m,
                                   const PolyProvider& kp = default_provider());

// K_{m,n,2}(n-X) = (-1)^m K_{m,n,2}(X), coefficient-identical.
VerificationReport check_symmetry_s2(long n, long m,
                                     const PolyProvider& kp = default_provider());

// sum_i C(n,i)(s-1)^i (sum_k K_k(i)X^k)(sum_l K_l(i)Y^l) = s^n (1+(s-1)XY)^n.
VerificationReport check_bivariate_kernel(long n, long s,
                                          const PolyProvider& kp = default_provider());

}  // namespace kraw

#endif
