#ifndef KRAW_UNIPOLY_HPP
#define KRAW_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace kraw {

// Dense univariate polynomial over Rational. Coefficient k is the
// coefficient of X^k. The zero polynomial has an empty coefficient
// sequence; its degree() is -1, standing in for "minus infinity".
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(Rational value);
    static UniPoly monomial(size_t k, Rational coeff);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }

    // coefficient of X^k; 0 beyond the stored range
    Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const;

    UniPoly derivative() const;

    // p(aX + b), computed exactly by Horner composition
    UniPoly compose_affine(const Rational& a, const Rational& b) const;

    UniPoly pow(unsigned long e) const;

    friend UniPoly operator+(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator-(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator*(const Rational& c, const UniPoly& p);
    UniPoly operator-() const;

    friend bool operator==(const UniPoly& p, const UniPoly& q) { return p.c_ == q.c_; }
    friend bool operator!=(const UniPoly& p, const UniPoly& q) { return p.c_ != q.c_; }

    // human-readable form, e.g. "2*X^2 - 8*X + 6"
    std::string str() const;

private:
    void trim();

    std::vector<Rational> c_;
};

// P_j = X(X-1)...(X-j+1)/j!; P_0 = 1. Satisfies P_j(i) = C(i,j) at integers i >= j.
UniPoly falling_basis(unsigned long j);

// Unique polynomial of degree < points.size() through all points, by exact
// divided differences. Throws std::invalid_argument on duplicate abscissae.
UniPoly newton_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace kraw

#endif
