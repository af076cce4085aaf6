#ifndef KRAW_RATIONAL_HPP
#define KRAW_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace kraw {

using Integer = mpz_class;

// Exact fraction, always reduced, denominator > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long value) : v_(value) {}  // NOLINT: implicit by design
    Rational(long num, long den);
    Rational(Integer num, Integer den);
    explicit Rational(Integer value) : v_(std::move(value)) {}

    // Accepts "p", "-p", "p/q" with q > 0 after normalization; rejects q = 0.
    static std::optional<Rational> parse(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const;

    // Canonical "p/q" form, "p" when q = 1.
    std::string str() const { return v_.get_str(); }

    // Truncated decimal rendering with `digits` places, for display only.
    std::string decimal_str(int digits) const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    explicit Rational(mpq_class value) : v_(std::move(value)) {}

    mpq_class v_;  // kept canonical: mpq arithmetic preserves reduced form
};

// C(a, b); 0 when b > a. Pascal-row iteration, integer-only.
Integer binomial(unsigned long a, unsigned long b);

Integer factorial(unsigned long n);

// base^exp over Integer, exp >= 0.
Integer ipow(const Integer& base, unsigned long exp);

}  // namespace kraw

#endif
