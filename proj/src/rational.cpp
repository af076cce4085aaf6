#include "rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kraw {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(Integer num, Integer den) {
    if (sgn(den) == 0)
        throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
        throw std::invalid_argument("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::abs() const {
    return sgn(v_) < 0 ? Rational(mpq_class(-v_)) : *this;
}

std::optional<Rational> Rational::parse(std::string_view text) {
    // strict grammar: -?digits(/digits)?  with a positive divisor
    auto all_digits = [](std::string_view t) {
        if (t.empty())
            return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den))
            return std::nullopt;
    }
    bool neg = !num.empty() && num.front() == '-';
    if (neg)
        num.remove_prefix(1);
    if (!all_digits(num))
        return std::nullopt;

    Integer p(std::string(num), 10);
    if (neg)
        p = -p;
    Integer q = den.empty() ? Integer(1) : Integer(std::string(den), 10);
    if (sgn(q) == 0)
        return std::nullopt;
    return Rational(std::move(p), std::move(q));
}

std::string Rational::decimal_str(int digits) const {
    if (digits < 0)
        digits = 0;
    Integer p = numerator();
    Integer q = denominator();
    bool neg = sgn(p) < 0;
    if (neg)
        p = -p;
    Integer scaled = (p * ipow(10, static_cast<unsigned long>(digits))) / q;
    std::string s = scaled.get_str();
    if (s.size() <= static_cast<size_t>(digits))
        s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
    std::string out = neg ? "-" : "";
    out += s.substr(0, s.size() - digits);
    if (digits > 0) {
        out += '.';
        out += s.substr(s.size() - digits);
    }
    return out;
}

Integer binomial(unsigned long a, unsigned long b) {
    if (b > a)
        return 0;
    if (b > a - b)
        b = a - b;
    // row of Pascal's triangle, left to right
    std::vector<Integer> row(b + 1);
    row[0] = 1;
    for (unsigned long i = 1; i <= a; ++i) {
        unsigned long hi = std::min(i, static_cast<unsigned long>(b));
        for (unsigned long j = hi; j >= 1; --j)
            row[j] += row[j - 1];
    }
    return row[b];
}

Integer factorial(unsigned long n) {
    Integer r = 1;
    for (unsigned long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

Integer ipow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

}  // namespace kraw
