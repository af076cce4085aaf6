#include "unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace kraw {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

UniPoly UniPoly::constant(Rational value) {
    UniPoly p;
    if (!value.is_zero())
        p.c_.push_back(std::move(value));
    return p;
}

UniPoly UniPoly::monomial(size_t k, Rational coeff) {
    UniPoly p;
    if (!coeff.is_zero()) {
        p.c_.assign(k + 1, Rational(0));
        p.c_[k] = std::move(coeff);
    }
    return p;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t k = c_.size(); k-- > 0;) {
        acc *= x;
        acc += c_[k];
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1)
        return UniPoly();
    UniPoly d;
    d.c_.reserve(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k)
        d.c_.push_back(Rational(Integer(static_cast<long>(k)), 1) * c_[k]);
    d.trim();
    return d;
}

UniPoly UniPoly::compose_affine(const Rational& a, const Rational& b) const {
    UniPoly inner;  // aX + b
    inner.c_ = {b, a};
    inner.trim();
    UniPoly acc;
    for (size_t k = c_.size(); k-- > 0;)
        acc = acc * inner + UniPoly::constant(c_[k]);
    return acc;
}

UniPoly UniPoly::pow(unsigned long e) const {
    UniPoly result = UniPoly::constant(1);
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1UL)
            result = result * base;
        base = base * base;
        e >>= 1UL;
    }
    return result;
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    UniPoly r;
    r.c_.resize(std::max(p.c_.size(), q.c_.size()), Rational(0));
    for (size_t k = 0; k < p.c_.size(); ++k)
        r.c_[k] += p.c_[k];
    for (size_t k = 0; k < q.c_.size(); ++k)
        r.c_[k] += q.c_[k];
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) {
    return p + (-q);
}

UniPoly UniPoly::operator-() const {
    UniPoly r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_)
        r.c_.push_back(-c);
    return r;
}

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero())
        return UniPoly();
    UniPoly r;
    r.c_.assign(p.c_.size() + q.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < p.c_.size(); ++i)
        for (size_t j = 0; j < q.c_.size(); ++j)
            r.c_[i + j] += p.c_[i] * q.c_[j];
    r.trim();
    return r;
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
    if (c.is_zero())
        return UniPoly();
    UniPoly r;
    r.c_.reserve(p.c_.size());
    for (const auto& pc : p.c_)
        r.c_.push_back(c * pc);
    return r;
}

std::string UniPoly::str() const {
    if (c_.empty())
        return "0";
    std::string out;
    for (size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c.is_zero())
            continue;
        Rational a = c.abs();
        if (out.empty())
            out += (c.sign() < 0) ? "-" : "";
        else
            out += (c.sign() < 0) ? " - " : " + ";
        bool unit = (a == Rational(1));
        if (k == 0 || !unit)
            out += a.str();
        if (k > 0) {
            if (!unit)
                out += "*";
            out += "X";
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    return out;
}

UniPoly falling_basis(unsigned long j) {
    UniPoly p = UniPoly::constant(1);
    for (unsigned long t = 0; t < j; ++t) {
        UniPoly factor({Rational(-static_cast<long>(t), 1), Rational(1)});  // X - t
        p = p * factor;
    }
    return Rational(Integer(1), factorial(j)) * p;
}

UniPoly newton_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    const size_t n = points.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("newton_interpolate: duplicate abscissa");

    // divided differences in place: diffs[i] ends as f[x_0..x_i]
    std::vector<Rational> diffs;
    diffs.reserve(n);
    for (const auto& pt : points)
        diffs.push_back(pt.second);
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n; i-- > level;)
            diffs[i] = (diffs[i] - diffs[i - 1]) / (points[i].first - points[i - level].first);

    UniPoly result;
    UniPoly basis = UniPoly::constant(1);  // prod_{t<i} (X - x_t)
    for (size_t i = 0; i < n; ++i) {
        result = result + diffs[i] * basis;
        UniPoly factor({-points[i].first, Rational(1)});
        basis = basis * factor;
    }
    return result;
}

}  // namespace kraw
