#include "krawtchouk.hpp"

#include <stdexcept>
#include <string>

namespace kraw {

KrawtchoukParams::KrawtchoukParams(long n_, long s_, long m_) : n(n_), s(s_), m(m_) {
    if (n < 0)
        throw std::invalid_argument("KrawtchoukParams: n must be nonnegative");
    if (s < 2)
        throw std::invalid_argument("KrawtchoukParams: s must be at least 2");
    if (m < 0 || m > n)
        throw std::invalid_argument("KrawtchoukParams: m must satisfy 0 <= m <= n");
}

ThreeTermCoefficients three_term_coefficients(long n, long s, long m) {
    return {Rational(m + (s - 1) * (n - m)), Rational((s - 1) * (n - m + 1))};
}

namespace {

// The alternating sum, without the m <= n parameter check. The summation
// identity at its extended edge needs one evaluation with m = n against
// the (n-1)-family, where the sum itself is still well-defined.
UniPoly definition_sum(long n, long s, long m) {
    UniPoly acc;
    for (long j = 0; j <= m; ++j) {
        UniPoly left = falling_basis(static_cast<unsigned long>(j));
        UniPoly right = falling_basis(static_cast<unsigned long>(m - j))
                            .compose_affine(Rational(-1), Rational(n));
        Rational scale(ipow(Integer(s - 1), static_cast<unsigned long>(m - j)), Integer(1));
        if (j % 2 != 0)
            scale = -scale;
        acc = acc + scale * (left * right);
    }
    return acc;
}

}  // namespace

UniPoly poly_from_definition(const KrawtchoukParams& p) {
    return definition_sum(p.n, p.s, p.m);
}

namespace detail {

UniPoly definition_sum_unchecked(long n, long s, long m) {
    if (n < 0 || s < 2 || m < 0)
        throw std::invalid_argument("definition_sum_unchecked: bad parameters");
    return definition_sum(n, s, m);
}

}  // namespace detail

Rational gf_value(const KrawtchoukParams& p, long i) {
    if (i < 0 || i > p.n)
        throw std::invalid_argument("gf_value: i must lie in [0, n]");
    UniPoly lhs({Rational(1), Rational(p.s - 1)});  // 1 + (s-1)X
    UniPoly rhs({Rational(1), Rational(-1)});       // 1 - X
    UniPoly product = lhs.pow(static_cast<unsigned long>(p.n - i)) *
                      rhs.pow(static_cast<unsigned long>(i));
    return product.coeff(static_cast<size_t>(p.m));
}

UniPoly poly_from_generating_function(const KrawtchoukParams& p) {
    std::vector<std::pair<Rational, Rational>> samples;
    samples.reserve(static_cast<size_t>(p.m) + 1);
    for (long i = 0; i <= p.m; ++i)
        samples.emplace_back(Rational(i), gf_value(p, i));
    return newton_interpolate(samples);
}

std::vector<UniPoly> family(long n, long s, long m_max) {
    if (n < 0 || s < 2 || m_max < 0 || m_max > n)
        throw std::invalid_argument("family: bad parameters");
    std::vector<UniPoly> ks;
    ks.reserve(static_cast<size_t>(m_max) + 1);
    ks.push_back(UniPoly::constant(1));
    if (m_max >= 1)
        ks.push_back(UniPoly({Rational(n * (s - 1)), Rational(-s)}));
    for (long m = 1; m < m_max; ++m) {
        auto [a_m, b_m] = three_term_coefficients(n, s, m);
        UniPoly multiplier({a_m, Rational(-s)});  // a_m - sX
        UniPoly next = multiplier * ks[static_cast<size_t>(m)] -
                       b_m * ks[static_cast<size_t>(m - 1)];
        ks.push_back(Rational(1, m + 1) * next);
    }
    return ks;
}

UniPoly poly_from_recurrence(const KrawtchoukParams& p) {
    return family(p.n, p.s, p.m).back();
}

std::vector<std::vector<Rational>> value_table(long n, long s, long m_max) {
    if (n < 0 || s < 2 || m_max < 0 || m_max > n)
        throw std::invalid_argument("value_table: m_max must satisfy 0 <= m_max <= n");
    std::vector<std::vector<Rational>> table(static_cast<size_t>(m_max) + 1);
    const size_t cols = static_cast<size_t>(n) + 1;

    table[0].assign(cols, Rational(1));
    if (m_max >= 1) {
        table[1].resize(cols);
        for (long i = 0; i <= n; ++i)
            table[1][static_cast<size_t>(i)] = Rational(n * (s - 1) - s * i);
    }
    for (long m = 2; m <= m_max; ++m) {
        auto& row = table[static_cast<size_t>(m)];
        const auto& prev = table[static_cast<size_t>(m - 1)];
        row.resize(cols);
        row[0] = Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m)) *
                              ipow(Integer(s - 1), static_cast<unsigned long>(m)),
                          Integer(1));
        for (size_t i = 1; i < cols; ++i)
            row[i] = row[i - 1] - prev[i - 1] - Rational(s - 1) * prev[i];
    }
    return table;
}

Rational leading_coefficient(const KrawtchoukParams& p) {
    return Rational(ipow(Integer(-p.s), static_cast<unsigned long>(p.m)),
                    factorial(static_cast<unsigned long>(p.m)));
}

UniPoly construct(const KrawtchoukParams& p, Method method) {
    switch (method) {
        case Method::definition: return poly_from_definition(p);
        case Method::generating_function: return poly_from_generating_function(p);
        case Method::recurrence: return poly_from_recurrence(p);
    }
    throw std::invalid_argument("construct: unknown method");
}

}  // namespace kraw
