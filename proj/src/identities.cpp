#include "identities.hpp"

#include <stdexcept>

namespace kraw {

const PolyProvider& default_provider() {
    static const PolyProvider p = [](long n, long s, long m) {
        return poly_from_definition(KrawtchoukParams(n, s, m));
    };
    return p;
}

namespace {

VerificationReport make_report(std::string identity, ParamRecord params) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.parameters = std::move(params);
    return r;
}

void record_failure(VerificationReport& r, ParamRecord point, std::string lhs, std::string rhs) {
    if (r.passed) {
        r.passed = false;
        r.witness = Witness{std::move(point), std::move(lhs), std::move(rhs)};
    }
}

std::vector<UniPoly> provider_family(const PolyProvider& kp, long n, long s, long m_max) {
    std::vector<UniPoly> ks;
    ks.reserve(static_cast<size_t>(m_max) + 1);
    for (long m = 0; m <= m_max; ++m)
        ks.push_back(kp(n, s, m));
    return ks;
}

}  // namespace

VerificationReport check_pascal_basis(long j_max) {
    if (j_max < 0)
        throw std::invalid_argument("check_pascal_basis: j_max must be nonnegative");
    auto report = make_report("pascal-basis", {{"j_max", j_max}});
    UniPoly pj = falling_basis(0);
    for (long j = 0; j <= j_max; ++j) {
        UniPoly pj1 = falling_basis(static_cast<unsigned long>(j) + 1);
        UniPoly lhs = pj + pj1;
        UniPoly rhs = pj1.compose_affine(Rational(1), Rational(1));
        if (lhs != rhs) {
            record_failure(report, {{"j", j}}, lhs.str(), rhs.str());
            break;
        }
        pj = std::move(pj1);
    }
    return report;
}

VerificationReport check_value_recurrence(long n, long s, const PolyProvider& kp) {
    if (n < 1 || s < 2)
        throw std::invalid_argument("check_value_recurrence: need n >= 1 and s >= 2");
    auto report = make_report("value-recurrence", {{"n", n}, {"s", s}});
    auto ks = provider_family(kp, n, s, n);
    for (long m = 1; m <= n && report.passed; ++m) {
        for (long i = 1; i <= n; ++i) {
            Rational lhs = ks[static_cast<size_t>(m)].eval(Rational(i));
            Rational rhs = ks[static_cast<size_t>(m)].eval(Rational(i - 1)) -
                           ks[static_cast<size_t>(m - 1)].eval(Rational(i - 1)) -
                           Rational(s - 1) * ks[static_cast<size_t>(m - 1)].eval(Rational(i));
            if (lhs != rhs) {
                record_failure(report, {{"m", m}, {"i", i}}, lhs.str(), rhs.str());
                break;
            }
        }
    }
    return report;
}

VerificationReport check_poly_recurrence(long n, long s, const PolyProvider& kp) {
    if (n < 1 || s < 2)
        throw std::invalid_argument("check_poly_recurrence: need n >= 1 and s >= 2");
    auto report = make_report("poly-recurrence", {{"n", n}, {"s", s}});
    auto ks = provider_family(kp, n, s, n);
    for (long m = 1; m <= n; ++m) {
        const UniPoly& km = ks[static_cast<size_t>(m)];
        const UniPoly& km1 = ks[static_cast<size_t>(m - 1)];
        UniPoly rhs = km.compose_affine(Rational(1), Rational(-1)) -
                      km1.compose_affine(Rational(1), Rational(-1)) -
                      Rational(s - 1) * km1;
        if (km != rhs) {
            record_failure(report, {{"m", m}}, km.str(), rhs.str());
            break;
        }
    }
    return report;
}

VerificationReport check_summation(long n, long s, long m, const PolyProvider& kp) {
    if (n < 2 || s < 2 || m < 1 || m > n)
        throw std::invalid_argument("check_summation: need n >= 2, s >= 2, 1 <= m <= n");
    auto report = make_report("summation", {{"n", n}, {"s", s}, {"m", m}});
    UniPoly lhs;
    for (long k = 0; k <= m; ++k)
        lhs = lhs + kp(n, s, k);
    UniPoly right = (m <= n - 1) ? kp(n - 1, s, m) : detail::definition_sum_unchecked(n - 1, s, m);
    UniPoly rhs = right.compose_affine(Rational(1), Rational(-1));
    if (lhs != rhs)
        record_failure(report, {{"m", m}}, lhs.str(), rhs.str());
    return report;
}

VerificationReport check_symmetry_s2(long n, long m, const PolyProvider& kp) {
    if (n < 0 || m < 0 || m > n)
        throw std::invalid_argument("check_symmetry_s2: need 0 <= m <= n");
    auto report = make_report("symmetry-s2", {{"n", n}, {"m", m}});
    UniPoly km = kp(n, 2, m);
    UniPoly lhs = km.compose_affine(Rational(-1), Rational(n));
    UniPoly rhs = (m % 2 == 0) ? km : -km;
    if (lhs != rhs)
        record_failure(report, {{"m", m}}, lhs.str(), rhs.str());
    return report;
}

VerificationReport check_bivariate_kernel(long n, long s, const PolyProvider& kp) {
    if (n < 0 || s < 2)
        throw std::invalid_argument("check_bivariate_kernel: need n >= 0 and s >= 2");
    auto report = make_report("bivariate-kernel", {{"n", n}, {"s", s}});
    const size_t dim = static_cast<size_t>(n) + 1;
    auto ks = provider_family(kp, n, s, n);

    // values[k][i] = K_k(i)
    std::vector<std::vector<Rational>> values(dim, std::vector<Rational>(dim));
    for (size_t k = 0; k < dim; ++k)
        for (size_t i = 0; i < dim; ++i)
            values[k][i] = ks[k].eval(Rational(static_cast<long>(i)));

    BivariatePoly lhs(dim, dim);
    for (size_t i = 0; i < dim; ++i) {
        Rational w(binomial(static_cast<unsigned long>(n), i) * ipow(Integer(s - 1), i),
                   Integer(1));
        for (size_t k = 0; k < dim; ++k) {
            if (values[k][i].is_zero())
                continue;
            Rational wk = w * values[k][i];
            for (size_t l = 0; l < dim; ++l)
                lhs.at(k, l) += wk * values[l][i];
        }
    }

    // s^n (1 + (s-1)XY)^n  =  sum_i s^n C(n,i)(s-1)^i X^i Y^i
    BivariatePoly rhs(dim, dim);
    Integer sn = ipow(Integer(s), static_cast<unsigned long>(n));
    for (size_t i = 0; i < dim; ++i)
        rhs.at(i, i) =
            Rational(sn * binomial(static_cast<unsigned long>(n), i) * ipow(Integer(s - 1), i),
                     Integer(1));

    for (size_t k = 0; k < dim && report.passed; ++k)
        for (size_t l = 0; l < dim; ++l)
            if (lhs.at(k, l) != rhs.at(k, l)) {
                record_failure(report,
                               {{"k", static_cast<long long>(k)}, {"l", static_cast<long long>(l)}},
                               lhs.at(k, l).str(), rhs.at(k, l).str());
                break;
            }
    return report;
}

}  // namespace kraw
