#include "orthogonality.hpp"

#include <stdexcept>

#include "rng.hpp"

namespace kraw {

WeightSequence WeightSequence::make(long n, long s) {
    if (n < 0 || s < 2)
        throw std::invalid_argument("WeightSequence: need n >= 0 and s >= 2");
    WeightSequence w{n, s, {}};
    w.weights.reserve(static_cast<size_t>(n) + 1);
    Rational sum(0);
    for (long i = 0; i <= n; ++i) {
        Rational wi(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i)) *
                        ipow(Integer(s - 1), static_cast<unsigned long>(i)),
                    Integer(1));
        sum += wi;
        w.weights.push_back(std::move(wi));
    }
    if (sum != Rational(ipow(Integer(s), static_cast<unsigned long>(n)), Integer(1)))
        throw std::logic_error("WeightSequence: weights do not sum to s^n");
    return w;
}

Rational inner_product(const UniPoly& a, const UniPoly& b, const WeightSequence& w) {
    if (a.degree() > w.n || b.degree() > w.n)
        throw std::invalid_argument("inner_product: degree above n is outside R_n[X]");
    Rational acc(0);
    for (long i = 0; i <= w.n; ++i) {
        const Rational& wi = w.weights[static_cast<size_t>(i)];
        acc += wi * a.eval(Rational(i)) * b.eval(Rational(i));
    }
    return acc;
}

std::vector<std::vector<Rational>> gram_matrix(long n, long s, const PolyProvider& kp) {
    WeightSequence w = WeightSequence::make(n, s);
    std::vector<UniPoly> ks;
    ks.reserve(static_cast<size_t>(n) + 1);
    for (long m = 0; m <= n; ++m)
        ks.push_back(kp(n, s, m));

    const size_t dim = static_cast<size_t>(n) + 1;
    std::vector<std::vector<Rational>> g(dim, std::vector<Rational>(dim));
    for (size_t k = 0; k < dim; ++k)
        for (size_t l = k; l < dim; ++l) {
            Rational v = inner_product(ks[k], ks[l], w);
            g[k][l] = v;
            g[l][k] = std::move(v);
        }
    return g;
}

VerificationReport check_low_degree_orthogonality(long n, long s, long m, std::uint64_t seed,
                                                  long trials, const PolyProvider& kp) {
    if (m < 1 || m > n)
        throw std::invalid_argument("check_low_degree_orthogonality: need 1 <= m <= n");
    VerificationReport report;
    report.identity = "low-degree-orthogonality";
    report.parameters = {{"n", n},
                         {"s", s},
                         {"m", m},
                         {"seed", static_cast<long long>(seed)},
                         {"trials", trials}};

    WeightSequence w = WeightSequence::make(n, s);
    UniPoly km = kp(n, s, m);

    for (long d = 0; d < m; ++d) {
        Rational v = inner_product(km, UniPoly::monomial(static_cast<size_t>(d), Rational(1)), w);
        if (!v.is_zero()) {
            report.passed = false;
            report.witness = Witness{{{"d", d}}, v.str(), "0"};
            return report;
        }
    }

    SplitMix64 rng(trial_stream_seed(seed, n, s, m));
    for (long t = 0; t < trials; ++t) {
        UniPoly a = draw_poly(rng, m - 1);
        Rational v = inner_product(km, a, w);
        if (!v.is_zero()) {
            report.passed = false;
            report.witness = Witness{{{"trial", t}}, v.str(), "0"};
            return report;
        }
    }
    return report;
}

}  // namespace kraw
