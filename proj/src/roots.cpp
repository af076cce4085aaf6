#include "roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace kraw {

namespace {

constexpr int kEndpointNudgeRetries = 64;
constexpr int kRefinementBudget = 256;  // bisections per interval

using IntPoly = std::vector<Integer>;  // dense, highest index = leading

void itrim(IntPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

// positive gcd of all coefficients
Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void divide_out_content(IntPoly& p) {
    Integer g = content(p);
    if (sgn(g) == 0 || g == 1)
        return;
    for (auto& c : p)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// clear denominators and strip content; a positive multiple of p
IntPoly to_primitive(const UniPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coefficients())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    IntPoly out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients())
        out.push_back(c.numerator() * (l / c.denominator()));
    divide_out_content(out);
    return out;
}

IntPoly iderivative(const IntPoly& p) {
    IntPoly d;
    if (p.size() <= 1)
        return d;
    d.reserve(p.size() - 1);
    for (size_t k = 1; k < p.size(); ++k)
        d.push_back(p[k] * static_cast<unsigned long>(k));
    return d;
}

// pseudo-remainder of a by b, sign-corrected to be a positive multiple of
// the rational remainder, so sign variations stay those of the true chain
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const size_t db = b.size() - 1;
    const Integer& lb = b.back();
    long scalings = 0;
    while (a.size() > db) {
        const size_t shift = a.size() - 1 - db;
        Integer la = a.back();
        a.pop_back();
        for (auto& c : a)
            c *= lb;
        ++scalings;
        for (size_t k = 0; k < db; ++k)
            a[shift + k] -= la * b[k];
        itrim(a);
    }
    if (sgn(lb) < 0 && scalings % 2 != 0)
        for (auto& c : a)
            c = -c;
    return a;
}

UniPoly to_unipoly(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& v : p)
        c.emplace_back(v, Integer(1));
    return UniPoly(std::move(c));
}

int sign_at(const UniPoly& p, const Rational& x) {
    return p.eval(x).sign();
}

long sign_variations(const SturmSequence& seq, const Rational& x) {
    long variations = 0;
    int prev = 0;
    for (const auto& q : seq.chain) {
        int s = sign_at(q, x);
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++variations;
        prev = s;
    }
    return variations;
}

}  // namespace

SturmSequence sturm_sequence(const UniPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("sturm_sequence: zero polynomial");
    SturmSequence seq;
    IntPoly cur = to_primitive(p);
    seq.chain.push_back(to_unipoly(cur));
    if (cur.size() <= 1)
        return seq;
    IntPoly der = iderivative(cur);
    divide_out_content(der);
    while (true) {
        seq.chain.push_back(to_unipoly(der));
        if (der.size() <= 1)
            break;
        IntPoly rem = pseudo_rem(cur, der);
        if (rem.empty())
            break;
        for (auto& c : rem)
            c = -c;
        divide_out_content(rem);
        cur = std::move(der);
        der = std::move(rem);
    }
    return seq;
}

bool is_squarefree(const SturmSequence& seq) {
    return seq.chain.back().degree() == 0;
}

long count_roots(const SturmSequence& seq, const Rational& lo, const Rational& hi) {
    if (!(lo < hi))
        throw std::invalid_argument("count_roots: need lo < hi");
    if (sign_at(seq.p(), lo) == 0 || sign_at(seq.p(), hi) == 0)
        throw std::invalid_argument("count_roots: endpoint is a root");
    return sign_variations(seq, lo) - sign_variations(seq, hi);
}

Rational cauchy_root_bound(const UniPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("cauchy_root_bound: zero polynomial");
    Rational lead = p.leading().abs();
    Rational maxratio(0);
    const auto& c = p.coefficients();
    for (size_t k = 0; k + 1 < c.size(); ++k) {
        Rational r = c[k].abs() / lead;
        if (r > maxratio)
            maxratio = r;
    }
    return Rational(1) + maxratio;
}

std::string IsolatingInterval::str() const {
    if (exact)
        return lo.str();
    return "(" + lo.str() + ", " + hi.str() + ")";
}

namespace {

// For brackets narrower than 1: the single integer inside, if any and if a
// root, pins the interval exactly. Mirror-equivariant, so the s=2 symmetry
// of interval lists survives.
std::optional<Rational> integer_root_inside(const UniPoly& p, const Rational& lo,
                                            const Rational& hi) {
    if (hi - lo >= Rational(1))
        return std::nullopt;
    Integer t;
    mpz_fdiv_q(t.get_mpz_t(), lo.numerator().get_mpz_t(), lo.denominator().get_mpz_t());
    Rational candidate(t + 1, Integer(1));
    if (lo < candidate && candidate < hi && p.eval(candidate).is_zero())
        return candidate;
    return std::nullopt;
}

// Bisect a sign-change bracket down to the target width, promoting midpoint
// and interior integer roots to exact points.
IsolatingInterval refine_bracket(const UniPoly& p, Rational lo, Rational hi,
                                 const Rational& width) {
    int slo = sign_at(p, lo);
    if (slo * sign_at(p, hi) >= 0)
        throw std::logic_error("refine_bracket: bracket without sign change");
    while (hi - lo > width) {
        Rational mid = Rational(1, 2) * (lo + hi);
        int smid = sign_at(p, mid);
        if (smid == 0)
            return {mid, mid, true};
        if (smid == slo)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    if (auto root = integer_root_inside(p, lo, hi))
        return {*root, *root, true};
    return {std::move(lo), std::move(hi), false};
}

struct Segment {
    Rational lo;
    Rational hi;
    long count;
};

}  // namespace

std::vector<IsolatingInterval> isolate_in_interval(const UniPoly& p, const Rational& lo,
                                                   const Rational& hi, const Rational& width) {
    if (p.degree() < 1)
        throw std::invalid_argument("isolate_in_interval: need degree >= 1");
    if (!(width > Rational(0)))
        throw std::invalid_argument("isolate_in_interval: width must be positive");
    SturmSequence seq = sturm_sequence(p);
    if (!is_squarefree(seq))
        throw std::invalid_argument("isolate_in_interval: polynomial must be squarefree");
    if (sign_at(p, lo) == 0 || sign_at(p, hi) == 0)
        throw std::invalid_argument("isolate_in_interval: bound is a root");

    std::vector<IsolatingInterval> found;
    std::vector<Segment> work;
    work.push_back({lo, hi, count_roots(seq, lo, hi)});

    while (!work.empty()) {
        Segment seg = std::move(work.back());
        work.pop_back();
        if (seg.count == 0)
            continue;
        if (seg.count == 1) {
            found.push_back(refine_bracket(p, seg.lo, seg.hi, width));
            continue;
        }

        Rational mid = Rational(1, 2) * (seg.lo + seg.hi);
        if (sign_at(p, mid) != 0) {
            long left = count_roots(seq, seg.lo, mid);
            work.push_back({seg.lo, mid, left});
            work.push_back({mid, seg.hi, seg.count - left});
            continue;
        }

        // Exact root at the midpoint. Carve out a punctured neighbourhood
        // containing only this root, then recurse on the two sides.
        found.push_back({mid, mid, true});
        Rational delta = Rational(1, 4) * width;
        Rational quarter = Rational(1, 4) * std::min(mid - seg.lo, seg.hi - mid);
        if (quarter < delta)
            delta = quarter;
        int retries = 0;
        while (true) {
            if (++retries > kEndpointNudgeRetries)
                throw std::logic_error("isolate_in_interval: exclusion radius not found");
            if (sign_at(p, mid - delta) == 0 || sign_at(p, mid + delta) == 0) {
                delta = Rational(1, 2) * delta;
                continue;
            }
            if (count_roots(seq, mid - delta, mid + delta) != 1) {
                delta = Rational(1, 2) * delta;
                continue;
            }
            break;
        }
        long left = count_roots(seq, seg.lo, mid - delta);
        long right = count_roots(seq, mid + delta, seg.hi);
        if (left + right + 1 != seg.count)
            throw std::logic_error("isolate_in_interval: root count mismatch after split");
        work.push_back({seg.lo, mid - delta, left});
        work.push_back({mid + delta, seg.hi, right});
    }

    std::sort(found.begin(), found.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
    return found;
}

std::vector<IsolatingInterval> isolate_roots(const KrawtchoukParams& params, const Rational& width,
                                             const PolyProvider& kp) {
    if (params.m < 1)
        throw std::invalid_argument("isolate_roots: need m >= 1");
    if (!(width > Rational(0)))
        throw std::invalid_argument("isolate_roots: width must be positive");
    UniPoly p = kp(params.n, params.s, params.m);
    if (p.degree() == 1) {
        Rational root = -p.coeff(0) / p.coeff(1);
        return {{root, root, true}};
    }
    return isolate_in_interval(p, Rational(0), Rational(params.n), width);
}

namespace {

// root(a) < root(b) certified from the stored bounds
bool separated(const IsolatingInterval& a, const IsolatingInterval& b) {
    if (a.hi < b.lo)
        return true;
    return a.hi == b.lo && !(a.exact && b.exact);
}

VerificationReport roots_report(std::string identity, ParamRecord params) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.parameters = std::move(params);
    return r;
}

void roots_failure(VerificationReport& r, ParamRecord point, std::string lhs, std::string rhs) {
    if (r.passed) {
        r.passed = false;
        r.witness = Witness{std::move(point), std::move(lhs), std::move(rhs)};
    }
}

}  // namespace

VerificationReport check_root_isolation(long n, long s, long m, const Rational& width,
                                        const PolyProvider& kp) {
    if (m < 1 || m > n)
        throw std::invalid_argument("check_root_isolation: need 1 <= m <= n");
    auto report = roots_report("root-isolation", {{"n", n}, {"s", s}, {"m", m}});

    UniPoly p = kp(n, s, m);
    SturmSequence seq = sturm_sequence(p);
    auto intervals = isolate_roots(KrawtchoukParams(n, s, m), width, kp);

    if (!is_squarefree(seq)) {
        roots_failure(report, {}, "gcd(K, K') degree " + std::to_string(seq.chain.back().degree()),
                      "constant");
        return report;
    }
    if (static_cast<long>(intervals.size()) != m) {
        roots_failure(report, {}, std::to_string(intervals.size()) + " intervals",
                      std::to_string(m) + " expected");
        return report;
    }
    long inside = count_roots(seq, Rational(0), Rational(n));
    if (inside != m) {
        roots_failure(report, {}, "Sturm count " + std::to_string(inside) + " on (0, n)",
                      std::to_string(m));
        return report;
    }
    // the Cauchy bound may fall below n; any point beyond it works
    Rational bound = cauchy_root_bound(p);
    Rational upper = std::max(bound, Rational(n + 1));
    long below = count_roots(seq, -bound, Rational(0));
    long above = count_roots(seq, Rational(n), upper);
    if (below != 0 || above != 0) {
        roots_failure(report, {}, "roots outside (0, n)", "none");
        return report;
    }

    for (size_t idx = 0; idx < intervals.size(); ++idx) {
        const auto& iv = intervals[idx];
        ParamRecord point{{"interval", static_cast<long long>(idx)}};
        if (!(Rational(0) < iv.lo) || !(iv.hi < Rational(n))) {
            roots_failure(report, point, iv.str(), "inside (0, n)");
            return report;
        }
        if (iv.exact) {
            if (iv.lo != iv.hi || !p.eval(iv.lo).is_zero()) {
                roots_failure(report, point, iv.str(), "exact root");
                return report;
            }
        } else {
            if (iv.width() > width) {
                roots_failure(report, point, iv.width().str(), "width <= " + width.str());
                return report;
            }
            if (sign_at(p, iv.lo) * sign_at(p, iv.hi) >= 0) {
                roots_failure(report, point, iv.str(), "sign change at endpoints");
                return report;
            }
            if (count_roots(seq, iv.lo, iv.hi) != 1) {
                roots_failure(report, point, iv.str(), "Sturm count 1");
                return report;
            }
        }
        if (idx > 0 && !separated(intervals[idx - 1], iv)) {
            roots_failure(report, point, intervals[idx - 1].str() + " vs " + iv.str(),
                          "disjoint intervals");
            return report;
        }
    }
    return report;
}

namespace {

// One sign-preserving bisection step; exact points cannot shrink further.
bool refine_step(const UniPoly& p, IsolatingInterval& iv) {
    if (iv.exact)
        return false;
    Rational mid = Rational(1, 2) * (iv.lo + iv.hi);
    int smid = sign_at(p, mid);
    if (smid == 0) {
        iv = {mid, mid, true};
        return true;
    }
    if (smid == sign_at(p, iv.lo))
        iv.lo = std::move(mid);
    else
        iv.hi = std::move(mid);
    return true;
}

}  // namespace

VerificationReport check_interlacing(long n, long s, long m, const Rational& width,
                                     const PolyProvider& kp) {
    if (m < 1 || m > n - 1)
        throw std::invalid_argument("check_interlacing: need 1 <= m <= n-1");
    auto report = roots_report("interlacing", {{"n", n}, {"s", s}, {"m", m}});

    UniPoly pm = kp(n, s, m);
    UniPoly pm1 = kp(n, s, m + 1);
    auto xs = isolate_roots(KrawtchoukParams(n, s, m), width, kp);
    auto ys = isolate_roots(KrawtchoukParams(n, s, m + 1), width, kp);
    if (static_cast<long>(xs.size()) != m || static_cast<long>(ys.size()) != m + 1) {
        roots_failure(report, {},
                      std::to_string(xs.size()) + " + " + std::to_string(ys.size()) + " intervals",
                      std::to_string(m) + " + " + std::to_string(m + 1));
        return report;
    }

    // alternating order y_1 x_1 y_2 x_2 ... x_m y_{m+1}
    std::vector<IsolatingInterval*> order;
    std::vector<const UniPoly*> owner;
    for (long t = 0; t <= m; ++t) {
        order.push_back(&ys[static_cast<size_t>(t)]);
        owner.push_back(&pm1);
        if (t < m) {
            order.push_back(&xs[static_cast<size_t>(t)]);
            owner.push_back(&pm);
        }
    }

    for (int round = 0; round <= kRefinementBudget; ++round) {
        bool all_separated = true;
        bool progressed = false;
        for (size_t t = 0; t + 1 < order.size(); ++t) {
            if (separated(*order[t], *order[t + 1]))
                continue;
            all_separated = false;
            progressed |= refine_step(*owner[t], *order[t]);
            progressed |= refine_step(*owner[t + 1], *order[t + 1]);
        }
        if (all_separated)
            break;
        if (!progressed || round == kRefinementBudget) {
            roots_failure(report, {}, "refinement budget exhausted", "disjoint intervals");
            return report;
        }
    }

    for (size_t t = 0; t + 1 < order.size(); ++t)
        if (!separated(*order[t], *order[t + 1])) {
            roots_failure(report, {{"position", static_cast<long long>(t)}},
                          order[t]->str() + " vs " + order[t + 1]->str(), "strict alternation");
            return report;
        }
    return report;
}

VerificationReport check_root_symmetry_s2(long n, long m, const Rational& width,
                                          const PolyProvider& kp) {
    if (m < 1 || m > n)
        throw std::invalid_argument("check_root_symmetry_s2: need 1 <= m <= n");
    auto report = roots_report("root-symmetry-s2", {{"n", n}, {"m", m}});

    auto intervals = isolate_roots(KrawtchoukParams(n, 2, m), width, kp);
    if (static_cast<long>(intervals.size()) != m) {
        roots_failure(report, {}, std::to_string(intervals.size()) + " intervals",
                      std::to_string(m));
        return report;
    }

    for (size_t j = 0; j < intervals.size(); ++j) {
        const auto& a = intervals[j];
        const auto& b = intervals[intervals.size() - 1 - j];
        IsolatingInterval reflected{Rational(n) - b.hi, Rational(n) - b.lo, b.exact};
        if (a.lo != reflected.lo || a.hi != reflected.hi || a.exact != reflected.exact) {
            roots_failure(report, {{"interval", static_cast<long long>(j)}}, a.str(),
                          reflected.str());
            return report;
        }
    }

    if (m % 2 != 0) {
        const auto& middle = intervals[static_cast<size_t>(m / 2)];
        Rational half = Rational(n, 2);
        if (!middle.contains(half)) {
            roots_failure(report, {{"interval", static_cast<long long>(m / 2)}}, middle.str(),
                          "contains n/2 = " + half.str());
            return report;
        }
        if (n % 2 == 0 && !middle.exact) {
            roots_failure(report, {{"interval", static_cast<long long>(m / 2)}}, middle.str(),
                          "exact root at n/2 = " + half.str());
            return report;
        }
    }
    return report;
}

}  // namespace kraw
