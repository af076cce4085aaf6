#include "verify.hpp"

#include <algorithm>

#include "orthogonality.hpp"
#include "roots.hpp"

namespace kraw {

std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "all") return Suite::all;
    if (name == "pascal") return Suite::pascal;
    if (name == "value-rec") return Suite::value_rec;
    if (name == "poly-rec") return Suite::poly_rec;
    if (name == "summation") return Suite::summation;
    if (name == "symmetry") return Suite::symmetry;
    if (name == "kernel") return Suite::kernel;
    if (name == "orthogonality") return Suite::orthogonality;
    if (name == "roots") return Suite::roots;
    if (name == "interlacing") return Suite::interlacing;
    return std::nullopt;
}

const char* suite_name(Suite suite) {
    switch (suite) {
        case Suite::all: return "all";
        case Suite::pascal: return "pascal";
        case Suite::value_rec: return "value-rec";
        case Suite::poly_rec: return "poly-rec";
        case Suite::summation: return "summation";
        case Suite::symmetry: return "symmetry";
        case Suite::kernel: return "kernel";
        case Suite::orthogonality: return "orthogonality";
        case Suite::roots: return "roots";
        case Suite::interlacing: return "interlacing";
    }
    return "?";
}

Rational default_width() {
    return Rational(Integer(1), ipow(Integer(2), 32));
}

namespace {

bool has_s2(const std::vector<long>& s_set) {
    return std::find(s_set.begin(), s_set.end(), 2L) != s_set.end();
}

VerificationReport check_gram_diagonal(long n, long s, const PolyProvider& kp) {
    VerificationReport report;
    report.identity = "gram-diagonal";
    report.parameters = {{"n", n}, {"s", s}};
    auto g = gram_matrix(n, s, kp);
    Integer sn = ipow(Integer(s), static_cast<unsigned long>(n));
    for (size_t k = 0; k < g.size() && report.passed; ++k)
        for (size_t l = 0; l < g.size(); ++l) {
            Rational expected =
                (k == l) ? Rational(sn * ipow(Integer(s - 1), k) *
                                        binomial(static_cast<unsigned long>(n), k),
                                    Integer(1))
                         : Rational(0);
            if (g[k][l] != expected) {
                report.passed = false;
                report.witness =
                    Witness{{{"k", static_cast<long long>(k)}, {"l", static_cast<long long>(l)}},
                            g[k][l].str(), expected.str()};
                break;
            }
        }
    return report;
}

void run_one(Suite suite, const VerifyOptions& opt, std::vector<VerificationReport>& out) {
    const auto& kp = opt.provider;
    switch (suite) {
        case Suite::all:
            break;
        case Suite::pascal:
            out.push_back(check_pascal_basis(std::max(20L, opt.n_max)));
            break;
        case Suite::value_rec:
            for (long n = 1; n <= opt.n_max; ++n)
                for (long s : opt.s_set)
                    out.push_back(check_value_recurrence(n, s, kp));
            break;
        case Suite::poly_rec:
            for (long n = 1; n <= opt.n_max; ++n)
                for (long s : opt.s_set)
                    out.push_back(check_poly_recurrence(n, s, kp));
            break;
        case Suite::summation:
            for (long n = 2; n <= opt.n_max; ++n)
                for (long s : opt.s_set)
                    for (long m = 1; m <= (opt.extended ? n : n - 1); ++m)
                        out.push_back(check_summation(n, s, m, kp));
            break;
        case Suite::symmetry:
            if (has_s2(opt.s_set))
                for (long n = 0; n <= opt.n_max; ++n)
                    for (long m = 0; m <= n; ++m)
                        out.push_back(check_symmetry_s2(n, m, kp));
            break;
        case Suite::kernel:
            for (long n = 0; n <= opt.n_max; ++n)
                for (long s : opt.s_set)
                    out.push_back(check_bivariate_kernel(n, s, kp));
            break;
        case Suite::orthogonality:
            for (long n = 0; n <= opt.n_max; ++n)
                for (long s : opt.s_set) {
                    out.push_back(check_gram_diagonal(n, s, kp));
                    for (long m = 1; m <= n; ++m)
                        out.push_back(
                            check_low_degree_orthogonality(n, s, m, opt.seed, opt.trials, kp));
                }
            break;
        case Suite::roots:
            for (long n = 1; n <= opt.n_max; ++n)
                for (long s : opt.s_set)
                    for (long m = 1; m <= n; ++m) {
                        out.push_back(check_root_isolation(n, s, m, opt.width, kp));
                        if (s == 2)
                            out.push_back(check_root_symmetry_s2(n, m, opt.width, kp));
                    }
            break;
        case Suite::interlacing:
            for (long n = 2; n <= opt.n_max; ++n)
                for (long s : opt.s_set)
                    for (long m = 1; m <= n - 1; ++m)
                        out.push_back(check_interlacing(n, s, m, opt.width, kp));
            break;
    }
}

}  // namespace

std::vector<VerificationReport> run_verify(const VerifyOptions& options) {
    VerifyOptions opt = options;
    std::sort(opt.s_set.begin(), opt.s_set.end());
    opt.s_set.erase(std::unique(opt.s_set.begin(), opt.s_set.end()), opt.s_set.end());

    std::vector<VerificationReport> reports;
    if (opt.suite != Suite::all) {
        run_one(opt.suite, opt, reports);
        return reports;
    }
    for (Suite s : {Suite::pascal, Suite::value_rec, Suite::poly_rec, Suite::summation,
                    Suite::symmetry, Suite::kernel, Suite::orthogonality, Suite::roots,
                    Suite::interlacing})
        run_one(s, opt, reports);
    return reports;
}

PolyProvider fault_injected_provider() {
    return [](long n, long s, long m) {
        UniPoly k = default_provider()(n, s, m);
        if (m == 2) {
            // 1/3 keeps the perturbed quadratic squarefree for every (n, s)
            auto coeffs = k.coefficients();
            coeffs[1] += Rational(1, 3);
            k = UniPoly(std::move(coeffs));
        }
        return k;
    };
}

}  // namespace kraw
