#include "krawtchouk.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "document.hpp"
#include "orthogonality.hpp"
#include "roots.hpp"

using namespace kraw;

struct kraw_poly {
    UniPoly value;
};

struct kraw_intervals {
    std::vector<IsolatingInterval> value;
};

struct kraw_reports {
    std::vector<VerificationReport> value;
};

namespace {

thread_local std::string g_last_error;

kraw_status fail(kraw_status status, const char* message) {
    g_last_error = message;
    return status;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

kraw_status emit(const std::string& s, char** out) {
    if (out == nullptr)
        return fail(KRAW_EINVAL, "null output pointer");
    char* copy = dup_string(s);
    if (copy == nullptr)
        return fail(KRAW_ENOMEM, "out of memory");
    *out = copy;
    return KRAW_OK;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
kraw_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(KRAW_EINVAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(KRAW_ENOMEM, "out of memory");
    } catch (const std::exception& e) {
        return fail(KRAW_EINTERNAL, e.what());
    } catch (...) {
        return fail(KRAW_EINTERNAL, "unknown error");
    }
}

kraw_status parse_rational_arg(const char* text, const char* what, Rational& out) {
    if (text == nullptr)
        return fail(KRAW_EINVAL, "null string argument");
    auto parsed = Rational::parse(text);
    if (!parsed)
        return fail(KRAW_EPARSE, (std::string(what) + ": not a rational: " + text).c_str());
    out = *parsed;
    return KRAW_OK;
}

kraw_status parse_width_arg(const char* text, Rational& out) {
    if (text == nullptr) {
        out = default_width();
        return KRAW_OK;
    }
    kraw_status st = parse_rational_arg(text, "width", out);
    if (st != KRAW_OK)
        return st;
    if (!(out > Rational(0)))
        return fail(KRAW_EINVAL, "width must be positive");
    return KRAW_OK;
}

kraw_status parse_s_set_arg(const char* text, std::vector<long>& out) {
    if (text == nullptr)
        return fail(KRAW_EINVAL, "null s_set");
    out.clear();
    std::string item;
    std::string input(text);
    size_t start = 0;
    while (start <= input.size()) {
        size_t comma = input.find(',', start);
        item = input.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (item.empty())
            return fail(KRAW_EPARSE, "s_set: empty entry");
        try {
            size_t used = 0;
            long s = std::stol(item, &used);
            if (used != item.size())
                return fail(KRAW_EPARSE, ("s_set: not an integer: " + item).c_str());
            out.push_back(s);
        } catch (const std::exception&) {
            return fail(KRAW_EPARSE, ("s_set: not an integer: " + item).c_str());
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    for (long s : out)
        if (s < 2)
            return fail(KRAW_EINVAL, "s_set: every s must be at least 2");
    return KRAW_OK;
}

kraw_status build_verify_options(const char* suite, long n_max, const char* s_set,
                                 unsigned long long seed, const char* width, int extended,
                                 VerifyOptions& out) {
    if (suite == nullptr)
        return fail(KRAW_EINVAL, "null suite");
    auto parsed_suite = parse_suite(suite);
    if (!parsed_suite)
        return fail(KRAW_EPARSE, (std::string("unknown suite: ") + suite).c_str());
    if (n_max < 1)
        return fail(KRAW_EINVAL, "n_max must be at least 1");
    out.suite = *parsed_suite;
    out.n_max = n_max;
    kraw_status st = parse_s_set_arg(s_set, out.s_set);
    if (st != KRAW_OK)
        return st;
    st = parse_width_arg(width, out.width);
    if (st != KRAW_OK)
        return st;
    out.seed = seed;
    out.extended = extended != 0;
    // Exit-code test hook; perturbs one coefficient so the suite must fail.
    const char* fault = std::getenv("KRAW_VERIFY_FAULT");
    if (fault != nullptr && fault[0] != '\0')
        out.provider = fault_injected_provider();
    return KRAW_OK;
}

kraw_status parse_format_arg(const char* format, Format& out) {
    if (format == nullptr)
        return fail(KRAW_EINVAL, "null format");
    auto parsed = parse_format(format);
    if (!parsed)
        return fail(KRAW_EPARSE, (std::string("unknown format: ") + format).c_str());
    out = *parsed;
    return KRAW_OK;
}

}  // namespace

extern "C" {

const char* kraw_status_str(kraw_status status) {
    switch (status) {
        case KRAW_OK: return "ok";
        case KRAW_EINVAL: return "invalid argument";
        case KRAW_EPARSE: return "parse error";
        case KRAW_ENOMEM: return "out of memory";
        case KRAW_EINTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* kraw_last_error(void) {
    return g_last_error.c_str();
}

void kraw_string_free(char* s) {
    std::free(s);
}

kraw_status kraw_poly_krawtchouk(long n, long s, long m, const char* method, kraw_poly** out) {
    return guarded([&]() -> kraw_status {
        if (out == nullptr || method == nullptr)
            return fail(KRAW_EINVAL, "null argument");
        auto parsed = parse_method(method);
        if (!parsed)
            return fail(KRAW_EPARSE, (std::string("unknown method: ") + method).c_str());
        UniPoly poly = construct(KrawtchoukParams(n, s, m), *parsed);
        *out = new kraw_poly{std::move(poly)};
        return KRAW_OK;
    });
}

kraw_status kraw_poly_falling_basis(long j, kraw_poly** out) {
    return guarded([&]() -> kraw_status {
        if (out == nullptr)
            return fail(KRAW_EINVAL, "null output pointer");
        if (j < 0)
            return fail(KRAW_EINVAL, "j must be nonnegative");
        *out = new kraw_poly{falling_basis(static_cast<unsigned long>(j))};
        return KRAW_OK;
    });
}

void kraw_poly_free(kraw_poly* poly) {
    delete poly;
}

long kraw_poly_degree(const kraw_poly* poly) {
    return poly == nullptr ? -1 : poly->value.degree();
}

kraw_status kraw_poly_coeff(const kraw_poly* poly, long k, char** out) {
    return guarded([&]() -> kraw_status {
        if (poly == nullptr || out == nullptr)
            return fail(KRAW_EINVAL, "null argument");
        if (k < 0)
            return fail(KRAW_EINVAL, "k must be nonnegative");
        return emit(poly->value.coeff(static_cast<size_t>(k)).str(), out);
    });
}

kraw_status kraw_poly_eval(const kraw_poly* poly, const char* x, char** out) {
    return guarded([&]() -> kraw_status {
        if (poly == nullptr)
            return fail(KRAW_EINVAL, "null polynomial");
        Rational point;
        kraw_status st = parse_rational_arg(x, "x", point);
        if (st != KRAW_OK)
            return st;
        return emit(poly->value.eval(point).str(), out);
    });
}

kraw_status kraw_value(long n, long s, long m, long i, char** out) {
    return guarded([&]() -> kraw_status {
        return emit(gf_value(KrawtchoukParams(n, s, m), i).str(), out);
    });
}

kraw_status kraw_gram_entry(long n, long s, long k, long l, char** out) {
    return guarded([&]() -> kraw_status {
        if (k < 0 || k > n || l < 0 || l > n)
            return fail(KRAW_EINVAL, "gram entry indices must lie in [0, n]");
        WeightSequence w = WeightSequence::make(n, s);
        UniPoly pk = poly_from_definition(KrawtchoukParams(n, s, k));
        UniPoly pl = poly_from_definition(KrawtchoukParams(n, s, l));
        return emit(inner_product(pk, pl, w).str(), out);
    });
}

kraw_status kraw_isolate_roots(long n, long s, long m, const char* width, kraw_intervals** out) {
    return guarded([&]() -> kraw_status {
        if (out == nullptr)
            return fail(KRAW_EINVAL, "null output pointer");
        Rational w;
        kraw_status st = parse_width_arg(width, w);
        if (st != KRAW_OK)
            return st;
        auto intervals = isolate_roots(KrawtchoukParams(n, s, m), w);
        *out = new kraw_intervals{std::move(intervals)};
        return KRAW_OK;
    });
}

void kraw_intervals_free(kraw_intervals* intervals) {
    delete intervals;
}

size_t kraw_intervals_count(const kraw_intervals* intervals) {
    return intervals == nullptr ? 0 : intervals->value.size();
}

int kraw_interval_exact(const kraw_intervals* intervals, size_t index) {
    if (intervals == nullptr || index >= intervals->value.size())
        return 0;
    return intervals->value[index].exact ? 1 : 0;
}

kraw_status kraw_interval_lo(const kraw_intervals* intervals, size_t index, char** out) {
    if (intervals == nullptr || index >= intervals->value.size())
        return fail(KRAW_EINVAL, "interval index out of range");
    return emit(intervals->value[index].lo.str(), out);
}

kraw_status kraw_interval_hi(const kraw_intervals* intervals, size_t index, char** out) {
    if (intervals == nullptr || index >= intervals->value.size())
        return fail(KRAW_EINVAL, "interval index out of range");
    return emit(intervals->value[index].hi.str(), out);
}

kraw_status kraw_verify(const char* suite, long n_max, const char* s_set, unsigned long long seed,
                        const char* width, int extended, kraw_reports** out) {
    return guarded([&]() -> kraw_status {
        if (out == nullptr)
            return fail(KRAW_EINVAL, "null output pointer");
        VerifyOptions options;
        kraw_status st = build_verify_options(suite, n_max, s_set, seed, width, extended, options);
        if (st != KRAW_OK)
            return st;
        *out = new kraw_reports{run_verify(options)};
        return KRAW_OK;
    });
}

void kraw_reports_free(kraw_reports* reports) {
    delete reports;
}

size_t kraw_reports_count(const kraw_reports* reports) {
    return reports == nullptr ? 0 : reports->value.size();
}

int kraw_reports_all_passed(const kraw_reports* reports) {
    if (reports == nullptr)
        return 0;
    for (const auto& r : reports->value)
        if (!r.passed)
            return 0;
    return 1;
}

int kraw_report_passed(const kraw_reports* reports, size_t index) {
    if (reports == nullptr || index >= reports->value.size())
        return 0;
    return reports->value[index].passed ? 1 : 0;
}

kraw_status kraw_report_identity(const kraw_reports* reports, size_t index, char** out) {
    if (reports == nullptr || index >= reports->value.size())
        return fail(KRAW_EINVAL, "report index out of range");
    return emit(reports->value[index].identity, out);
}

kraw_status kraw_doc_coeffs(long n, long s, long m, const char* method, const char* format,
                            char** out) {
    return guarded([&]() -> kraw_status {
        if (method == nullptr)
            return fail(KRAW_EINVAL, "null method");
        Format fmt{};
        kraw_status st = parse_format_arg(format, fmt);
        if (st != KRAW_OK)
            return st;
        std::string name(method);
        if (name != "all" && !parse_method(name))
            return fail(KRAW_EPARSE, (std::string("unknown method: ") + method).c_str());
        return emit(render_coeffs(n, s, m, name, fmt), out);
    });
}

kraw_status kraw_doc_table(long n, long s, long m_max, const char* format, char** out) {
    return guarded([&]() -> kraw_status {
        Format fmt{};
        kraw_status st = parse_format_arg(format, fmt);
        if (st != KRAW_OK)
            return st;
        return emit(render_table(n, s, m_max, fmt), out);
    });
}

kraw_status kraw_doc_roots(long n, long s, long m, const char* width, const char* format,
                           char** out) {
    return guarded([&]() -> kraw_status {
        Format fmt{};
        kraw_status st = parse_format_arg(format, fmt);
        if (st != KRAW_OK)
            return st;
        Rational w;
        st = parse_width_arg(width, w);
        if (st != KRAW_OK)
            return st;
        return emit(render_roots(n, s, m, w, fmt), out);
    });
}

kraw_status kraw_doc_gram(long n, long s, const char* format, char** out) {
    return guarded([&]() -> kraw_status {
        Format fmt{};
        kraw_status st = parse_format_arg(format, fmt);
        if (st != KRAW_OK)
            return st;
        return emit(render_gram(n, s, fmt), out);
    });
}

kraw_status kraw_doc_verify(const char* suite, long n_max, const char* s_set,
                            unsigned long long seed, const char* width, int extended,
                            const char* format, int* all_passed, char** out) {
    return guarded([&]() -> kraw_status {
        Format fmt{};
        kraw_status st = parse_format_arg(format, fmt);
        if (st != KRAW_OK)
            return st;
        VerifyOptions options;
        st = build_verify_options(suite, n_max, s_set, seed, width, extended, options);
        if (st != KRAW_OK)
            return st;
        bool passed = false;
        std::string doc = render_verify(options, fmt, passed);
        st = emit(doc, out);
        if (st != KRAW_OK)
            return st;
        if (all_passed != nullptr)
            *all_passed = passed ? 1 : 0;
        return KRAW_OK;
    });
}

}  // extern "C"
