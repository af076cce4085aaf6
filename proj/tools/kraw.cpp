// Command-line front end. Links only the public C API so it exercises the
// same surface external consumers see.

#include <CLI11.hpp>

#include <cstdio>
#include <string>

#include "krawtchouk.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

int print_document(kraw_status status, char* doc) {
    if (status != KRAW_OK) {
        std::fprintf(stderr, "kraw: %s\n", kraw_last_error());
        return kExitUsage;
    }
    std::fputs(doc, stdout);
    kraw_string_free(doc);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Krawtchouk polynomial toolbox: exact constructions, value tables,\n"
                 "certified root isolation and identity verification."};
    app.require_subcommand(1);

    long n = 0;
    long s = 2;
    long m = 0;
    long m_max = 0;
    long n_max = 12;
    unsigned long long seed = 1;
    bool extended = false;
    std::string method = "definition";
    std::string format = "json";
    std::string width;
    std::string suite = "all";
    std::string s_set = "2,3,5";

    auto* coeffs = app.add_subcommand("coeffs", "Coefficients of K_{m,n,s}");
    coeffs->add_option("--n", n, "Length parameter n")->required();
    coeffs->add_option("--s", s, "Alphabet size s (>= 2)")->required();
    coeffs->add_option("--m", m, "Degree index m")->required();
    coeffs->add_option("--method", method,
                       "Construction: definition | gf | recurrence | all (default definition)");
    coeffs->add_option("--format", format, "Output: json | csv | plain (default json)");

    auto* table = app.add_subcommand("table", "Value table K_m(i), m <= m-max, i <= n");
    table->add_option("--n", n, "Length parameter n")->required();
    table->add_option("--s", s, "Alphabet size s (>= 2)")->required();
    table->add_option("--m-max", m_max, "Last row index")->required();
    table->add_option("--format", format, "Output: json | csv | plain (default json)");

    auto* roots = app.add_subcommand("roots", "Certified isolating intervals for the roots");
    roots->add_option("--n", n, "Length parameter n")->required();
    roots->add_option("--s", s, "Alphabet size s (>= 2)")->required();
    roots->add_option("--m", m, "Degree index m (>= 1)")->required();
    roots->add_option("--width", width, "Interval width bound, exact rational (default 1/2^32)");
    roots->add_option("--format", format, "Output: json | csv | plain (default json)");

    auto* gram = app.add_subcommand("gram", "Gram matrix of K_0..K_n");
    gram->add_option("--n", n, "Length parameter n")->required();
    gram->add_option("--s", s, "Alphabet size s (>= 2)")->required();
    gram->add_option("--format", format, "Output: json | csv | plain (default json)");

    auto* verify = app.add_subcommand("verify", "Run the identity verification suite");
    verify->add_option("--suite", suite,
                       "all | pascal | value-rec | poly-rec | summation | symmetry | kernel | "
                       "orthogonality | roots | interlacing (default all)");
    verify->add_option("--n-max", n_max, "Sweep bound on n (default 12)");
    verify->add_option("--s-set", s_set, "Comma-separated alphabet sizes (default 2,3,5)");
    verify->add_option("--seed", seed, "Seed for the randomized orthogonality trials (default 1)");
    verify->add_option("--width", width, "Root isolation width, exact rational (default 1/2^32)");
    verify->add_flag("--extended", extended, "Include the m = n summation edge case");
    verify->add_option("--format", format, "Output: json | csv | plain (default json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const char* width_arg = width.empty() ? nullptr : width.c_str();
    char* doc = nullptr;

    if (coeffs->parsed()) {
        kraw_status status = kraw_doc_coeffs(n, s, m, method.c_str(), format.c_str(), &doc);
        return print_document(status, doc);
    }
    if (table->parsed()) {
        kraw_status status = kraw_doc_table(n, s, m_max, format.c_str(), &doc);
        return print_document(status, doc);
    }
    if (roots->parsed()) {
        kraw_status status = kraw_doc_roots(n, s, m, width_arg, format.c_str(), &doc);
        return print_document(status, doc);
    }
    if (gram->parsed()) {
        kraw_status status = kraw_doc_gram(n, s, format.c_str(), &doc);
        return print_document(status, doc);
    }
    if (verify->parsed()) {
        int all_passed = 0;
        kraw_status status = kraw_doc_verify(suite.c_str(), n_max, s_set.c_str(), seed, width_arg,
                                             extended ? 1 : 0, format.c_str(), &all_passed, &doc);
        int code = print_document(status, doc);
        if (code != kExitOk)
            return code;
        return all_passed != 0 ? kExitOk : kExitVerifyFailed;
    }
    return kExitUsage;
}
