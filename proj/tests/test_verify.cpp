#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "document.hpp"

using namespace kraw;

TEST_CASE("suite names round-trip") {
    for (const char* name : {"all", "pascal", "value-rec", "poly-rec", "summation", "symmetry",
                             "kernel", "orthogonality", "roots", "interlacing"}) {
        auto suite = parse_suite(name);
        REQUIRE(suite.has_value());
        CHECK(std::string(suite_name(*suite)) == name);
    }
    CHECK_FALSE(parse_suite("everything"));
}

TEST_CASE("default width is 2^-32") {
    CHECK(default_width() == Rational(Integer(1), ipow(Integer(2), 32)));
    CHECK(default_width().str() == "1/4294967296");
}

TEST_CASE("small full run passes and is deterministic") {
    VerifyOptions opt;
    opt.suite = Suite::all;
    opt.n_max = 4;
    opt.s_set = {2, 3};

    auto first = run_verify(opt);
    CHECK(!first.empty());
    for (const auto& r : first) {
        CHECK(r.passed);
        CHECK_FALSE(r.witness.has_value());
    }

    auto second = run_verify(opt);
    REQUIRE(first.size() == second.size());
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].identity == second[i].identity);
        CHECK(first[i].parameters == second[i].parameters);
    }
}

TEST_CASE("extended flag adds the m = n summation points") {
    VerifyOptions opt;
    opt.suite = Suite::summation;
    opt.n_max = 5;
    opt.s_set = {2};

    auto base = run_verify(opt);
    opt.extended = true;
    auto extended = run_verify(opt);
    CHECK(extended.size() == base.size() + 4);  // one extra point per n = 2..5
    for (const auto& r : extended)
        CHECK(r.passed);
}

TEST_CASE("duplicate s entries are collapsed") {
    VerifyOptions opt;
    opt.suite = Suite::poly_rec;
    opt.n_max = 3;
    opt.s_set = {3, 2, 3, 2};
    auto reports = run_verify(opt);
    CHECK(reports.size() == 6);  // n in 1..3 times s in {2,3}
}

TEST_CASE("fault-injected provider fails the suite with minimal witnesses") {
    VerifyOptions opt;
    opt.suite = Suite::poly_rec;
    opt.n_max = 4;
    opt.s_set = {2};
    opt.provider = fault_injected_provider();

    auto reports = run_verify(opt);
    bool any_failed = false;
    for (const auto& r : reports) {
        if (r.parameters == ParamRecord{{"n", 1}, {"s", 2}}) {
            CHECK(r.passed);  // no K_2 involved
        }
        if (!r.passed) {
            any_failed = true;
            REQUIRE(r.witness.has_value());
            ParamRecord expected{{"m", 2}};
            CHECK(r.witness->point == expected);
        }
    }
    CHECK(any_failed);
}

TEST_CASE("verify document renders in all three formats") {
    VerifyOptions opt;
    opt.suite = Suite::summation;
    opt.n_max = 4;
    opt.s_set = {2};

    bool all_passed = false;
    std::string json_doc = render_verify(opt, Format::json, all_passed);
    CHECK(all_passed);
    CHECK(json_doc.find("\"schema_version\": \"1\"") != std::string::npos);
    CHECK(json_doc.find("\"all_passed\": true") != std::string::npos);

    std::string csv_doc = render_verify(opt, Format::csv, all_passed);
    CHECK(csv_doc.rfind("identity,parameters,passed", 0) == 0);

    std::string plain_doc = render_verify(opt, Format::plain, all_passed);
    CHECK(plain_doc.find("summation n=2 s=2 m=1 pass") != std::string::npos);
}
