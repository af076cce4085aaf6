#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "krawtchouk.h"

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    kraw_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("polynomial handles") {
    kraw_poly* poly = nullptr;
    REQUIRE(kraw_poly_krawtchouk(4, 2, 2, "definition", &poly) == KRAW_OK);
    CHECK(kraw_poly_degree(poly) == 2);

    char* out = nullptr;
    REQUIRE(kraw_poly_coeff(poly, 0, &out) == KRAW_OK);
    CHECK(take(out) == "6");
    REQUIRE(kraw_poly_coeff(poly, 1, &out) == KRAW_OK);
    CHECK(take(out) == "-8");
    REQUIRE(kraw_poly_coeff(poly, 2, &out) == KRAW_OK);
    CHECK(take(out) == "2");
    REQUIRE(kraw_poly_coeff(poly, 9, &out) == KRAW_OK);
    CHECK(take(out) == "0");

    REQUIRE(kraw_poly_eval(poly, "2", &out) == KRAW_OK);
    CHECK(take(out) == "-2");
    REQUIRE(kraw_poly_eval(poly, "1/2", &out) == KRAW_OK);
    CHECK(take(out) == "5/2");
    CHECK(kraw_poly_eval(poly, "nonsense", &out) == KRAW_EPARSE);
    kraw_poly_free(poly);

    poly = nullptr;
    REQUIRE(kraw_poly_falling_basis(3, &poly) == KRAW_OK);
    REQUIRE(kraw_poly_eval(poly, "5", &out) == KRAW_OK);
    CHECK(take(out) == "10");
    kraw_poly_free(poly);

    CHECK(kraw_poly_krawtchouk(4, 2, 9, "definition", &poly) == KRAW_EINVAL);
    CHECK(kraw_poly_krawtchouk(4, 1, 2, "definition", &poly) == KRAW_EINVAL);
    CHECK(kraw_poly_krawtchouk(4, 2, 2, "magic", &poly) == KRAW_EPARSE);
    CHECK(std::string(kraw_last_error()).find("magic") != std::string::npos);
}

TEST_CASE("constructor methods agree through the C surface") {
    for (const char* method : {"definition", "gf", "recurrence"}) {
        kraw_poly* poly = nullptr;
        REQUIRE(kraw_poly_krawtchouk(6, 3, 4, method, &poly) == KRAW_OK);
        char* out = nullptr;
        REQUIRE(kraw_poly_eval(poly, "0", &out) == KRAW_OK);
        CHECK(take(out) == "240");  // C(6,4) * 2^4
        kraw_poly_free(poly);
    }
}

TEST_CASE("values and gram entries") {
    char* out = nullptr;
    REQUIRE(kraw_value(4, 2, 2, 0, &out) == KRAW_OK);
    CHECK(take(out) == "6");
    REQUIRE(kraw_value(4, 2, 2, 4, &out) == KRAW_OK);
    CHECK(take(out) == "6");
    CHECK(kraw_value(4, 2, 2, 5, &out) == KRAW_EINVAL);

    REQUIRE(kraw_gram_entry(1, 3, 0, 0, &out) == KRAW_OK);
    CHECK(take(out) == "3");
    REQUIRE(kraw_gram_entry(1, 3, 1, 1, &out) == KRAW_OK);
    CHECK(take(out) == "6");
    REQUIRE(kraw_gram_entry(1, 3, 0, 1, &out) == KRAW_OK);
    CHECK(take(out) == "0");
    CHECK(kraw_gram_entry(1, 3, 2, 0, &out) == KRAW_EINVAL);
}

TEST_CASE("root isolation handles") {
    kraw_intervals* intervals = nullptr;
    REQUIRE(kraw_isolate_roots(4, 2, 2, nullptr, &intervals) == KRAW_OK);
    REQUIRE(kraw_intervals_count(intervals) == 2);
    CHECK(kraw_interval_exact(intervals, 0) == 1);
    char* out = nullptr;
    REQUIRE(kraw_interval_lo(intervals, 0, &out) == KRAW_OK);
    CHECK(take(out) == "1");
    REQUIRE(kraw_interval_hi(intervals, 1, &out) == KRAW_OK);
    CHECK(take(out) == "3");
    CHECK(kraw_interval_lo(intervals, 2, &out) == KRAW_EINVAL);
    kraw_intervals_free(intervals);

    CHECK(kraw_isolate_roots(4, 2, 2, "0", &intervals) == KRAW_EINVAL);
    CHECK(kraw_isolate_roots(4, 2, 2, "bogus", &intervals) == KRAW_EPARSE);
    CHECK(kraw_isolate_roots(4, 2, 0, nullptr, &intervals) == KRAW_EINVAL);
}

TEST_CASE("verification reports") {
    kraw_reports* reports = nullptr;
    REQUIRE(kraw_verify("summation", 4, "2", 1, nullptr, 0, &reports) == KRAW_OK);
    REQUIRE(kraw_reports_count(reports) > 0);
    CHECK(kraw_reports_all_passed(reports) == 1);
    CHECK(kraw_report_passed(reports, 0) == 1);
    char* out = nullptr;
    REQUIRE(kraw_report_identity(reports, 0, &out) == KRAW_OK);
    CHECK(take(out) == "summation");
    kraw_reports_free(reports);

    CHECK(kraw_verify("bogus", 4, "2", 1, nullptr, 0, &reports) == KRAW_EPARSE);
    CHECK(kraw_verify("all", 0, "2", 1, nullptr, 0, &reports) == KRAW_EINVAL);
    CHECK(kraw_verify("all", 4, "2,x", 1, nullptr, 0, &reports) == KRAW_EPARSE);
    CHECK(kraw_verify("all", 4, "2,1", 1, nullptr, 0, &reports) == KRAW_EINVAL);
}

TEST_CASE("rendered documents") {
    char* out = nullptr;
    REQUIRE(kraw_doc_coeffs(4, 2, 2, "definition", "plain", &out) == KRAW_OK);
    CHECK(take(out) == "6 -8 2\n");

    REQUIRE(kraw_doc_coeffs(4, 2, 2, "all", "json", &out) == KRAW_OK);
    std::string doc = take(out);
    CHECK(doc.find("\"agree\": true") != std::string::npos);
    CHECK(doc.find("\"schema_version\": \"1\"") != std::string::npos);

    REQUIRE(kraw_doc_table(4, 2, 2, "plain", &out) == KRAW_OK);
    CHECK(take(out) == "1 1 1 1 1\n4 2 0 -2 -4\n6 0 -2 0 6\n");

    REQUIRE(kraw_doc_roots(4, 2, 1, nullptr, "csv", &out) == KRAW_OK);
    CHECK(take(out) == "index,lo,hi,exact\n0,2,2,true\n");

    REQUIRE(kraw_doc_gram(2, 2, "plain", &out) == KRAW_OK);
    CHECK(take(out) == "4 0 0\n0 8 0\n0 0 4\n");

    int all_passed = 0;
    REQUIRE(kraw_doc_verify("pascal", 4, "2", 1, nullptr, 0, "plain", &all_passed, &out) ==
            KRAW_OK);
    CHECK(all_passed == 1);
    CHECK(take(out) == "pascal-basis j_max=20 pass\n1/1 passed\n");

    CHECK(kraw_doc_coeffs(4, 2, 2, "definition", "yaml", &out) == KRAW_EPARSE);
    CHECK(kraw_doc_table(4, 2, 9, "json", &out) == KRAW_EINVAL);
}
