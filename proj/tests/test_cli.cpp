// End-to-end tests of the kraw binary: golden documents, format agreement
// and the exit-code contract. The binary path and golden directory come in
// through compile definitions.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string normalize_newlines(std::string text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (c != '\r')
            out += c;
    return out;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + "\"" KRAW_CLI_PATH "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    result.exit_code = WEXITSTATUS(status);
    result.output = normalize_newlines(result.output);
    return result;
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(KRAW_GOLDEN_DIR "/") + name, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return normalize_newlines(buffer.str());
}

}  // namespace

TEST_CASE("golden documents are byte-stable") {
    const std::pair<const char*, const char*> cases[] = {
        {"coeffs_all.json", "coeffs --n 4 --s 2 --m 2 --method all --format json"},
        {"table.json", "table --n 4 --s 2 --m-max 2 --format json"},
        {"roots.json", "roots --n 6 --s 2 --m 3 --format json"},
        {"gram.json", "gram --n 2 --s 3 --format json"},
        {"verify_summation.json", "verify --suite summation --n-max 4 --s-set 2 --format json"},
    };
    for (const auto& [golden, args] : cases) {
        CAPTURE(golden);
        auto result = run_cli(args);
        CHECK(result.exit_code == 0);
        CHECK(result.output == read_golden(golden));
        // a second run must reproduce the bytes
        CHECK(run_cli(args).output == result.output);
    }
}

TEST_CASE("plain coefficients, constant term first") {
    auto result = run_cli("coeffs --n 4 --s 2 --m 2 --method definition --format plain");
    CHECK(result.exit_code == 0);
    CHECK(result.output == "6 -8 2\n");

    CHECK(run_cli("coeffs --n 4 --s 2 --m 0 --format plain").output == "1\n");
    // n(s-1), -s
    CHECK(run_cli("coeffs --n 9 --s 4 --m 1 --format plain").output == "27 -4\n");
}

TEST_CASE("csv and json carry identical values") {
    auto json_run = run_cli("table --n 5 --s 3 --m-max 3 --format json");
    auto csv_run = run_cli("table --n 5 --s 3 --m-max 3 --format csv");
    REQUIRE(json_run.exit_code == 0);
    REQUIRE(csv_run.exit_code == 0);

    auto doc = nlohmann::json::parse(json_run.output);
    std::istringstream csv(csv_run.output);
    std::string line;
    std::getline(csv, line);  // header
    CHECK(line == "m,0,1,2,3,4,5");
    size_t row = 0;
    while (std::getline(csv, line)) {
        std::istringstream cells(line);
        std::string cell;
        std::getline(cells, cell, ',');
        CHECK(cell == std::to_string(row));
        size_t col = 0;
        while (std::getline(cells, cell, ',')) {
            CHECK(cell == doc["payload"]["rows"][row][col].get<std::string>());
            ++col;
        }
        CHECK(col == 6);
        ++row;
    }
    CHECK(row == 4);
}

TEST_CASE("root documents carry exact rational strings") {
    auto result = run_cli("roots --n 4 --s 2 --m 2 --format json");
    REQUIRE(result.exit_code == 0);
    auto doc = nlohmann::json::parse(result.output);
    CHECK(doc["payload"]["count"] == 2);
    CHECK(doc["payload"]["intervals"][0]["lo"] == "1");
    CHECK(doc["payload"]["intervals"][0]["exact"] == true);
    CHECK(doc["payload"]["intervals"][1]["lo"] == "3");

    // middle root of K_{3,6,2} reported exactly
    auto mid = run_cli("roots --n 6 --s 2 --m 3 --format csv");
    CHECK(mid.output.find("1,3,3,true") != std::string::npos);

    // K_{1,4,2}: exact root at n(s-1)/s = 2
    auto lin = run_cli("roots --n 4 --s 2 --m 1 --format plain");
    CHECK(lin.output == "2 2 exact 2.000000000000\n");
}

TEST_CASE("exit code contract") {
    CHECK(run_cli("verify --suite pascal --n-max 2 --s-set 2 --format plain").exit_code == 0);

    // usage errors
    CHECK(run_cli("coeffs --n 4 --s 2").exit_code == 2);            // missing --m
    CHECK(run_cli("coeffs --n 4 --s 2 --m 9").exit_code == 2);      // m > n
    CHECK(run_cli("coeffs --n 4 --s 1 --m 2").exit_code == 2);      // s < 2
    CHECK(run_cli("table --n 4 --s 2 --m-max 9").exit_code == 2);   // m_max > n
    CHECK(run_cli("roots --n 4 --s 2 --m 2 --width junk").exit_code == 2);
    CHECK(run_cli("roots --n 4 --s 2 --m 2 --width 0").exit_code == 2);
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
    CHECK(run_cli("verify --s-set 2,x").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("coeffs --garbage-flag 7").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);

    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("fault-injected verification exits 1 with the first failing point") {
    auto result = run_cli("verify --suite value-rec --n-max 4 --s-set 2 --format json",
                          "KRAW_VERIFY_FAULT=1 ");
    CHECK(result.exit_code == 1);

    auto doc = nlohmann::json::parse(result.output);
    CHECK(doc["payload"]["all_passed"] == false);
    bool saw_failure = false;
    for (const auto& report : doc["payload"]["reports"]) {
        if (report["passed"].get<bool>())
            continue;
        saw_failure = true;
        auto point = report["witness"]["point"];
        CHECK(point["m"] == 2);
        CHECK(point["i"] == 1);
    }
    CHECK(saw_failure);

    // without the fault the same invocation passes
    CHECK(run_cli("verify --suite value-rec --n-max 4 --s-set 2 --format json").exit_code == 0);
}
